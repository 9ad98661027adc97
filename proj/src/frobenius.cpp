#include "siltkit/frobenius.hpp"

#include <algorithm>
#include <numeric>

namespace silt {

namespace {

Matrix gram_of(const Algebra& a, const Vec& lambda) {
    const int d = a.dim();
    Matrix g(a.field, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            uint64_t acc = 0;
            for (const auto& [k, v] : a.table(i, j))
                acc += (uint64_t)v * lambda[k] % a.field.p;
            g(i, j) = static_cast<uint32_t>(acc % a.field.p);
        }
    return g;
}

Vec space_combo(const Matrix& space, const Vec& coords) { return space.mul_vec(coords); }

// nu0(e_i) is a complete orthogonal primitive idempotent family; conjugate it
// back onto the e_i by an inner automorphism so that the returned Nakayama
// automorphism permutes idempotent basis elements exactly.
std::optional<AlgebraAutomorphism> normalize_idempotents(const Algebra& a, const Matrix& nu0,
                                                         Rng& rng) {
    const int n = a.num_vertices;
    const int d = a.dim();
    bool already = true;
    for (int v = 0; v < n && already; ++v) {
        AlgebraElement img = nu0.mul_vec(a.idempotent(v));
        bool is_basis_idem = false;
        for (int w = 0; w < n; ++w)
            if (img == a.idempotent(w)) { is_basis_idem = true; break; }
        already = is_basis_idem;
    }
    if (already) {
        try {
            return validate_automorphism(a, nu0);
        } catch (const MathError&) {
            return std::nullopt;
        }
    }

    std::vector<AlgebraElement> x_parts(n), y_parts(n);
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
        AlgebraElement fi = nu0.mul_vec(a.idempotent(i));
        Matrix lf = a.left_mult_matrix(fi);
        Matrix rf = a.right_mult_matrix(fi);
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
            if (used[j]) continue;
            AlgebraElement ej = a.idempotent(j);
            // candidate x in e_j A f_i, y in f_i A e_j with xy = e_j, yx = f_i
            Matrix lx_space(a.field, d, d), ly_space(a.field, d, d);
            Matrix lej = a.left_mult_matrix(ej), rej = a.right_mult_matrix(ej);
            lx_space = lej.mul(rf);   // z -> e_j z f_i
            ly_space = lf.mul(rej);   // z -> f_i z e_j
            Matrix xs = lx_space.image_basis();
            Matrix ys = ly_space.image_basis();
            if (xs.cols() == 0 || ys.cols() == 0) continue;
            for (int attempt = 0; attempt < 30 + xs.cols() && !found; ++attempt) {
                AlgebraElement x;
                if (attempt < xs.cols()) {
                    x = xs.col_vec(attempt);
                } else {
                    Vec c(xs.cols());
                    for (auto& v : c) v = rng.below(a.field.p);
                    x = xs.mul_vec(c);
                }
                if (a.is_zero(x)) continue;
                Matrix lx = a.left_mult_matrix(x);
                Matrix rx = a.right_mult_matrix(x);
                Matrix sys = lx.mul(ys).vstack(rx.mul(ys));
                Vec rhs = ej;
                rhs.insert(rhs.end(), fi.begin(), fi.end());
                if (auto sol = sys.solve(rhs)) {
                    AlgebraElement y = ys.mul_vec(*sol);
                    if (a.multiply(x, y) == ej && a.multiply(y, x) == fi) {
                        x_parts[i] = x;
                        y_parts[i] = y;
                        used[j] = 1;
                        found = true;
                    }
                }
            }
        }
        if (!found) return std::nullopt;
    }
    AlgebraElement u = a.zero(), uinv = a.zero();
    for (int i = 0; i < n; ++i) {
        u = a.add(u, x_parts[i]);
        uinv = a.add(uinv, y_parts[i]);
    }
    if (a.multiply(u, uinv) != a.unit() || a.multiply(uinv, u) != a.unit())
        return std::nullopt;
    Matrix conj = a.left_mult_matrix(u).mul(a.right_mult_matrix(uinv));
    Matrix nu = conj.mul(nu0);
    try {
        return validate_automorphism(a, nu);
    } catch (const MathError&) {
        return std::nullopt;
    }
}

std::optional<FrobeniusForm> form_from_functional(const Algebra& a, const Vec& lambda,
                                                  Rng& rng) {
    Matrix g = gram_of(a, lambda);
    auto ginv = g.inverse();
    if (!ginv) return std::nullopt;
    Matrix nu0 = ginv->mul(g.transpose());
    auto nak = normalize_idempotents(a, nu0, rng);
    if (!nak) return std::nullopt;
    return FrobeniusForm{lambda, std::move(g), std::move(*nak)};
}

}  // namespace

std::optional<FrobeniusForm> frobenius_form(const Algebra& a, bool require_symmetric,
                                            Rng& rng) {
    const int d = a.dim();
    const uint32_t p = a.field.p;
    Matrix space = Matrix::identity(a.field, d);
    if (require_symmetric) {
        // lambda(b_i b_j) = lambda(b_j b_i) for all pairs
        std::vector<Vec> rows;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                Vec row(d, 0);
                for (const auto& [k, v] : a.table(i, j)) row[k] = a.field.add(row[k], v);
                for (const auto& [k, v] : a.table(j, i)) row[k] = a.field.sub(row[k], v);
                bool nz = false;
                for (uint32_t x : row)
                    if (x) { nz = true; break; }
                if (nz) rows.push_back(std::move(row));
            }
        Matrix cons(a.field, (int)rows.size(), d);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < d; ++c) cons((int)r, c) = rows[r][c];
        space = Echelon(cons).kernel_basis();
    }
    const int s = space.cols();
    if (s == 0) return std::nullopt;

    // seeded sampling
    for (int attempt = 0; attempt < 150; ++attempt) {
        Vec coords(s);
        for (auto& v : coords) v = rng.below(p);
        Vec lambda = space_combo(space, coords);
        if (auto form = form_from_functional(a, lambda, rng)) return form;
    }
    // deterministic greedy rank climb
    {
        Vec lambda(d, 0);
        int best_rank = 0;
        bool improved = true;
        int sweeps = 0;
        while (improved && best_rank < d && sweeps++ <= s + 2) {
            improved = false;
            for (int k = 0; k < s; ++k) {
                Vec dir = space.col_vec(k);
                std::vector<uint32_t> scalars;
                if (p <= 19) {
                    for (uint32_t c = 1; c < p; ++c) scalars.push_back(c);
                } else {
                    for (int t = 0; t < 24; ++t) scalars.push_back(1 + rng.below(p - 1));
                }
                for (uint32_t c : scalars) {
                    Vec cand = lambda;
                    for (int t = 0; t < d; ++t)
                        cand[t] = a.field.add(cand[t], a.field.mul(c, dir[t]));
                    int r = gram_of(a, cand).rank();
                    if (r > best_rank) {
                        best_rank = r;
                        lambda = cand;
                        improved = true;
                    }
                }
            }
        }
        if (best_rank == d) {
            if (auto form = form_from_functional(a, lambda, rng)) return form;
        }
    }
    // exhaustive over the whole (projectivized) space when it is small
    double total = 1;
    for (int k = 0; k < s && total < (1 << 22); ++k) total *= p;
    if (total <= (1 << 22)) {
        Vec coords(s, 0);
        while (true) {
            int pos = 0;
            while (pos < s && coords[pos] == p - 1) coords[pos++] = 0;
            if (pos == s) break;
            ++coords[pos];
            Vec lambda = space_combo(space, coords);
            if (gram_of(a, lambda).rank() == d) {
                if (auto form = form_from_functional(a, lambda, rng)) return form;
            }
        }
    }
    return std::nullopt;
}

SelfInjectivityReport self_injectivity_report(const Algebra& a, Rng& rng) {
    SelfInjectivityReport rep;
    rep.socle_vectors.resize(a.num_vertices);
    std::vector<int> soc_vertex(a.num_vertices, -1);
    bool simple_socles = true;
    for (int v = 0; v < a.num_vertices; ++v) {
        Matrix soc = socle_of_projective(a, v);
        const auto& basis = a.proj_basis(v);
        std::vector<int> by_vertex(a.num_vertices, 0);
        const int total = soc.cols();
        for (int w = 0; w < a.num_vertices; ++w) {
            // dim of soc * e_w = dim soc - rank(soc with rows of target w removed)
            std::vector<int> keep;
            for (size_t r = 0; r < basis.size(); ++r)
                if (a.basis_tgt[basis[r]] != w) keep.push_back((int)r);
            Matrix restr(a.field, (int)keep.size(), soc.cols());
            for (size_t r = 0; r < keep.size(); ++r)
                for (int c = 0; c < soc.cols(); ++c) restr((int)r, c) = soc(keep[r], c);
            by_vertex[w] = total - restr.rank();
        }
        rep.socle_vectors[v] = by_vertex;
        if (total != 1) {
            simple_socles = false;
        } else {
            for (int w = 0; w < a.num_vertices; ++w)
                if (by_vertex[w] == 1) soc_vertex[v] = w;
        }
    }
    bool permutation = simple_socles;
    if (simple_socles) {
        std::vector<char> hit(a.num_vertices, 0);
        for (int v = 0; v < a.num_vertices; ++v) {
            if (soc_vertex[v] < 0 || hit[soc_vertex[v]]) { permutation = false; break; }
            hit[soc_vertex[v]] = 1;
        }
    }
    rep.self_injective = simple_socles && permutation;
    if (rep.self_injective) {
        rep.nakayama_perm = soc_vertex;
        rep.weakly_symmetric = true;
        for (int v = 0; v < a.num_vertices; ++v)
            if (soc_vertex[v] != v) rep.weakly_symmetric = false;
        rep.symmetric = frobenius_form(a, true, rng).has_value();
    }
    return rep;
}

AlgebraElement TrivialExtension::include(const AlgebraElement& a) const {
    AlgebraElement r(lambda.dim(), 0);
    std::copy(a.begin(), a.end(), r.begin());
    return r;
}

TrivialExtension twisted_trivial_extension(const Algebra& a,
                                           const AlgebraAutomorphism& sigma) {
    const int d = a.dim();
    const int D = 2 * d;
    const PrimeField f = a.field;
    std::vector<std::string> names = a.basis_names;
    std::vector<int> src = a.basis_src, tgt = a.basis_tgt;
    for (int t = 0; t < d; ++t) {
        names.push_back("D(" + a.basis_names[t] + ")");
        src.push_back(sigma.vertex_preimage(a.basis_tgt[t]));
        tgt.push_back(a.basis_src[t]);
    }
    std::vector<std::vector<std::pair<int, uint32_t>>> table(size_t(D) * D);
    // A x A block
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) table[size_t(i) * D + j] = a.table(i, j);
    // (b_i, 0)(0, f_c) = (0, sigma(b_i) * f_c): coefficient at f_m is (m sigma(b_i))_c
    for (int i = 0; i < d; ++i) {
        AlgebraElement si = sigma.apply(a.basis_element(i));
        for (int c = 0; c < d; ++c) {
            std::vector<std::pair<int, uint32_t>> row;
            for (int m = 0; m < d; ++m) {
                uint32_t coeff = a.multiply(a.basis_element(m), si)[c];
                if (coeff) row.push_back({d + m, coeff});
            }
            table[size_t(i) * D + (d + c)] = std::move(row);
        }
    }
    // (0, f_c)(b_j, 0) = (0, f_c * b_j): coefficient at f_m is (b_j m)_c
    for (int c = 0; c < d; ++c) {
        for (int j = 0; j < d; ++j) {
            std::vector<std::pair<int, uint32_t>> row;
            for (int m = 0; m < d; ++m) {
                uint32_t coeff = a.multiply(a.basis_element(j), a.basis_element(m))[c];
                if (coeff) row.push_back({d + m, coeff});
            }
            table[size_t(d + c) * D + j] = std::move(row);
        }
    }
    // dual x dual = 0 (already empty)

    std::vector<Vec> rad;
    for (const auto& r : a.radical_basis) {
        Vec v(D, 0);
        std::copy(r.begin(), r.end(), v.begin());
        rad.push_back(std::move(v));
    }
    for (int t = 0; t < d; ++t) {
        Vec v(D, 0);
        v[d + t] = 1;
        rad.push_back(std::move(v));
    }
    std::optional<std::vector<int>> grading;
    if (a.grading) {
        int top = 0;
        for (int g : *a.grading) top = std::max(top, g);
        std::vector<int> gr = *a.grading;
        for (int t = 0; t < d; ++t) gr.push_back(top + 1 - (*a.grading)[t]);
        // keep the grading only when the twisted table respects it
        bool ok = true;
        for (int i = 0; i < D && ok; ++i)
            for (int j = 0; j < D && ok; ++j)
                for (const auto& [k, v] : table[size_t(i) * D + j]) {
                    (void)v;
                    if (gr[k] != gr[i] + gr[j]) { ok = false; break; }
                }
        if (ok) grading = std::move(gr);
    }
    Algebra lam = Algebra::from_structure(f, a.num_vertices, std::move(names),
                                          std::move(src), std::move(tgt),
                                          a.idempotent_index, std::move(table),
                                          std::move(rad), std::move(grading));
    return TrivialExtension{std::move(lam), d};
}

AlgebraAutomorphism extension_nakayama_formula(const Algebra& a,
                                               const AlgebraAutomorphism& sigma,
                                               const TrivialExtension& ext) {
    const int d = a.dim();
    const int D = ext.lambda.dim();
    Matrix m(a.field, D, D);
    for (int t = 0; t < d; ++t) {
        AlgebraElement img = sigma.apply(a.basis_element(t));
        for (int k = 0; k < d; ++k) m(k, t) = img[k];
    }
    // f_c o sigma^{-1}: coefficient at f_m is (sigma^{-1}(b_m))_c
    for (int c = 0; c < d; ++c)
        for (int mm = 0; mm < d; ++mm) {
            uint32_t coeff = sigma.apply_inverse(a.basis_element(mm))[c];
            if (coeff) m(d + mm, d + c) = coeff;
        }
    return validate_automorphism(ext.lambda, m);
}

}  // namespace silt
