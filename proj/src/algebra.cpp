#include "siltkit/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "siltkit/poly.hpp"

namespace silt {

using SVec = std::vector<std::pair<int, uint32_t>>;

void Quiver::validate() const {
    std::set<std::pair<int, std::string>> seen;
    for (const auto& a : arrows) {
        if (a.src < 0 || a.src >= num_vertices || a.tgt < 0 || a.tgt >= num_vertices)
            throw MathError("arrow '" + a.name + "' has an endpoint outside 1.." +
                            std::to_string(num_vertices));
        if (!seen.insert({a.src, a.name}).second)
            throw MathError("duplicate arrow name '" + a.name + "' at the same source");
    }
}

AlgebraElement Algebra::unit() const {
    AlgebraElement u = zero();
    for (int idx : idempotent_index) u[idx] = 1;
    return u;
}

AlgebraElement Algebra::basis_element(int t) const {
    AlgebraElement v = zero();
    v[t] = 1;
    return v;
}

AlgebraElement Algebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r = zero();
    const int d = dim();
    for (int i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < d; ++j) {
            if (!b[j]) continue;
            const uint32_t c = field.mul(a[i], b[j]);
            for (const auto& [k, v] : table(i, j))
                r[k] = field.add(r[k], field.mul(c, v));
        }
    }
    return r;
}

AlgebraElement Algebra::scale(const AlgebraElement& a, uint32_t c) const {
    AlgebraElement r = a;
    for (auto& v : r) v = field.mul(v, c);
    return r;
}

AlgebraElement Algebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = field.add(r[i], b[i]);
    return r;
}

AlgebraElement Algebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = field.sub(r[i], b[i]);
    return r;
}

bool Algebra::is_zero(const AlgebraElement& a) const {
    for (uint32_t v : a)
        if (v) return false;
    return true;
}

Matrix Algebra::left_mult_matrix(const AlgebraElement& a) const {
    const int d = dim();
    Matrix m(field, d, d);
    for (int i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < d; ++j) {
            for (const auto& [k, v] : table(i, j))
                m(k, j) = field.add(m(k, j), field.mul(a[i], v));
        }
    }
    return m;
}

Matrix Algebra::right_mult_matrix(const AlgebraElement& a) const {
    const int d = dim();
    Matrix m(field, d, d);
    for (int j = 0; j < d; ++j) {
        if (!a[j]) continue;
        for (int i = 0; i < d; ++i) {
            for (const auto& [k, v] : table(i, j))
                m(k, i) = field.add(m(k, i), field.mul(a[j], v));
        }
    }
    return m;
}

Matrix Algebra::proj_map_matrix(const AlgebraElement& alpha, int i, int j) const {
    const auto& src_basis = proj_basis(j);
    const auto& dst_basis = proj_basis(i);
    std::vector<int> pos(dim(), -1);
    for (size_t t = 0; t < dst_basis.size(); ++t) pos[dst_basis[t]] = (int)t;
    Matrix m(field, (int)dst_basis.size(), (int)src_basis.size());
    for (size_t c = 0; c < src_basis.size(); ++c) {
        AlgebraElement prod = zero();
        for (int t = 0; t < dim(); ++t) {
            if (!alpha[t]) continue;
            for (const auto& [k, v] : table(t, src_basis[c]))
                prod[k] = field.add(prod[k], field.mul(alpha[t], v));
        }
        for (int k = 0; k < dim(); ++k) {
            if (!prod[k]) continue;
            if (pos[k] < 0)
                throw InternalError("corner element leaves the target projective");
            m(pos[k], (int)c) = prod[k];
        }
    }
    return m;
}

bool Algebra::in_radical(const AlgebraElement& a) const {
    return radical_echelon_->contains(a);
}

std::optional<AlgebraElement> Algebra::corner_unit_inverse(const AlgebraElement& u,
                                                           int v) const {
    const auto& corner = corner_basis(v, v);
    const int m = (int)corner.size();
    Matrix lm(field, m, m);
    for (int c = 0; c < m; ++c) {
        AlgebraElement prod = multiply(u, basis_element(corner[c]));
        for (int r = 0; r < m; ++r) lm(r, c) = prod[corner[r]];
    }
    Vec ev(m, 0);
    for (int r = 0; r < m; ++r)
        if (corner[r] == idempotent_index[v]) ev[r] = 1;
    Echelon e(lm);
    if (e.rank() != m) return std::nullopt;
    auto x = e.solve(ev);
    AlgebraElement inv = zero();
    for (int r = 0; r < m; ++r) inv[corner[r]] = (*x)[r];
    return inv;
}

std::string Algebra::format_element(const AlgebraElement& a) const {
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < dim(); ++t) {
        if (!a[t]) continue;
        if (!first) os << " + ";
        first = false;
        if (a[t] != 1) os << a[t] << "*";
        os << basis_names[t];
    }
    if (first) os << "0";
    return os.str();
}

void Algebra::build_indexes() {
    corners_.assign(size_t(num_vertices) * num_vertices, {});
    proj_.assign(num_vertices, {});
    for (int t = 0; t < dim(); ++t) {
        corners_[size_t(basis_src[t]) * num_vertices + basis_tgt[t]].push_back(t);
        proj_[basis_src[t]].push_back(t);
    }
    Matrix rad(field, dim(), (int)radical_basis.size());
    for (size_t c = 0; c < radical_basis.size(); ++c) rad.set_col((int)c, radical_basis[c]);
    radical_echelon_.emplace(rad);
}

// --- radical of a structure-constant algebra, correct in any characteristic ---
//
// Iterated coefficient-form method (Cohen-Ivanyos-Wales): J_0 = A and
// J_{i+1} = {x in J_i : c_{p^i}(L_{xy}) = 0 for all y in J_i}, where c_j is
// the j-th characteristic coefficient of left multiplication on A. Over the
// prime field the maps are genuinely linear, and J stabilizes to rad(A) once
// p^i exceeds dim A. The plain trace form (the i = 0 step) is wrong on its
// own in small characteristic; see the p = 2 regression tests.
std::vector<Vec> radical_of_dense_table(PrimeField f, int d, const std::vector<Vec>& rows) {
    if (d == 0) return {};
    if (d > 400)
        throw InternalError("radical computation too large; pass a known radical instead");
    auto dense_product = [&](const Vec& a, const Vec& b) {
        Vec r(d, 0);
        for (int i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < d; ++j) {
                if (!b[j]) continue;
                const uint32_t c = f.mul(a[i], b[j]);
                const Vec& pr = rows[size_t(i) * d + j];
                for (int k = 0; k < d; ++k)
                    if (pr[k]) r[k] = f.add(r[k], f.mul(c, pr[k]));
            }
        }
        return r;
    };
    auto left_mult = [&](const Vec& a) {
        Matrix m(f, d, d);
        for (int i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < d; ++j) {
                const Vec& pr = rows[size_t(i) * d + j];
                for (int k = 0; k < d; ++k)
                    if (pr[k]) m(k, j) = f.add(m(k, j), f.mul(a[i], pr[k]));
            }
        }
        return m;
    };

    Matrix j_basis = Matrix::identity(f, d);
    uint64_t pk = 1;
    while (pk <= (uint64_t)d && j_basis.cols() > 0) {
        const int m = j_basis.cols();
        Matrix constraints(f, m, m);
        for (int s = 0; s < m; ++s) {
            const Vec xs = j_basis.col_vec(s);
            for (int t = 0; t < m; ++t) {
                const Vec w = dense_product(xs, j_basis.col_vec(t));
                Matrix lw = left_mult(w);
                uint32_t coeff;
                if (pk == 1) {
                    uint64_t tr = 0;
                    for (int i = 0; i < d; ++i) tr += lw(i, i);
                    coeff = static_cast<uint32_t>(tr % f.p);
                } else {
                    Poly cp = char_poly_of_matrix(lw);
                    const size_t pos = size_t(d) - pk;  // coeff of x^(d-pk)
                    coeff = pos < cp.c.size() ? cp.c[pos] : 0;
                }
                constraints(t, s) = coeff;
            }
        }
        Matrix ker = Echelon(constraints).kernel_basis();
        j_basis = j_basis.mul(ker);
        // re-reduce to an independent column basis
        j_basis = j_basis.image_basis();
        pk *= f.p;
    }
    std::vector<Vec> out;
    for (int c = 0; c < j_basis.cols(); ++c) out.push_back(j_basis.col_vec(c));
    return out;
}

void Algebra::validate_structure(bool require_basic) const {
    const int d = dim();
    const int n = num_vertices;
    if ((int)basis_src.size() != d || (int)basis_tgt.size() != d)
        throw InternalError("algebra: basis vertex data size mismatch");
    if ((int)idempotent_index.size() != n)
        throw InternalError("algebra: idempotent list size mismatch");

    // idempotent axioms
    for (int i = 0; i < n; ++i) {
        const int ei = idempotent_index[i];
        if (basis_src[ei] != i || basis_tgt[ei] != i)
            throw InternalError("algebra: e_i not in corner (i,i)");
        for (int j = 0; j < n; ++j) {
            const int ej = idempotent_index[j];
            AlgebraElement prod = multiply(basis_element(ei), basis_element(ej));
            AlgebraElement expect = i == j ? basis_element(ei) : zero();
            if (prod != expect) throw InternalError("algebra: idempotents not orthogonal");
        }
    }
    // corner homogeneity (also forces unitality of sum e_i)
    for (int t = 0; t < d; ++t) {
        AlgebraElement b = basis_element(t);
        if (multiply(idempotent(basis_src[t]), b) != b ||
            multiply(b, idempotent(basis_tgt[t])) != b)
            throw InternalError("algebra: basis element " + basis_names[t] +
                                " is not corner-homogeneous");
    }
    // associativity on all basis triples
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            AlgebraElement ij = multiply(basis_element(i), basis_element(j));
            for (int k = 0; k < d; ++k) {
                AlgebraElement left = multiply(ij, basis_element(k));
                AlgebraElement right =
                    multiply(basis_element(i), multiply(basis_element(j), basis_element(k)));
                if (left != right)
                    throw InternalError("algebra: associativity fails at triple (" +
                                        basis_names[i] + ", " + basis_names[j] + ", " +
                                        basis_names[k] + ")");
            }
        }
    }
    // radical: ideal + nilpotent + complement spanned by idempotents
    Matrix rad(field, d, (int)radical_basis.size());
    for (size_t c = 0; c < radical_basis.size(); ++c) rad.set_col((int)c, radical_basis[c]);
    Echelon rade(rad);
    if (rade.rank() != (int)radical_basis.size())
        throw InternalError("algebra: radical basis is dependent");
    for (const auto& r : radical_basis) {
        for (int t = 0; t < d; ++t) {
            if (!rade.contains(multiply(basis_element(t), r)) ||
                !rade.contains(multiply(r, basis_element(t))))
                throw InternalError("algebra: radical is not an ideal");
        }
    }
    std::vector<Vec> layer = radical_basis;
    int guard = 0;
    while (!layer.empty()) {
        if (++guard > d + 1) throw InternalError("algebra: radical is not nilpotent");
        Matrix span(field, d, 0);
        std::vector<Vec> next;
        for (const auto& r : layer) {
            for (const auto& s : radical_basis) {
                Vec prod = multiply(r, s);
                Matrix cand(field, d, 1);
                cand.set_col(0, prod);
                if (!extend_column_basis(span, cand).empty()) {
                    span = span.hstack(cand);
                    next.push_back(prod);
                }
            }
        }
        layer = std::move(next);
    }
    if (require_basic) {
        if ((int)radical_basis.size() + n != d)
            throw InternalError("algebra: semisimple quotient dimension is not n");
        for (int i = 0; i < n; ++i)
            if (rade.contains(idempotent(i)))
                throw InternalError("algebra: idempotent lies in the radical");
    }
    // grading consistency
    if (grading) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (const auto& [k, v] : table(i, j)) {
                    (void)v;
                    if ((*grading)[k] != (*grading)[i] + (*grading)[j])
                        throw InternalError("algebra: grading is inconsistent");
                }
    }
}

Algebra Algebra::from_structure(PrimeField f, int num_vertices,
                                std::vector<std::string> names, std::vector<int> src,
                                std::vector<int> tgt, std::vector<int> idem_index,
                                std::vector<std::vector<std::pair<int, uint32_t>>> table,
                                std::vector<Vec> radical_basis,
                                std::optional<std::vector<int>> grading,
                                bool require_basic) {
    Algebra a;
    a.field = f;
    a.num_vertices = num_vertices;
    a.basis_names = std::move(names);
    a.basis_src = std::move(src);
    a.basis_tgt = std::move(tgt);
    a.idempotent_index = std::move(idem_index);
    a.table_ = std::move(table);
    a.grading = std::move(grading);
    if (radical_basis.empty() && a.dim() > num_vertices) {
        const int d = a.dim();
        std::vector<Vec> rows(size_t(d) * d, Vec(d, 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (const auto& [k, v] : a.table(i, j)) rows[size_t(i) * d + j][k] = v;
        radical_basis = radical_of_dense_table(f, d, rows);
    }
    a.radical_basis = std::move(radical_basis);
    a.build_indexes();
    a.validate_structure(require_basic);
    return a;
}

// ---------------------------------------------------------------------------
// path algebra construction: grow the graded components degree by degree,
// quotienting each new component by all ideal elements that end there.
// ---------------------------------------------------------------------------

namespace {

struct PathClass {
    int degree;
    int src, tgt;
    int parent;  // global class id; -1 for degree 0
    int arrow;   // arrow index; -1 for degree 0
    std::string name;
};

struct Builder {
    const Quiver& q;
    PrimeField f;
    std::vector<PathClass> classes;
    std::vector<std::vector<int>> by_degree;
    // step[c][a]: class c multiplied by arrow a, over classes of the next degree
    std::vector<std::vector<SVec>> step;

    SVec apply_step(const SVec& w, int arrow) const {
        SVec out;
        std::map<int, uint32_t> acc;
        for (const auto& [c, coef] : w) {
            for (const auto& [k, v] : step[c][arrow]) {
                uint32_t& slot = acc[k];
                slot = f.add(slot, f.mul(coef, v));
            }
        }
        for (const auto& [k, v] : acc)
            if (v) out.push_back({k, v});
        return out;
    }
};

}  // namespace

Algebra path_algebra(const Quiver& q, const std::vector<Relation>& rels, int max_len,
                     PrimeField f) {
    q.validate();
    if (max_len < 1) throw MathError("path_algebra: max_len must be >= 1");
    const int num_arrows = (int)q.arrows.size();
    // relation sanity: parallel, length-homogeneous
    for (const auto& r : rels) {
        if (r.terms.empty()) continue;
        int src = -1, tgt = -1;
        size_t len = 0;
        bool first = true;
        for (const auto& term : r.terms) {
            if (term.arrows.empty()) throw MathError("relation with an empty path");
            int s = q.arrows[term.arrows[0]].src;
            int t = q.arrows[term.arrows[0]].tgt;
            for (size_t k = 1; k < term.arrows.size(); ++k) {
                if (q.arrows[term.arrows[k]].src != t)
                    throw MathError("relation path is not composable");
                t = q.arrows[term.arrows[k]].tgt;
            }
            if (first) {
                src = s; tgt = t; len = term.arrows.size(); first = false;
            } else if (s != src || t != tgt) {
                throw MathError("relation mixes non-parallel paths");
            } else if (term.arrows.size() != len) {
                throw MathError("inhomogeneous relation (mixed path lengths)");
            }
        }
    }

    Builder b{q, f, {}, {}, {}};
    // degree 0: idempotents
    b.by_degree.push_back({});
    for (int v = 0; v < q.num_vertices; ++v) {
        b.classes.push_back({0, v, v, -1, -1, "e" + std::to_string(v + 1)});
        b.by_degree[0].push_back(v);
        b.step.push_back(std::vector<SVec>(num_arrows));
    }

    for (int deg = 1;; ++deg) {
        const auto& prev = b.by_degree[deg - 1];
        // coordinates of the free component: composable (class, arrow) pairs
        std::vector<std::pair<int, int>> vcoords;
        std::map<std::pair<int, int>, int> vindex;
        for (int c : prev)
            for (int a = 0; a < num_arrows; ++a)
                if (q.arrows[a].src == b.classes[c].tgt) {
                    vindex[{c, a}] = (int)vcoords.size();
                    vcoords.push_back({c, a});
                }
        const int vdim = (int)vcoords.size();
        if (vdim == 0) {
            b.by_degree.push_back({});
            break;
        }
        // ideal elements ending in this degree: class * relation for every
        // class of degree deg - len(relation)
        std::vector<Vec> rows;
        for (const auto& r : rels) {
            if (r.terms.empty()) continue;
            const int g = (int)r.terms[0].arrows.size();
            if (g > deg) continue;
            const int rel_src = q.arrows[r.terms[0].arrows[0]].src;
            for (int c0 : b.by_degree[deg - g]) {
                if (b.classes[c0].tgt != rel_src) continue;
                Vec row(vdim, 0);
                bool nonzero = false;
                for (const auto& term : r.terms) {
                    SVec w{{c0, term.coeff}};
                    for (size_t k = 0; k + 1 < term.arrows.size(); ++k)
                        w = b.apply_step(w, term.arrows[k]);
                    const int last = term.arrows.back();
                    for (const auto& [c, coef] : w) {
                        auto it = vindex.find({c, last});
                        if (it == vindex.end())
                            throw InternalError("path algebra: dangling relation term");
                        row[it->second] = f.add(row[it->second], coef);
                    }
                }
                for (uint32_t x : row)
                    if (x) { nonzero = true; break; }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        Matrix relmat(f, (int)rows.size(), vdim);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < vdim; ++j) relmat((int)i, j) = rows[i][j];
        Echelon ech(relmat);
        std::vector<char> is_pivot(vdim, 0);
        for (int c : ech.pivots()) is_pivot[c] = 1;

        // new classes = non-pivot coordinates
        std::vector<int> coord_class(vdim, -1);
        std::vector<int> new_ids;
        for (int j = 0; j < vdim; ++j) {
            if (is_pivot[j]) continue;
            const auto& [pc, pa] = vcoords[j];
            PathClass cls;
            cls.degree = deg;
            cls.src = b.classes[pc].src;
            cls.tgt = q.arrows[pa].tgt;
            cls.parent = pc;
            cls.arrow = pa;
            cls.name = b.classes[pc].degree == 0 ? q.arrows[pa].name
                                                 : b.classes[pc].name + "*" + q.arrows[pa].name;
            coord_class[j] = (int)b.classes.size();
            new_ids.push_back((int)b.classes.size());
            b.classes.push_back(cls);
            b.step.push_back(std::vector<SVec>(num_arrows));
        }
        // reduction of every coordinate to new classes, recorded as step maps
        const auto& rr = ech.rref();
        std::vector<SVec> reduction(vdim);
        for (int j = 0; j < vdim; ++j) {
            if (!is_pivot[j]) {
                reduction[j] = {{coord_class[j], 1}};
            }
        }
        for (int t = 0; t < ech.rank(); ++t) {
            const int pj = ech.pivots()[t];
            SVec expr;
            for (int j = 0; j < vdim; ++j) {
                if (is_pivot[j] || !rr(t, j)) continue;
                expr.push_back({coord_class[j], f.neg(rr(t, j))});
            }
            reduction[pj] = std::move(expr);
        }
        for (int j = 0; j < vdim; ++j) {
            const auto& [pc, pa] = vcoords[j];
            b.step[pc][pa] = reduction[j];
        }
        b.by_degree.push_back(new_ids);
        if (new_ids.empty()) break;
        if (deg >= max_len)
            throw MathError("path algebra not finite-dimensional within max_len = " +
                            std::to_string(max_len));
    }

    // assemble the multiplication table: c * c' by walking c' back to its arrows
    const int d = (int)b.classes.size();
    std::vector<SVec> table(size_t(d) * d);
    // chains of arrows defining each class
    std::vector<std::vector<int>> chain(d);
    for (int c = 0; c < d; ++c) {
        int cur = c;
        while (b.classes[cur].parent >= 0) {
            chain[c].push_back(b.classes[cur].arrow);
            cur = b.classes[cur].parent;
        }
        std::reverse(chain[c].begin(), chain[c].end());
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (b.classes[j].degree == 0) {
                if (b.classes[i].tgt == b.classes[j].src) table[size_t(i) * d + j] = {{i, 1}};
                continue;
            }
            if (b.classes[i].tgt != b.classes[j].src) continue;
            SVec w{{i, 1}};
            for (int a : chain[j]) {
                w = b.apply_step(w, a);
                if (w.empty()) break;
            }
            table[size_t(i) * d + j] = std::move(w);
        }
    }

    std::vector<std::string> names;
    std::vector<int> src, tgt, grading;
    std::vector<Vec> rad;
    for (int c = 0; c < d; ++c) {
        names.push_back(b.classes[c].name);
        src.push_back(b.classes[c].src);
        tgt.push_back(b.classes[c].tgt);
        grading.push_back(b.classes[c].degree);
        if (b.classes[c].degree > 0) {
            Vec v(d, 0);
            v[c] = 1;
            rad.push_back(std::move(v));
        }
    }
    std::vector<int> idem(q.num_vertices);
    std::iota(idem.begin(), idem.end(), 0);
    return Algebra::from_structure(f, q.num_vertices, std::move(names), std::move(src),
                                   std::move(tgt), std::move(idem), std::move(table),
                                   std::move(rad), std::move(grading));
}

// ---------------------------------------------------------------------------

int AlgebraAutomorphism::vertex_preimage(int v) const {
    for (int i = 0; i < (int)vertex_perm.size(); ++i)
        if (vertex_perm[i] == v) return i;
    throw InternalError("vertex permutation is not surjective");
}

bool AlgebraAutomorphism::is_identity() const {
    return m == Matrix::identity(m.field(), m.rows());
}

AlgebraAutomorphism validate_automorphism(const Algebra& a, const Matrix& images) {
    const int d = a.dim();
    if (images.rows() != d || images.cols() != d)
        throw MathError("not an automorphism: wrong matrix size");
    auto inv = images.inverse();
    if (!inv) throw MathError("not an automorphism: map is not invertible");
    AlgebraElement u = a.unit();
    if (images.mul_vec(u) != u) throw MathError("not an automorphism: does not fix 1");
    for (int i = 0; i < d; ++i) {
        AlgebraElement si = images.col_vec(i);
        for (int j = 0; j < d; ++j) {
            AlgebraElement lhs = a.zero();
            for (const auto& [k, v] : a.table(i, j)) {
                AlgebraElement img = images.col_vec(k);
                for (int t = 0; t < d; ++t) lhs[t] = a.field.add(lhs[t], a.field.mul(v, img[t]));
            }
            AlgebraElement rhs = a.multiply(si, images.col_vec(j));
            if (lhs != rhs)
                throw MathError("not an automorphism: multiplicativity fails at (" +
                                a.basis_names[i] + ", " + a.basis_names[j] + ")");
        }
    }
    std::vector<int> perm(a.num_vertices, -1);
    std::vector<char> hit(a.num_vertices, 0);
    for (int v = 0; v < a.num_vertices; ++v) {
        AlgebraElement img = images.col_vec(a.idempotent_index[v]);
        int found = -1;
        for (int w = 0; w < a.num_vertices; ++w) {
            if (img == a.idempotent(w)) { found = w; break; }
        }
        if (found < 0)
            throw MathError("not an automorphism: e_" + std::to_string(v + 1) +
                            " does not map to an idempotent basis element");
        if (hit[found]) throw MathError("not an automorphism: idempotent images collide");
        hit[found] = 1;
        perm[v] = found;
    }
    return AlgebraAutomorphism{images, *inv, perm};
}

AlgebraAutomorphism identity_automorphism(const Algebra& a) {
    Matrix id = Matrix::identity(a.field, a.dim());
    std::vector<int> perm(a.num_vertices);
    std::iota(perm.begin(), perm.end(), 0);
    return AlgebraAutomorphism{id, id, perm};
}

AlgebraAutomorphism compose(const Algebra& a, const AlgebraAutomorphism& f,
                            const AlgebraAutomorphism& g) {
    Matrix m = f.m.mul(g.m);
    Matrix minv = g.minv.mul(f.minv);
    std::vector<int> perm(a.num_vertices);
    for (int v = 0; v < a.num_vertices; ++v) perm[v] = f.vertex_perm[g.vertex_perm[v]];
    return AlgebraAutomorphism{std::move(m), std::move(minv), std::move(perm)};
}

AlgebraAutomorphism inverse(const AlgebraAutomorphism& f) {
    std::vector<int> perm(f.vertex_perm.size());
    for (size_t v = 0; v < perm.size(); ++v) perm[f.vertex_perm[v]] = (int)v;
    return AlgebraAutomorphism{f.minv, f.m, std::move(perm)};
}

Matrix socle_of_projective(const Algebra& a, int v) {
    const auto& basis = a.proj_basis(v);
    const int m = (int)basis.size();
    const int nrad = (int)a.radical_basis.size();
    Matrix stacked(a.field, a.dim() * std::max(nrad, 1), m);
    for (int c = 0; c < m; ++c) {
        for (int t = 0; t < nrad; ++t) {
            AlgebraElement prod = a.multiply(a.basis_element(basis[c]), a.radical_basis[t]);
            for (int k = 0; k < a.dim(); ++k) stacked(t * a.dim() + k, c) = prod[k];
        }
    }
    return stacked.kernel_basis();
}

}  // namespace silt
