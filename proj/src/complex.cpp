#include "siltkit/complex.hpp"

#include <algorithm>

#include "siltkit/frobenius.hpp"

namespace silt {

ElemMatrix ElemMatrix::mul(const Algebra& a, const ElemMatrix& lhs, const ElemMatrix& rhs) {
    if (lhs.cols != rhs.rows) throw InternalError("ElemMatrix product shape mismatch");
    ElemMatrix out(a, lhs.rows, rhs.cols);
    for (int i = 0; i < lhs.rows; ++i)
        for (int k = 0; k < lhs.cols; ++k) {
            if (a.is_zero(lhs.at(i, k))) continue;
            for (int j = 0; j < rhs.cols; ++j) {
                if (a.is_zero(rhs.at(k, j))) continue;
                out.at(i, j) = a.add(out.at(i, j), a.multiply(lhs.at(i, k), rhs.at(k, j)));
            }
        }
    return out;
}

ElemMatrix ElemMatrix::add(const Algebra& a, const ElemMatrix& lhs, const ElemMatrix& rhs) {
    ElemMatrix out = lhs;
    for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = a.add(out.e[i], rhs.e[i]);
    return out;
}

ElemMatrix ElemMatrix::scaled(const Algebra& a, uint32_t c) const {
    ElemMatrix out = *this;
    for (auto& v : out.e) v = a.scale(v, c);
    return out;
}

bool ElemMatrix::is_zero(const Algebra& a) const {
    for (const auto& v : e)
        if (!a.is_zero(v)) return false;
    return true;
}

const std::vector<int>& ProjComplex::term(int d) const {
    static const std::vector<int> empty;
    auto it = terms.find(d);
    return it == terms.end() ? empty : it->second;
}

ElemMatrix ProjComplex::diff(const Algebra& a, int d) const {
    auto it = diffs.find(d);
    if (it != diffs.end()) return it->second;
    return ElemMatrix(a, term_size(d + 1), term_size(d));
}

int ProjComplex::total_summands() const {
    int n = 0;
    for (const auto& [d, t] : terms) n += (int)t.size();
    return n;
}

void ProjComplex::prune() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.empty() ? terms.erase(it) : std::next(it);
    for (auto it = diffs.begin(); it != diffs.end();) {
        const bool keep = terms.count(it->first) && terms.count(it->first + 1);
        it = keep ? std::next(it) : diffs.erase(it);
    }
}

void validate(const Algebra& a, const ProjComplex& x) {
    for (const auto& [d, t] : x.terms) {
        for (int v : t)
            if (v < 0 || v >= a.num_vertices)
                throw InternalError("complex: vertex out of range in degree " +
                                    std::to_string(d));
        if (t.empty()) throw InternalError("complex: empty degree not pruned");
    }
    for (const auto& [d, m] : x.diffs) {
        const auto& src = x.term(d);
        const auto& dst = x.term(d + 1);
        if (m.rows != (int)dst.size() || m.cols != (int)src.size())
            throw InternalError("complex: differential shape mismatch in degree " +
                                std::to_string(d));
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) {
                const AlgebraElement& entry = m.at(r, c);
                for (int k = 0; k < a.dim(); ++k)
                    if (entry[k] &&
                        (a.basis_src[k] != dst[r] || a.basis_tgt[k] != src[c]))
                        throw InternalError("complex: entry (" + std::to_string(r) + "," +
                                            std::to_string(c) + ") of d[" +
                                            std::to_string(d) + "] leaves its corner");
            }
    }
    for (const auto& [d, m] : x.diffs) {
        if (!x.diffs.count(d + 1)) continue;
        ElemMatrix comp = ElemMatrix::mul(a, x.diffs.at(d + 1), m);
        if (!comp.is_zero(a))
            throw InternalError("complex: d^2 != 0 at degree " + std::to_string(d));
    }
}

ProjComplex projective_stalk(const Algebra& a, int v, int degree) {
    (void)a;
    ProjComplex x;
    x.terms[degree] = {v};
    return x;
}

ProjComplex algebra_stalk(const Algebra& a) {
    ProjComplex x;
    std::vector<int> t(a.num_vertices);
    for (int v = 0; v < a.num_vertices; ++v) t[v] = v;
    x.terms[0] = t;
    return x;
}

ProjComplex shift(const Algebra& a, const ProjComplex& x, int m) {
    ProjComplex out;
    for (const auto& [d, t] : x.terms) out.terms[d - m] = t;
    const uint32_t sign = (m % 2 == 0) ? 1 : a.field.neg(1);
    for (const auto& [d, mat] : x.diffs) out.diffs[d - m] = mat.scaled(a, sign);
    return out;
}

ProjComplex direct_sum(const Algebra& a, const std::vector<ProjComplex>& xs) {
    ProjComplex out;
    for (size_t k = 0; k < xs.size(); ++k)
        for (const auto& [d, t] : xs[k].terms) {
            auto& dst = out.terms[d];
            dst.insert(dst.end(), t.begin(), t.end());
        }
    for (const auto& [d, t] : out.terms) {
        if (!out.terms.count(d + 1)) continue;
        ElemMatrix m(a, out.term_size(d + 1), (int)t.size());
        // block diagonal by piece
        std::map<int, int> row_off, col_off;
        {
            int off = 0;
            for (size_t k = 0; k < xs.size(); ++k) {
                col_off[(int)k] = off;
                off += xs[k].term_size(d);
            }
            off = 0;
            for (size_t k = 0; k < xs.size(); ++k) {
                row_off[(int)k] = off;
                off += xs[k].term_size(d + 1);
            }
        }
        for (size_t k = 0; k < xs.size(); ++k) {
            auto it = xs[k].diffs.find(d);
            if (it == xs[k].diffs.end()) continue;
            const ElemMatrix& blk = it->second;
            for (int r = 0; r < blk.rows; ++r)
                for (int c = 0; c < blk.cols; ++c)
                    m.at(row_off[(int)k] + r, col_off[(int)k] + c) = blk.at(r, c);
        }
        out.diffs[d] = std::move(m);
    }
    out.prune();
    return out;
}

GVector g_vector(const Algebra& a, const ProjComplex& x) {
    GVector g(a.num_vertices, 0);
    for (const auto& [d, t] : x.terms) {
        const long long sign = (d % 2 == 0) ? 1 : -1;
        for (int v : t) g[v] += sign;
    }
    return g;
}

long long int_det(std::vector<std::vector<long long>> m) {
    const int n = (int)m.size();
    // Bareiss fraction-free elimination
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

ProjComplex twist_complex(const Algebra& a, const ProjComplex& x,
                          const AlgebraAutomorphism& sigma) {
    ProjComplex out;
    for (const auto& [d, t] : x.terms) {
        std::vector<int> nt;
        for (int v : t) nt.push_back(sigma.vertex_preimage(v));
        out.terms[d] = std::move(nt);
    }
    for (const auto& [d, m] : x.diffs) {
        ElemMatrix nm(a, m.rows, m.cols);
        for (size_t i = 0; i < m.e.size(); ++i) nm.e[i] = sigma.apply_inverse(m.e[i]);
        out.diffs[d] = std::move(nm);
    }
    validate(a, out);
    return out;
}

ProjComplex base_change(const Algebra& a, const ProjComplex& x,
                        const TrivialExtension& ext) {
    ProjComplex out;
    out.terms = x.terms;
    for (const auto& [d, m] : x.diffs) {
        ElemMatrix nm(ext.lambda, m.rows, m.cols);
        for (size_t i = 0; i < m.e.size(); ++i) nm.e[i] = ext.include(m.e[i]);
        out.diffs[d] = std::move(nm);
    }
    (void)a;
    validate(ext.lambda, out);
    return out;
}

bool is_minimal(const Algebra& a, const ProjComplex& x) {
    for (const auto& [d, m] : x.diffs)
        for (const auto& entry : m.e)
            if (!a.in_radical(entry)) return false;
    return true;
}

namespace {

// remove summand c from degree d and summand r from degree d+1 after
// cancelling along the unit entry (r, c) of d^d.
ProjComplex cancel_unit(const Algebra& a, const ProjComplex& x, int d, int r, int c,
                        const AlgebraElement& uinv) {
    ProjComplex out;
    ElemMatrix dd = x.diff(a, d);
    for (const auto& [deg, t] : x.terms) {
        std::vector<int> nt;
        for (int i = 0; i < (int)t.size(); ++i) {
            if (deg == d && i == c) continue;
            if (deg == d + 1 && i == r) continue;
            nt.push_back(t[i]);
        }
        if (!nt.empty()) out.terms[deg] = std::move(nt);
    }
    for (const auto& [deg, m] : x.diffs) {
        std::vector<int> rows, cols;
        for (int i = 0; i < m.rows; ++i) {
            if (deg + 1 == d && i == c) continue;
            if (deg + 1 == d + 1 && i == r) continue;
            rows.push_back(i);
        }
        for (int j = 0; j < m.cols; ++j) {
            if (deg == d && j == c) continue;
            if (deg == d + 1 && j == r) continue;
            cols.push_back(j);
        }
        if (rows.empty() || cols.empty()) continue;
        ElemMatrix nm(a, (int)rows.size(), (int)cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) {
                AlgebraElement v = m.at(rows[i], cols[j]);
                if (deg == d) {
                    // d~(r',c') = d(r',c') - d(r',c) u^{-1} d(r,c')
                    AlgebraElement corr = a.multiply(
                        m.at(rows[i], c), a.multiply(uinv, m.at(r, cols[j])));
                    v = a.sub(v, corr);
                }
                nm.at((int)i, (int)j) = v;
            }
        out.diffs[deg] = std::move(nm);
    }
    out.prune();
    return out;
}

}  // namespace

namespace {

struct UnitEntry {
    int d, r, c;
    AlgebraElement uinv;
};

std::optional<UnitEntry> find_unit_entry(const Algebra& a, const ProjComplex& x) {
    for (const auto& [d, m] : x.diffs) {
        const auto& src = x.term(d);
        const auto& dst = x.term(d + 1);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) {
                if (dst[r] != src[c]) continue;
                const AlgebraElement& entry = m.at(r, c);
                if (a.is_zero(entry)) continue;
                if (auto uinv = a.corner_unit_inverse(entry, dst[r]))
                    return UnitEntry{d, r, c, std::move(*uinv)};
            }
    }
    return std::nullopt;
}

}  // namespace

ProjComplex minimize(const Algebra& a, const ProjComplex& x) {
    ProjComplex cur = x;
    cur.prune();
    while (auto u = find_unit_entry(a, cur))
        cur = cancel_unit(a, cur, u->d, u->r, u->c, u->uinv);
    validate(a, cur);
    return cur;
}

}  // namespace silt
