#include "siltkit/hom.hpp"

#include <algorithm>

namespace silt {

ElemMatrix ChainMap::comp(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                          int i) const {
    auto it = comps.find(i);
    if (it != comps.end()) return it->second;
    return ElemMatrix(a, y.term_size(i + shift), x.term_size(i));
}

bool ChainMap::is_zero(const Algebra& a) const {
    for (const auto& [d, m] : comps)
        if (!m.is_zero(a)) return false;
    return true;
}

ChainMap identity_chain_map(const Algebra& a, const ProjComplex& x) {
    ChainMap f;
    for (const auto& [d, t] : x.terms) {
        ElemMatrix m(a, (int)t.size(), (int)t.size());
        for (size_t i = 0; i < t.size(); ++i) m.at((int)i, (int)i) = a.idempotent(t[i]);
        f.comps[d] = std::move(m);
    }
    return f;
}

ChainMap compose(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                 const ProjComplex& z, const ChainMap& f, const ChainMap& g) {
    ChainMap h;
    h.shift = f.shift + g.shift;
    for (const auto& [d, fm] : f.comps) {
        const int mid = d + f.shift;
        ElemMatrix gm = g.comp(a, y, z, mid);
        if (gm.rows == 0 || fm.rows == 0) continue;
        ElemMatrix prod = ElemMatrix::mul(a, gm, fm);
        if (!prod.is_zero(a)) h.comps[d] = std::move(prod);
    }
    (void)x;
    return h;
}

ChainMap add_maps(const Algebra& a, const ChainMap& f, const ChainMap& g) {
    ChainMap h = f;
    for (const auto& [d, gm] : g.comps) {
        auto it = h.comps.find(d);
        if (it == h.comps.end())
            h.comps[d] = gm;
        else
            it->second = ElemMatrix::add(a, it->second, gm);
    }
    return h;
}

ChainMap scale_map(const Algebra& a, const ChainMap& f, uint32_t c) {
    ChainMap h = f;
    for (auto& [d, m] : h.comps) m = m.scaled(a, c);
    return h;
}

// delta(f) = d_Y f - (-1)^m f d_X
static ChainMap hom_differential(const Algebra& a, const ProjComplex& x,
                                 const ProjComplex& y, const ChainMap& f) {
    ChainMap out;
    out.shift = f.shift + 1;
    const uint32_t sign = (f.shift % 2 == 0) ? 1 : a.field.neg(1);
    for (const auto& [d, t] : x.terms) {
        const int rows = y.term_size(d + f.shift + 1);
        if (rows == 0) continue;
        ElemMatrix m(a, rows, (int)t.size());
        bool nz = false;
        if (y.terms.count(d + f.shift) && y.diffs.count(d + f.shift)) {
            ElemMatrix part = ElemMatrix::mul(a, y.diffs.at(d + f.shift),
                                              f.comp(a, x, y, d));
            m = ElemMatrix::add(a, m, part);
            nz = true;
        }
        if (x.diffs.count(d) && y.terms.count(d + 1 + f.shift)) {
            ElemMatrix part = ElemMatrix::mul(a, f.comp(a, x, y, d + 1), x.diffs.at(d));
            m = ElemMatrix::add(a, m, part.scaled(a, a.field.neg(sign)));
            nz = true;
        }
        if (nz && !m.is_zero(a)) out.comps[d] = std::move(m);
    }
    return out;
}

bool is_chain_map(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                  const ChainMap& f) {
    return hom_differential(a, x, y, f).is_zero(a);
}

HomIndexer::HomIndexer(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                       int m)
    : x_terms_(x.terms), y_terms_(y.terms), shift_(m), alg_dim_(a.dim()) {
    total_ = 0;
    for (const auto& [d, t] : x.terms) {
        const auto& yt = y.term(d + m);
        if (yt.empty()) continue;
        for (size_t r = 0; r < yt.size(); ++r)
            for (size_t c = 0; c < t.size(); ++c) {
                const auto& corner = a.corner_basis(yt[r], t[c]);
                if (corner.empty()) continue;
                entries_.push_back({d, (int)r, (int)c, corner, total_});
                total_ += (int)corner.size();
            }
    }
}

Vec HomIndexer::flatten(const ChainMap& f) const {
    Vec v(total_, 0);
    for (const auto& e : entries_) {
        auto it = f.comps.find(e.deg);
        if (it == f.comps.end()) continue;
        const AlgebraElement& entry = it->second.at(e.r, e.c);
        for (size_t t = 0; t < e.corner.size(); ++t) v[e.offset + t] = entry[e.corner[t]];
    }
    return v;
}

ChainMap HomIndexer::unflatten(const Vec& v) const {
    ChainMap f;
    f.shift = shift_;
    for (const auto& e : entries_) {
        auto it = f.comps.find(e.deg);
        if (it == f.comps.end()) {
            const auto& xt = x_terms_.at(e.deg);
            const auto& yt = y_terms_.at(e.deg + shift_);
            ElemMatrix m;
            m.rows = (int)yt.size();
            m.cols = (int)xt.size();
            m.e.assign(size_t(m.rows) * m.cols, AlgebraElement(alg_dim_, 0));
            it = f.comps.emplace(e.deg, std::move(m)).first;
        }
        AlgebraElement& entry = it->second.at(e.r, e.c);
        for (size_t t = 0; t < e.corner.size(); ++t) entry[e.corner[t]] = v[e.offset + t];
    }
    return f;
}

Matrix hom_delta_matrix(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                        const HomIndexer& from, const HomIndexer& to) {
    Matrix d(a.field, to.total(), from.total());
    const uint32_t msign =
        ((from.shift() % 2) == 0) ? a.field.neg(1) : 1;  // -(-1)^m factor
    // index lookup for target coordinates
    struct Key {
        int deg, r, c;
        bool operator<(const Key& o) const {
            return std::tie(deg, r, c) < std::tie(o.deg, o.r, o.c);
        }
    };
    std::map<Key, const HomIndexer::Entry*> target;
    for (const auto& e : to.entries()) target[{e.deg, e.r, e.c}] = &e;

    auto scatter = [&](int deg, int r, int c, const AlgebraElement& val, int col,
                       uint32_t scale) {
        auto it = target.find({deg, r, c});
        if (it == target.end()) {
            // value must vanish if the coordinate does not exist
            return;
        }
        const auto* e = it->second;
        for (size_t t = 0; t < e->corner.size(); ++t) {
            const uint32_t v = val[e->corner[t]];
            if (v) d(e->offset + (int)t, col) = a.field.add(d(e->offset + (int)t, col),
                                                            a.field.mul(v, scale));
        }
    };

    const int m = from.shift();
    for (const auto& e : from.entries()) {
        for (size_t t = 0; t < e.corner.size(); ++t) {
            const int col = e.offset + (int)t;
            const AlgebraElement bt = a.basis_element(e.corner[t]);
            // d_Y o f: target block at the same x-degree
            if (y.diffs.count(e.deg + m)) {
                const ElemMatrix& dy = y.diffs.at(e.deg + m);
                for (int rr = 0; rr < dy.rows; ++rr) {
                    const AlgebraElement& dent = dy.at(rr, e.r);
                    if (a.is_zero(dent)) continue;
                    scatter(e.deg, rr, e.c, a.multiply(dent, bt), col, 1);
                }
            }
            // -(-1)^m f o d_X: this coordinate lives at x-degree e.deg, so it
            // receives from d_X^{e.deg-1}
            if (x.diffs.count(e.deg - 1)) {
                const ElemMatrix& dx = x.diffs.at(e.deg - 1);
                for (int cc = 0; cc < dx.cols; ++cc) {
                    const AlgebraElement& dent = dx.at(e.c, cc);
                    if (a.is_zero(dent)) continue;
                    scatter(e.deg - 1, e.r, cc, a.multiply(bt, dent), col, msign);
                }
            }
        }
    }
    return d;
}

std::pair<int, int> hom_window(const ProjComplex& x, const ProjComplex& y) {
    if (x.is_zero() || y.is_zero()) return {0, -1};
    return {y.min_degree() - x.max_degree(), y.max_degree() - x.min_degree()};
}

HomSpace hom_space(const Algebra& a, const ProjComplex& x, const ProjComplex& y, int m) {
    HomSpace hs;
    hs.shift = m;
    hs.idx = HomIndexer(a, x, y, m);
    HomIndexer up(a, x, y, m + 1), down(a, x, y, m - 1);
    Matrix dm = hom_delta_matrix(a, x, y, hs.idx, up);
    Matrix dprev = hom_delta_matrix(a, x, y, down, hs.idx);
    Matrix cycles = dm.kernel_basis();
    Matrix boundaries = dprev.image_basis();
    std::vector<int> picked = extend_column_basis(boundaries, cycles);
    Matrix reps(a.field, hs.idx.total(), (int)picked.size());
    for (size_t k = 0; k < picked.size(); ++k)
        for (int i = 0; i < hs.idx.total(); ++i) reps(i, (int)k) = cycles(i, picked[k]);
    hs.dim = reps.cols();
    for (int k = 0; k < reps.cols(); ++k) hs.basis.push_back(hs.idx.unflatten(reps.col_vec(k)));
    hs.n_boundaries = boundaries.cols();
    hs.reducer.emplace(boundaries.hstack(reps));
    return hs;
}

Vec HomSpace::class_coords(const ChainMap& f) const {
    Vec flat = idx.flatten(f);
    auto sol = reducer->solve(flat);
    if (!sol)
        throw InternalError("class_coords: map is not a chain map representative");
    Vec out(dim, 0);
    for (int k = 0; k < dim; ++k) out[k] = (*sol)[n_boundaries + k];
    return out;
}

int hom_dim(const Algebra& a, const ProjComplex& x, const ProjComplex& y, int m) {
    HomIndexer mid(a, x, y, m);
    if (mid.total() == 0) return 0;
    HomIndexer up(a, x, y, m + 1), down(a, x, y, m - 1);
    Matrix dm = hom_delta_matrix(a, x, y, mid, up);
    Matrix dprev = hom_delta_matrix(a, x, y, down, mid);
    return (mid.total() - dm.rank()) - dprev.rank();
}

std::map<int, int> hom_table(const Algebra& a, const ProjComplex& x, const ProjComplex& y) {
    std::map<int, int> t;
    auto [lo, hi] = hom_window(x, y);
    for (int m = lo; m <= hi; ++m) t[m] = hom_dim(a, x, y, m);
    return t;
}

bool is_null_homotopic(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                       const ChainMap& f) {
    HomIndexer mid(a, x, y, f.shift);
    HomIndexer down(a, x, y, f.shift - 1);
    Matrix dprev = hom_delta_matrix(a, x, y, down, mid);
    return Echelon(dprev).contains(mid.flatten(f));
}

bool is_contractible(const Algebra& a, const ProjComplex& x) {
    if (x.is_zero()) return true;
    return is_null_homotopic(a, x, x, identity_chain_map(a, x));
}

Cone cone(const Algebra& a, const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
    if (f.shift != 0) throw InternalError("cone of a nonzero-degree map");
    Cone out;
    int lo = std::min(x.min_degree() - 1, y.min_degree());
    int hi = std::max(x.max_degree() - 1, y.max_degree());
    for (int d = lo; d <= hi; ++d) {
        std::vector<int> t = x.term(d + 1);
        const auto& yt = y.term(d);
        t.insert(t.end(), yt.begin(), yt.end());
        if (!t.empty()) out.c.terms[d] = std::move(t);
    }
    for (int d = lo; d < hi; ++d) {
        const int xr = x.term_size(d + 2), xc = x.term_size(d + 1);
        const int yr = y.term_size(d + 1), yc = y.term_size(d);
        if (xr + yr == 0 || xc + yc == 0) continue;
        ElemMatrix m(a, xr + yr, xc + yc);
        if (x.diffs.count(d + 1)) {
            const ElemMatrix& dx = x.diffs.at(d + 1);
            for (int r = 0; r < xr; ++r)
                for (int c = 0; c < xc; ++c) m.at(r, c) = a.scale(dx.at(r, c), a.field.neg(1));
        }
        if (y.diffs.count(d)) {
            const ElemMatrix& dy = y.diffs.at(d);
            for (int r = 0; r < yr; ++r)
                for (int c = 0; c < yc; ++c) m.at(xr + r, xc + c) = dy.at(r, c);
        }
        {
            ElemMatrix fm = f.comp(a, x, y, d + 1);
            for (int r = 0; r < yr; ++r)
                for (int c = 0; c < xc; ++c)
                    m.at(xr + r, c) = a.scale(fm.at(r, c), a.field.neg(1));
        }
        if (!m.is_zero(a)) out.c.diffs[d] = std::move(m);
    }
    out.c.prune();
    validate(a, out.c);
    // Y -> C
    out.incl.shift = 0;
    for (const auto& [d, t] : y.terms) {
        const int xr = x.term_size(d + 1);
        ElemMatrix m(a, xr + (int)t.size(), (int)t.size());
        for (size_t i = 0; i < t.size(); ++i) m.at(xr + (int)i, (int)i) = a.idempotent(t[i]);
        out.incl.comps[d] = std::move(m);
    }
    // C -> X[1]
    out.proj.shift = 0;
    for (const auto& [d, t] : out.c.terms) {
        const int xr = x.term_size(d + 1);
        if (xr == 0) continue;
        ElemMatrix m(a, xr, (int)t.size());
        for (int i = 0; i < xr; ++i) m.at(i, i) = a.idempotent(x.term(d + 1)[i]);
        out.proj.comps[d] = std::move(m);
    }
    return out;
}

ChainMap stack_into_sum(const Algebra& a, const ProjComplex& x,
                        const std::vector<ProjComplex>& ys,
                        const std::vector<ChainMap>& fs) {
    ChainMap out;
    out.shift = 0;
    ProjComplex sum = direct_sum(a, ys);
    for (const auto& [d, t] : x.terms) {
        int rows = sum.term_size(d);
        if (rows == 0) continue;
        ElemMatrix m(a, rows, (int)t.size());
        int off = 0;
        for (size_t k = 0; k < ys.size(); ++k) {
            const int yr = ys[k].term_size(d);
            if (yr > 0) {
                ElemMatrix fm = fs[k].comp(a, x, ys[k], d);
                for (int r = 0; r < yr; ++r)
                    for (int c = 0; c < (int)t.size(); ++c) m.at(off + r, c) = fm.at(r, c);
            }
            off += yr;
        }
        if (!m.is_zero(a)) out.comps[d] = std::move(m);
    }
    return out;
}

Matrix degree_matrix(const Algebra& a, const std::vector<int>& dst,
                     const std::vector<int>& src, const ElemMatrix& m) {
    std::vector<int> roff(dst.size() + 1, 0), coff(src.size() + 1, 0);
    for (size_t i = 0; i < dst.size(); ++i) roff[i + 1] = roff[i] + a.proj_dim(dst[i]);
    for (size_t j = 0; j < src.size(); ++j) coff[j + 1] = coff[j] + a.proj_dim(src[j]);
    Matrix out(a.field, roff.back(), coff.back());
    for (size_t i = 0; i < dst.size(); ++i)
        for (size_t j = 0; j < src.size(); ++j) {
            if (a.is_zero(m.at((int)i, (int)j))) continue;
            Matrix blk = a.proj_map_matrix(m.at((int)i, (int)j), dst[i], src[j]);
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c)
                    out(roff[i] + r, coff[j] + c) = blk(r, c);
        }
    return out;
}

namespace {

bool degreewise_invertible(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                           const ChainMap& f) {
    for (const auto& [d, t] : x.terms) {
        const auto& yt = y.term(d);
        Matrix m = degree_matrix(a, yt, t, f.comp(a, x, y, d));
        if (m.rows() != m.cols() || m.rank() != m.rows()) return false;
    }
    return true;
}

}  // namespace

Iso iso_in_homotopy(const Algebra& a, const ProjComplex& x, const ProjComplex& y, Rng& rng) {
    ProjComplex x0 = minimize(a, x);
    ProjComplex y0 = minimize(a, y);
    if (x0.is_zero() || y0.is_zero())
        return (x0.is_zero() && y0.is_zero()) ? Iso::yes : Iso::no;
    // minimal complexes are isomorphic only degreewise, so the sorted vertex
    // lists must agree per degree
    if (x0.terms.size() != y0.terms.size()) return Iso::no;
    for (const auto& [d, t] : x0.terms) {
        std::vector<int> xs = t, ys = y0.term(d);
        if (xs.size() != ys.size()) return Iso::no;
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        if (xs != ys) return Iso::no;
    }
    if (x0 == y0) return Iso::yes;
    // Hom-dimension fingerprints
    auto [lo, hi] = hom_window(x0, x0);
    for (int m = lo; m <= hi; ++m) {
        const int dxx = hom_dim(a, x0, x0, m);
        if (hom_dim(a, y0, y0, m) != dxx || hom_dim(a, x0, y0, m) != dxx) return Iso::no;
    }
    HomSpace h = hom_space(a, x0, y0, 0);
    if (h.dim == 0) return Iso::no;
    // exact small-space sweep (projectivized; invertibility is scalar-invariant)
    const uint32_t p = a.field.p;
    double combos = 0, power = 1;
    for (int k = 0; k < h.dim && combos < (1 << 20); ++k) {
        combos += power;
        power *= p;
    }
    if (combos <= (1 << 20) && power <= (1 << 20)) {
        // iterate all coefficient vectors with first nonzero = 1
        for (int lead = 0; lead < h.dim; ++lead) {
            const int free = h.dim - lead - 1;
            Vec coords(h.dim, 0);
            coords[lead] = 1;
            std::vector<uint32_t> tail(free, 0);
            while (true) {
                ChainMap f = h.basis[lead];
                for (int t = 0; t < free; ++t)
                    if (tail[t])
                        f = add_maps(a, f, scale_map(a, h.basis[lead + 1 + t], tail[t]));
                if (degreewise_invertible(a, x0, y0, f)) return Iso::yes;
                int pos = 0;
                while (pos < free && tail[pos] == p - 1) tail[pos++] = 0;
                if (pos == free) break;
                ++tail[pos];
            }
        }
        return Iso::no;  // the sweep was exhaustive
    }
    // randomized search
    for (const auto& f : h.basis)
        if (degreewise_invertible(a, x0, y0, f)) return Iso::yes;
    for (int attempt = 0; attempt < 500; ++attempt) {
        ChainMap f;
        f.shift = 0;
        bool first = true;
        for (int k = 0; k < h.dim; ++k) {
            const uint32_t c = rng.below(p);
            if (!c) continue;
            if (first) {
                f = scale_map(a, h.basis[k], c);
                first = false;
            } else {
                f = add_maps(a, f, scale_map(a, h.basis[k], c));
            }
        }
        if (first) continue;
        if (degreewise_invertible(a, x0, y0, f)) return Iso::yes;
    }
    return Iso::inconclusive;
}

bool iso_certain(const Algebra& a, const ProjComplex& x, const ProjComplex& y, Rng& rng) {
    Iso r = iso_in_homotopy(a, x, y, rng);
    if (r == Iso::inconclusive)
        throw MathError("isomorphism test inconclusive after exhausting retries");
    return r == Iso::yes;
}

}  // namespace silt
