#include "siltkit/poly.hpp"

#include <algorithm>

namespace silt {

static void trim(Vec& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly::Poly(PrimeField field, Vec coeffs) : f(field), c(std::move(coeffs)) {
    for (auto& v : c) v %= f.p;
    trim(c);
}

Poly Poly::x(PrimeField f) { return Poly(f, {0, 1}); }

Poly Poly::constant(PrimeField f, uint32_t v) { return Poly(f, {v}); }

Poly Poly::from_ints(PrimeField f, std::initializer_list<long long> coeffs) {
    Vec c;
    for (long long v : coeffs) c.push_back(f.from_int(v));
    return Poly(f, std::move(c));
}

Poly Poly::add(const Poly& o) const {
    Vec r(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] = f.add(r[i], o.c[i]);
    trim(r);
    Poly out; out.f = f; out.c = std::move(r);
    return out;
}

Poly Poly::sub(const Poly& o) const {
    Vec r(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] = f.sub(r[i], o.c[i]);
    trim(r);
    Poly out; out.f = f; out.c = std::move(r);
    return out;
}

Poly Poly::mul(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f, {});
    Vec r(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        for (size_t j = 0; j < o.c.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(c[i], o.c[j]));
    }
    Poly out; out.f = f; out.c = std::move(r);
    return out;
}

Poly Poly::scaled(uint32_t s) const {
    Poly r = *this;
    for (auto& v : r.c) v = f.mul(v, s);
    trim(r.c);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(f.inv(lead()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    Poly r = *this;
    if (r.degree() < d.degree()) return {Poly(f, {}), r};
    Vec q(r.degree() - d.degree() + 1, 0);
    const uint32_t linv = f.inv(d.lead());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int shift = r.degree() - d.degree();
        const uint32_t coef = f.mul(r.lead(), linv);
        q[shift] = coef;
        for (size_t i = 0; i < d.c.size(); ++i)
            r.c[shift + i] = f.sub(r.c[shift + i], f.mul(coef, d.c[i]));
        trim(r.c);
    }
    Poly qq; qq.f = f; qq.c = std::move(q);
    trim(qq.c);
    return {qq, r};
}

Poly Poly::derivative() const {
    if (c.size() <= 1) return Poly(f, {});
    Vec r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i)
        r[i - 1] = f.mul(c[i], static_cast<uint32_t>(i % f.p));
    trim(r);
    Poly out; out.f = f; out.c = std::move(r);
    return out;
}

uint32_t Poly::eval(uint32_t x) const {
    uint32_t v = 0;
    for (size_t i = c.size(); i-- > 0;) v = f.add(f.mul(v, x), c[i]);
    return v;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
    PrimeField f = a.f.p ? a.f : b.f;
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1 = Poly(f, {});
    Poly t0 = Poly(f, {}), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        Poly s = s0.sub(q.mul(s1)); s0 = s1; s1 = s;
        Poly t = t0.sub(q.mul(t1)); t0 = t1; t1 = t;
    }
    if (!r0.is_zero()) {
        const uint32_t linv = f.inv(r0.lead());
        r0 = r0.scaled(linv); s0 = s0.scaled(linv); t0 = t0.scaled(linv);
    }
    return {r0, s0, t0};
}

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(base.f, 1).mod(mod);
    Poly b = base.mod(mod);
    while (e) {
        if (e & 1) r = r.mul(b).mod(mod);
        b = b.mul(b).mod(mod);
        e >>= 1;
    }
    return r;
}

// p-th root of g(x) = h(x^p): over the prime field coefficients are fixed by
// Frobenius, so just keep every p-th coefficient.
static Poly pth_root(const Poly& g) {
    const uint32_t p = g.f.p;
    Vec r;
    for (size_t i = 0; i < g.c.size(); i += p) r.push_back(g.c[i]);
    return Poly(g.f, std::move(r));
}

// square-free decomposition: list of (g, m) with f = prod g^m, g square-free.
static void square_free(const Poly& f, int outer_mult,
                        std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() <= 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        square_free(pth_root(f), outer_mult * (int)f.f.p, out);
        return;
    }
    Poly g = poly_gcd(f, d);
    Poly w = f.divmod(g).first;  // product of square-free part factors
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, g);
        Poly piece = w.divmod(y).first;  // factors of multiplicity exactly i
        if (piece.degree() > 0) out.push_back({piece.monic(), i * outer_mult});
        w = y;
        g = g.divmod(y).first;
        ++i;
    }
    if (g.degree() > 0) square_free(pth_root(g), outer_mult * (int)f.f.p, out);
}

static Poly random_poly(PrimeField f, int deg, Rng& rng) {
    Vec c(deg + 1);
    for (auto& v : c) v = rng.below(f.p);
    if (c.back() == 0) c.back() = 1;
    return Poly(f, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting of a square-free product of
// irreducibles all of degree d.
static void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const uint32_t p = f.f.p;
    while (true) {
        Poly a = random_poly(f.f, f.degree() - 1, rng);
        Poly g = poly_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f.divmod(g).first, d, rng, out);
            return;
        }
        Poly h;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            h = a.mod(f);
            Poly t = h;
            for (int i = 1; i < d; ++i) {
                t = t.mul(t).mod(f);
                h = h.add(t);
            }
        } else {
            uint64_t e = 1;
            for (int i = 0; i < d; ++i) e *= p;
            h = poly_powmod(a, (e - 1) / 2, f).sub(Poly::constant(f.f, 1));
        }
        g = poly_gcd(h, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f.divmod(g).first, d, rng, out);
            return;
        }
    }
}

std::vector<PolyFactor> factor_poly(const Poly& f, Rng& rng) {
    if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
    std::vector<PolyFactor> result;
    if (f.degree() == 0) return result;
    std::vector<std::pair<Poly, int>> sf;
    square_free(f.monic(), 1, sf);
    for (auto& [g, mult] : sf) {
        // distinct-degree: strip factors of degree 1, 2, ...
        Poly rest = g;
        Poly frob = Poly::x(g.f);
        int d = 0;
        while (rest.degree() > 0) {
            ++d;
            if (2 * d > rest.degree()) {
                result.push_back({rest.monic(), mult});
                break;
            }
            frob = poly_powmod(frob, g.f.p, rest);
            Poly gd = poly_gcd(frob.sub(Poly::x(g.f)), rest);
            if (gd.degree() > 0) {
                std::vector<Poly> pieces;
                equal_degree(gd, d, rng, pieces);
                for (auto& piece : pieces) result.push_back({piece, mult});
                rest = rest.divmod(gd).first;
                frob = frob.mod(rest);
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        return a.factor.c < b.factor.c;
    });
    return result;
}

bool is_irreducible(const Poly& f, Rng& rng) {
    if (f.degree() <= 0) return false;
    auto fs = factor_poly(f, rng);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

Poly min_poly_of_matrix(const Matrix& m) {
    const PrimeField f = m.field();
    const int n = m.rows();
    if (n == 0) return Poly::constant(f, 1);
    // minimal polynomial = lcm over a spanning set of cyclic vector annihilators;
    // for our sizes it is enough to combine the annihilators of the unit vectors.
    Poly result = Poly::constant(f, 1);
    for (int start = 0; start < n; ++start) {
        Vec v(n, 0);
        v[start] = 1;
        Matrix krylov(f, n, 1);
        krylov.set_col(0, v);
        Vec cur = v;
        Poly ann;
        while (true) {
            Vec next = m.mul_vec(cur);
            Echelon e(krylov);
            if (auto coords = e.solve(next)) {
                // next = sum coords_i * m^i v  =>  annihilator found
                Vec pc(krylov.cols() + 1, 0);
                for (int i = 0; i < krylov.cols(); ++i) pc[i] = f.neg((*coords)[i]);
                pc[krylov.cols()] = 1;
                ann = Poly(f, std::move(pc));
                break;
            }
            krylov = krylov.hstack(Matrix(f, n, 1));
            krylov.set_col(krylov.cols() - 1, next);
            cur = next;
        }
        Poly g = poly_gcd(result, ann);
        result = result.mul(ann.divmod(g).first);
        if (result.degree() >= n) break;
    }
    return result.monic();
}

Poly char_poly_of_matrix(const Matrix& m) {
    const PrimeField f = m.field();
    const int n = m.rows();
    if (n != m.cols()) throw InternalError("char poly of non-square matrix");
    if (n == 0) return Poly::constant(f, 1);
    // Hessenberg form, then the standard determinant recurrence.
    Matrix h = m;
    for (int col = 0; col < n - 2; ++col) {
        int piv = -1;
        for (int i = col + 1; i < n; ++i)
            if (h(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
        }
        const uint32_t inv = f.inv(h(col + 1, col));
        for (int i = col + 2; i < n; ++i) {
            const uint32_t c = f.mul(h(i, col), inv);
            if (!c) continue;
            for (int j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(c, h(col + 1, j)));
            for (int j = 0; j < n; ++j) h(j, col + 1) = f.add(h(j, col + 1), f.mul(c, h(j, i)));
        }
    }
    // p_0 = 1, p_k = char poly of leading k x k block
    std::vector<Poly> p(n + 1);
    p[0] = Poly::constant(f, 1);
    for (int k = 1; k <= n; ++k) {
        // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_{i<k-1} h[i][k-1] (prod subdiag) p_i
        Poly term = Poly(f, {f.neg(h(k - 1, k - 1)), 1}).mul(p[k - 1]);
        uint32_t sub = 1;
        for (int i = k - 2; i >= 0; --i) {
            sub = f.mul(sub, h(i + 1, i));
            if (!sub) break;
            const uint32_t coef = f.mul(sub, h(i, k - 1));
            if (coef) term = term.sub(p[i].scaled(coef));
        }
        p[k] = term;
    }
    return p[n];
}

}  // namespace silt
