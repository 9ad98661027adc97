#pragma once

#include <vector>

#include "siltkit/linalg.hpp"

namespace silt {

// Univariate polynomial over GF(p), coefficients low degree first, normalized
// so the leading coefficient is nonzero (zero polynomial = empty vector).
struct Poly {
    PrimeField f;
    Vec c;

    Poly() = default;
    Poly(PrimeField field, Vec coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }  // -1 for zero
    uint32_t lead() const { return c.back(); }

    static Poly x(PrimeField f);
    static Poly constant(PrimeField f, uint32_t v);
    static Poly from_ints(PrimeField f, std::initializer_list<long long> coeffs);

    Poly add(const Poly& o) const;
    Poly sub(const Poly& o) const;
    Poly mul(const Poly& o) const;
    Poly scaled(uint32_t s) const;
    Poly monic() const;
    // quotient/remainder by nonzero divisor
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly mod(const Poly& d) const { return divmod(d).second; }
    Poly derivative() const;
    uint32_t eval(uint32_t x) const;
    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_gcd(Poly a, Poly b);
// g = gcd(a,b) together with s,t such that s*a + t*b = g.
struct PolyXgcd { Poly g, s, t; };
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);
Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod);

struct PolyFactor {
    Poly factor;       // monic irreducible
    int multiplicity;
};

// Complete factorization over GF(p): square-free split, then distinct-degree
// and Cantor-Zassenhaus equal-degree splitting. Deterministic given rng.
std::vector<PolyFactor> factor_poly(const Poly& f, Rng& rng);

bool is_irreducible(const Poly& f, Rng& rng);

// Minimal polynomial of the matrix m (acting on column vectors).
Poly min_poly_of_matrix(const Matrix& m);
// Characteristic polynomial via Hessenberg reduction, degree = m.rows().
Poly char_poly_of_matrix(const Matrix& m);

}  // namespace silt
