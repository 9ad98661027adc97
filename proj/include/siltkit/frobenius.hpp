#pragma once

#include "siltkit/algebra.hpp"

namespace silt {

// Nondegenerate associative bilinear form beta(a,b) = lambda(ab) together with
// the Nakayama automorphism nu recovered from beta(a,b) = beta(b, nu(a)).
// nu is normalized to permute the idempotent basis elements on the nose
// (it is only unique up to inner automorphism, so this costs nothing).
struct FrobeniusForm {
    Vec functional;  // lambda as coefficients on the dual basis
    Matrix gram;     // G_ij = lambda(b_i b_j), invertible
    AlgebraAutomorphism nakayama;
};

// Searches the space of associative functionals (all of A*, intersected with
// the symmetry constraints when require_symmetric) for one with invertible
// Gram matrix: seeded random sampling, then a deterministic greedy rank
// climb, then exhaustive enumeration when the space is small enough.
// nullopt means no nondegenerate form was found, which for basic split
// algebras coincides with "not self-injective" (cross-checked against the
// socle criterion in the test suite).
std::optional<FrobeniusForm> frobenius_form(const Algebra& a, bool require_symmetric,
                                            Rng& rng);

struct TrivialExtension {
    Algebra lambda;
    int a_dim;  // basis 0..a_dim-1 is the embedded copy of A

    AlgebraElement include(const AlgebraElement& a) const;
    // index of the dual basis element D(b_t) inside lambda
    int dual_index(int t) const { return a_dim + t; }
};

// Twisted trivial extension T_sigma A = A + D(A) with multiplication
// (a,f)(b,g) = (ab, sigma(a)*g + f*b); dim = 2 dim A, rad = rad A + D(A).
// Associativity is validated exhaustively at construction.
TrivialExtension twisted_trivial_extension(const Algebra& a, const AlgebraAutomorphism& sigma);

// The automorphism (a,f) -> (sigma(a), f sigma^{-1}) of T_sigma A, validated.
AlgebraAutomorphism extension_nakayama_formula(const Algebra& a,
                                               const AlgebraAutomorphism& sigma,
                                               const TrivialExtension& ext);

}  // namespace silt
