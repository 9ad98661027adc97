#pragma once

#include <map>

#include "siltkit/algebra.hpp"

namespace silt {

// Dense matrix with algebra-element entries; entry (r,c) of a differential
// X^i -> X^{i+1} lies in the corner e_{w_r} A e_{v_c} and acts by left
// multiplication.
struct ElemMatrix {
    int rows = 0, cols = 0;
    std::vector<AlgebraElement> e;

    ElemMatrix() = default;
    ElemMatrix(const Algebra& a, int r, int c)
        : rows(r), cols(c), e(size_t(r) * c, a.zero()) {}

    const AlgebraElement& at(int r, int c) const { return e[size_t(r) * cols + c]; }
    AlgebraElement& at(int r, int c) { return e[size_t(r) * cols + c]; }

    static ElemMatrix mul(const Algebra& a, const ElemMatrix& lhs, const ElemMatrix& rhs);
    static ElemMatrix add(const Algebra& a, const ElemMatrix& lhs, const ElemMatrix& rhs);
    ElemMatrix scaled(const Algebra& a, uint32_t c) const;
    bool is_zero(const Algebra& a) const;
    bool operator==(const ElemMatrix& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }
};

// Bounded complex of direct sums of indecomposable projectives e_vA.
// terms[d] lists the vertices of the summands in degree d; diffs[d] maps
// degree d to degree d+1 (rows = summands of X^{d+1}, cols = of X^d).
struct ProjComplex {
    std::map<int, std::vector<int>> terms;
    std::map<int, ElemMatrix> diffs;

    bool is_zero() const { return terms.empty(); }
    int min_degree() const { return terms.empty() ? 0 : terms.begin()->first; }
    int max_degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    const std::vector<int>& term(int d) const;
    int term_size(int d) const { return (int)term(d).size(); }
    ElemMatrix diff(const Algebra& a, int d) const;  // zero matrix when absent
    int total_summands() const;
    bool operator==(const ProjComplex& o) const {
        return terms == o.terms && diffs == o.diffs;
    }

    // drops empty degrees / zero-sized matrices
    void prune();
};

// Corner typing and d^2 = 0; throws InternalError naming the offending degree.
void validate(const Algebra& a, const ProjComplex& x);

ProjComplex projective_stalk(const Algebra& a, int v, int degree = 0);
ProjComplex algebra_stalk(const Algebra& a);

ProjComplex shift(const Algebra& a, const ProjComplex& x, int m);
ProjComplex direct_sum(const Algebra& a, const std::vector<ProjComplex>& xs);

using GVector = std::vector<long long>;
GVector g_vector(const Algebra& a, const ProjComplex& x);
long long int_det(std::vector<std::vector<long long>> m);  // fraction-free

// sigma^* = - tensor A_sigma: relabels e_vA to e_{rho^{-1}(v)}A and transports
// entries through sigma^{-1}; an autoequivalence of K^b(proj A).
ProjComplex twist_complex(const Algebra& a, const ProjComplex& x,
                          const AlgebraAutomorphism& sigma);

// - tensor_A Lambda along the trivial-extension embedding: e_vA -> e_vLambda,
// entries pushed through the inclusion.
struct TrivialExtension;  // frobenius.hpp
ProjComplex base_change(const Algebra& a, const ProjComplex& x,
                        const TrivialExtension& ext);

// Gaussian cancellation of unit entries; the result is homotopy equivalent,
// with all differential entries in rad A (the minimal representative).
ProjComplex minimize(const Algebra& a, const ProjComplex& x);
bool is_minimal(const Algebra& a, const ProjComplex& x);

}  // namespace silt
