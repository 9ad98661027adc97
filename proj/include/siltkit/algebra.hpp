#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siltkit/linalg.hpp"

namespace silt {

// Vertices are 0-based internally; the text formats use 1-based labels.
struct Quiver {
    struct Arrow {
        std::string name;
        int src = 0;
        int tgt = 0;
    };
    int num_vertices = 0;
    std::vector<Arrow> arrows;

    void validate() const;  // endpoints in range, names unique per source
};

// Linear combination of parallel paths of equal length; paths are arrow-index
// sequences composed left to right (pq = "p then q").
struct Relation {
    struct Term {
        uint32_t coeff = 1;
        std::vector<int> arrows;
    };
    std::vector<Term> terms;
};

using AlgebraElement = Vec;

// Basic split finite-dimensional algebra as structure constants over GF(p).
// Every basis element is corner-homogeneous: b = e_src(b) * b * e_tgt(b).
class Algebra {
public:
    PrimeField field;
    int num_vertices = 0;
    std::vector<std::string> basis_names;
    std::vector<int> basis_src, basis_tgt;
    std::vector<int> idempotent_index;        // basis position of e_i
    std::vector<Vec> radical_basis;
    std::optional<std::vector<int>> grading;  // path length, when meaningful

    int dim() const { return (int)basis_names.size(); }

    AlgebraElement zero() const { return AlgebraElement(dim(), 0); }
    AlgebraElement unit() const;
    AlgebraElement basis_element(int t) const;
    AlgebraElement idempotent(int v) const { return basis_element(idempotent_index[v]); }

    // b_i * b_j as a sparse row of the multiplication table.
    const std::vector<std::pair<int, uint32_t>>& table(int i, int j) const {
        return table_[size_t(i) * dim() + j];
    }
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scale(const AlgebraElement& a, uint32_t c) const;
    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
    bool is_zero(const AlgebraElement& a) const;

    Matrix left_mult_matrix(const AlgebraElement& a) const;
    Matrix right_mult_matrix(const AlgebraElement& a) const;

    // Basis indices of e_i A e_j (paths i -> j).
    const std::vector<int>& corner_basis(int i, int j) const {
        return corners_[size_t(i) * num_vertices + j];
    }
    // Basis indices of the projective e_v A (paths with source v).
    const std::vector<int>& proj_basis(int v) const { return proj_[v]; }
    int proj_dim(int v) const { return (int)proj_[v].size(); }

    // Matrix of "left multiplication by alpha": e_jA -> e_iA, alpha in e_iAe_j,
    // in the proj_basis coordinates of the two projectives.
    Matrix proj_map_matrix(const AlgebraElement& alpha, int i, int j) const;

    bool in_radical(const AlgebraElement& a) const;
    // Inverse of u inside the local corner ring e_vAe_v, or nullopt if u is a
    // non-unit there.
    std::optional<AlgebraElement> corner_unit_inverse(const AlgebraElement& u, int v) const;

    // Coefficient of e_v in a (the semisimple part of a diagonal corner element).
    uint32_t idempotent_coefficient(const AlgebraElement& a, int v) const {
        return a[idempotent_index[v]];
    }

    std::string format_element(const AlgebraElement& a) const;

    // Build from raw data with full validation: corner homogeneity,
    // idempotent axioms, associativity on all basis triples, radical is a
    // nilpotent ideal with split semisimple quotient. An empty radical_basis
    // means "unknown": it is computed (characteristic-p-safe) and validated.
    static Algebra from_structure(PrimeField f, int num_vertices,
                                  std::vector<std::string> names,
                                  std::vector<int> src, std::vector<int> tgt,
                                  std::vector<int> idem_index,
                                  std::vector<std::vector<std::pair<int, uint32_t>>> table,
                                  std::vector<Vec> radical_basis,
                                  std::optional<std::vector<int>> grading,
                                  bool require_basic = true);

private:
    std::vector<std::vector<std::pair<int, uint32_t>>> table_;
    std::vector<std::vector<int>> corners_;  // num_vertices^2 lists
    std::vector<std::vector<int>> proj_;     // per source vertex
    std::optional<Echelon> radical_echelon_;

    void build_indexes();
    void validate_structure(bool require_basic) const;
};

// Path algebra of a bound quiver modulo the degreewise closure of the
// length-homogeneous relation ideal. Stops at the first zero component;
// throws MathError if none is reached within max_len.
Algebra path_algebra(const Quiver& q, const std::vector<Relation>& rels,
                     int max_len, PrimeField f);

struct AlgebraAutomorphism {
    Matrix m;                      // columns are images of basis elements
    Matrix minv;
    std::vector<int> vertex_perm;  // rho with sigma(e_i) = e_rho(i)

    AlgebraElement apply(const AlgebraElement& a) const { return m.mul_vec(a); }
    AlgebraElement apply_inverse(const AlgebraElement& a) const { return minv.mul_vec(a); }
    int vertex_image(int v) const { return vertex_perm[v]; }
    int vertex_preimage(int v) const;
    bool is_identity() const;
};

// Verifies multiplicativity on all basis pairs, unitality, invertibility and
// that each e_i maps to exactly some e_j. Throws MathError otherwise.
AlgebraAutomorphism validate_automorphism(const Algebra& a, const Matrix& images);

AlgebraAutomorphism identity_automorphism(const Algebra& a);
AlgebraAutomorphism compose(const Algebra& a, const AlgebraAutomorphism& f,
                            const AlgebraAutomorphism& g);  // f after g
AlgebraAutomorphism inverse(const AlgebraAutomorphism& f);

struct SelfInjectivityReport {
    bool self_injective = false;
    bool weakly_symmetric = false;
    bool symmetric = false;
    std::vector<int> nakayama_perm;              // pi with P_i = I_pi(i); empty if not SI
    std::vector<std::vector<int>> socle_vectors;  // soc(P_i) dimension by vertex
};

// Socle criterion for basic split algebras: self-injective iff every soc(P_i)
// is simple and i -> vertex(soc P_i) is a permutation; weakly symmetric iff
// that permutation is the identity. The symmetric flag is delegated to
// frobenius_form with the symmetry constraint.
SelfInjectivityReport self_injectivity_report(const Algebra& a, Rng& rng);

// soc(e_vA) = {m in e_vA : m rad = 0}, returned as columns in the proj_basis
// coordinates of e_vA.
Matrix socle_of_projective(const Algebra& a, int v);

// Radical of an abstract structure-constant algebra given by dense product
// rows (rows[i*d+j] = coefficients of b_i b_j); correct in any characteristic.
std::vector<Vec> radical_of_dense_table(PrimeField f, int d, const std::vector<Vec>& rows);

}  // namespace silt
