#pragma once

#include <optional>

#include "siltkit/complex.hpp"

namespace silt {

// Degree-m graded map: components X^i -> Y^{i+m} as corner-element matrices.
// Chain maps satisfy d_Y f = (-1)^m f d_X.
struct ChainMap {
    int shift = 0;
    std::map<int, ElemMatrix> comps;

    ElemMatrix comp(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                    int i) const;
    bool is_zero(const Algebra& a) const;
};

ChainMap identity_chain_map(const Algebra& a, const ProjComplex& x);
// f: X -> Y, then g: Y -> Z; shifts add.
ChainMap compose(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                 const ProjComplex& z, const ChainMap& f, const ChainMap& g);
ChainMap add_maps(const Algebra& a, const ChainMap& f, const ChainMap& g);
ChainMap scale_map(const Algebra& a, const ChainMap& f, uint32_t c);

bool is_chain_map(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                  const ChainMap& f);
bool is_null_homotopic(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                       const ChainMap& f);

// Flat coordinates for the space of degree-m graded module maps X -> Y.
class HomIndexer {
public:
    HomIndexer() = default;
    HomIndexer(const Algebra& a, const ProjComplex& x, const ProjComplex& y, int m);

    int total() const { return total_; }
    int shift() const { return shift_; }
    Vec flatten(const ChainMap& f) const;
    ChainMap unflatten(const Vec& v) const;

    struct Entry {
        int deg, r, c;
        std::vector<int> corner;  // global basis indices of e_{w_r} A e_{v_c}
        int offset;
    };
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
    std::map<int, std::vector<int>> x_terms_, y_terms_;
    int shift_ = 0;
    int total_ = 0;
    int alg_dim_ = 0;
};

// Hom_{K^b(proj A)}(X, Y[m]): dimension, representative chain maps, and the
// data needed to reduce any chain map to coordinates in that basis.
struct HomSpace {
    int shift = 0;
    int dim = 0;
    std::vector<ChainMap> basis;

    // Coordinates of the homotopy class of f in `basis`. f must be a chain map.
    Vec class_coords(const ChainMap& f) const;

    HomIndexer idx;
    std::optional<Echelon> reducer;  // echelon of [boundaries | representatives]
    int n_boundaries = 0;
};

// Matrix of the Hom-complex differential between two flat coordinate systems.
Matrix hom_delta_matrix(const Algebra& a, const ProjComplex& x, const ProjComplex& y,
                        const HomIndexer& from, const HomIndexer& to);

HomSpace hom_space(const Algebra& a, const ProjComplex& x, const ProjComplex& y, int m);
int hom_dim(const Algebra& a, const ProjComplex& x, const ProjComplex& y, int m);
// All shifts in the finite support window [minY - maxX, maxY - minX].
std::map<int, int> hom_table(const Algebra& a, const ProjComplex& x, const ProjComplex& y);
std::pair<int, int> hom_window(const ProjComplex& x, const ProjComplex& y);

bool is_contractible(const Algebra& a, const ProjComplex& x);

struct Cone {
    ProjComplex c;
    ChainMap incl;  // Y -> C
    ChainMap proj;  // C -> X[1]
};
// Mapping cone of a degree-0 chain map f: X -> Y, with triangle maps.
Cone cone(const Algebra& a, const ProjComplex& x, const ProjComplex& y, const ChainMap& f);

// Block-column map X -> direct_sum(ys) from maps X -> ys[k] (all degree 0).
ChainMap stack_into_sum(const Algebra& a, const ProjComplex& x,
                        const std::vector<ProjComplex>& ys,
                        const std::vector<ChainMap>& fs);

// k-linear matrix of one degree component (dst/src are vertex lists).
Matrix degree_matrix(const Algebra& a, const std::vector<int>& dst,
                     const std::vector<int>& src, const ElemMatrix& m);

enum class Iso { yes, no, inconclusive };

// Isomorphism test in the homotopy category: structural rejects are sound,
// witnesses are exact; "inconclusive" is a first-class outcome reported when
// the randomized search exhausts its budget with matching fingerprints.
Iso iso_in_homotopy(const Algebra& a, const ProjComplex& x, const ProjComplex& y, Rng& rng);
bool iso_certain(const Algebra& a, const ProjComplex& x, const ProjComplex& y, Rng& rng);

}  // namespace silt
