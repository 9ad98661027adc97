#pragma once

#include "siltkit/hom.hpp"

namespace silt {

struct Summand {
    ProjComplex piece;  // minimal, local endomorphism algebra
    int multiplicity;
};

// Krull-Schmidt decomposition in K^b(proj A): splits off honest chain-level
// idempotents lifted from the semisimple quotient of End(X), recursing until
// every endomorphism algebra is local. Locality is certified by
// dim End/rad = 1 (splitness); a non-split simple quotient raises MathError.
std::vector<Summand> decompose(const Algebra& a, const ProjComplex& x, Rng& rng);

// One copy of each indecomposable summand.
ProjComplex basic_form(const Algebra& a, const ProjComplex& x, Rng& rng);

// End_{K^b}(X) as a first-class structure-constant algebra in Peirce form:
// basis = summand projections + corner-homogeneous radical elements, with a
// representative chain map per basis element.
struct EndAlgebra {
    Algebra alg;
    std::vector<ChainMap> reps;
    ProjComplex object;        // the minimized complex the algebra acts on
    bool basic = true;
};

EndAlgebra end_algebra(const Algebra& a, const ProjComplex& x, Rng& rng);

}  // namespace silt
