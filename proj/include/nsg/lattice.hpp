#pragma once

#include "nsg/semigroup.hpp"

namespace nsg {

// Integer intersection theory on the blowup of the plane at one point.
// The Picard lattice has rank 2 with basis L (total transform of a line)
// and E (the exceptional curve): L.L = 1, E.E = -1, L.E = 0.

struct DivisorClass {
    Int a = 0;  // coefficient of L
    Int b = 0;  // coefficient of E

    bool operator==(const DivisorClass&) const = default;
};

inline Int intersect(DivisorClass d1, DivisorClass d2) {
    return d1.a * d2.a - d1.b * d2.b;
}

// K ~ -3L + E.
inline DivisorClass canonical_class() {
    return {-3, 1};
}

// (D.D + D.K)/2 + 1. Throws ParityError if D.D + D.K is odd (unreachable
// on this lattice, kept as a guard).
Int adjunction_genus(DivisorClass d);

// Degree of the intersection of a curve in class dL - E with the branch
// locus in |-2K|: 6d - 2 points. Throws DegreeTooSmall for d < 4.
Int branch_degree(Int d);

// Genus of a double cover of a genus-g curve with the given number of
// branch points: 2g - 1 + branch_points/2. Throws OddBranchCount.
Int hurwitz_genus(Int g, Int branch_points);

// Class of the curves under study: dL - E.
inline DivisorClass curve_class(Int d) {
    return {d, -1};
}

} // namespace nsg
