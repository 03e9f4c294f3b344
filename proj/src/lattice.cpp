#include "nsg/lattice.hpp"

namespace nsg {

Int adjunction_genus(DivisorClass d) {
    const Int self = intersect(d, d);
    const Int with_k = intersect(d, canonical_class());
    const Int sum = self + with_k;
    if (sum % 2 != 0)
        throw Error(Errc::ParityError, "D.D + D.K is odd");
    return sum / 2 + 1;
}

Int branch_degree(Int d) {
    if (d < 4)
        throw Error(Errc::DegreeTooSmall,
                    "degree " + std::to_string(d) + " < 4");
    DivisorClass minus_two_k{6, -2};
    return intersect(curve_class(d), minus_two_k);
}

Int hurwitz_genus(Int g, Int branch_points) {
    if (g < 0 || branch_points < 0)
        throw Error(Errc::InvalidParameters, "negative genus or branch count");
    if (branch_points % 2 != 0)
        throw Error(Errc::OddBranchCount,
                    std::to_string(branch_points) + " branch points");
    return 2 * g - 1 + branch_points / 2;
}

} // namespace nsg
