#pragma once

#include <cstdint>
#include <vector>

#include "nsg/errors.hpp"

namespace nsg {

using Int = std::int64_t;

// Strictly increasing list of positive integers; the complement of a
// numerical semigroup in the non-negative integers.
using GapSet = std::vector<Int>;

// A numerical semigroup: an additively closed subset of the non-negative
// integers containing 0 with finite complement. Canonical representation is
// a dense membership bitmap over 0..bound with bound = m*M + M for smallest
// generator m and largest generator M, which always exceeds the Frobenius
// number of a gcd-1 generator set. Immutable after construction.
class NumericalSemigroup {
public:
    // Smallest additively closed set containing 0 and gens. Throws
    // EmptyGenerators, InvalidParameters (non-positive generator),
    // GcdNotOne, or LimitExceeded.
    static NumericalSemigroup from_generators(std::vector<Int> gens);

    bool contains(Int n) const;

    // Sorted complement in the non-negative integers.
    GapSet gaps() const;
    GapSet odd_gaps() const;
    GapSet even_gaps() const;

    Int genus() const { return static_cast<Int>(gaps().size()); }
    Int frobenius() const;          // largest gap, -1 when there are none
    Int multiplicity() const;       // least positive member
    Int conductor() const { return conductor_; }
    Int min_odd_element() const;    // least odd member

    // h^0 profile: n+1 minus the number of gaps <= n. Increases by exactly
    // one from n-1 to n iff n is a member.
    Int h0_profile(Int n) const;

    // Halving: { h/2 : h even, h in this }. Always a numerical semigroup.
    NumericalSemigroup d2() const;

    // The double-covering-type semigroup 2*this + sum of odd_gens*N0,
    // i.e. from_generators({2h : h generator} + odd_gens). Throws NotOdd
    // if any listed generator is even; GcdNotOne propagates when odd_gens
    // is empty.
    NumericalSemigroup double_cover(const std::vector<Int>& odd_gens) const;

    // Defining generators as given (sorted, deduplicated, not minimized).
    const std::vector<Int>& generators() const { return generators_; }

    // Membership-for-membership equality.
    bool operator==(const NumericalSemigroup& other) const;
    bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

private:
    NumericalSemigroup() = default;

    std::vector<bool> members_;     // presence over 0..bound
    Int conductor_ = 0;
    std::vector<Int> generators_;
};

} // namespace nsg
