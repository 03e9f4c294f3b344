#pragma once

#include <string>
#include <vector>

#include "nsg/families.hpp"

namespace nsg {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    FamilyCase family = FamilyCase::Lemma21i;
    Int d = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Runs every identity applicable to the case at the given degree:
// genus against the curve genus, odd gaps against the closed-form set,
// odd gap count against the surface-lattice route, halving against the
// base semigroup, minimum odd member, the excluded-member facts, and
// witness coverage of the formula set.
VerificationReport verify_case(FamilyCase c, Int d);

// verify_case over cases x [d_min, d_max], fanned out to a worker pool.
// Reports come back in deterministic (case, d) order regardless of
// completion order. Throws DegreeTooSmall (d_min < 4) or
// InvalidParameters (empty range).
std::vector<VerificationReport> verify_sweep(const std::vector<FamilyCase>& cases,
                                             Int d_min, Int d_max);

// Decimal rendering used by report strings: sorted values joined by
// single spaces, "{}" for the empty set.
std::string render_values(const std::vector<Int>& values);

} // namespace nsg
