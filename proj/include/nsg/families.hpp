#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/lattice.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// The seven semigroup families, indexed by the tangency pattern at the
// distinguished point and the position of the named points relative to
// the exceptional curve. lemma21i/lemma21ii are the base (plane-curve)
// semigroups; the thm* cases are their double-covering-type extensions.
enum class FamilyCase {
    Lemma21i,
    Lemma21ii,
    Thm11a,
    Thm11b,
    Thm12a,
    Thm12b,
    Thm12c,
};

inline constexpr std::array<FamilyCase, 7> kAllFamilyCases = {
    FamilyCase::Lemma21i,  FamilyCase::Lemma21ii, FamilyCase::Thm11a,
    FamilyCase::Thm11b,    FamilyCase::Thm12a,    FamilyCase::Thm12b,
    FamilyCase::Thm12c,
};

std::string_view family_name(FamilyCase c);
std::optional<FamilyCase> parse_family(std::string_view name);

inline bool is_double_cover(FamilyCase c) {
    return c != FamilyCase::Lemma21i && c != FamilyCase::Lemma21ii;
}

inline bool is_thm12(FamilyCase c) {
    return c == FamilyCase::Thm12a || c == FamilyCase::Thm12b ||
           c == FamilyCase::Thm12c;
}

// Semigroup at the branch point downstairs. Tangency-d cases give
// <d-1, d>; tangency-(d-1) cases give <d-1+r(d-2) : r=0..d-2>.
// Throws DegreeTooSmall for d < 4.
NumericalSemigroup base_semigroup(FamilyCase c, Int d);

// Generator presentation of the double-cover semigroup: the doubled base
// generators plus the case's odd generators. Throws NotACoverCase for the
// lemma cases.
std::vector<Int> family_generators(FamilyCase c, Int d);

// from_generators(family_generators) for cover cases; the base semigroup
// for lemma cases.
NumericalSemigroup family_semigroup(FamilyCase c, Int d);

// Closed-form odd gap set for the thm12 cases:
//   thm12a: {2s(d-1)+2t+1 : 0<=s<=d, 0<=t<=min(d-2,d-s)} + {2d^2-1}
//   thm12b: same lattice shifted by -2, (s,t)!=(0,0), + {2d^2-2d+1, 2d^2-3}
//   thm12c: as thm12a on the lattice part, + {2d^2-2d+3}
// Cardinality is (d^2+3d-2)/2 in every case.
GapSet odd_gap_formula(FamilyCase c, Int d);

// --- divisor restriction calculator -----------------------------------

// Members of |L| through the named points, plus the exceptional curve.
// TP and TQ are the tangent members (TP|_C = (d-1)P + Q, TQ|_C = dQ);
// LP is a generic member through P; LPR and LQR pass through the named
// pairs and appear in the thm12c templates only.
enum class Pencil { TP, TQ, LP, LPR, LQR, E };

std::string_view pencil_name(Pencil p);

// A divisor restricted to the curve: integer coefficients at the named
// points P, Q, R plus generic residual parts tracked per pencil member.
// Subtraction may only cancel named-point coefficients; a negative generic
// multiplicity makes the divisor non-effective by fiat.
struct CurveDivisor {
    Int at_p = 0;
    Int at_q = 0;
    Int at_r = 0;
    // pencil member -> (multiplicity, generic degree per member)
    std::map<Pencil, std::pair<Int, Int>> generic;

    Int total_degree() const;
    bool effective() const;
    void accumulate(const CurveDivisor& part, Int times);
};

// Restrictions to the curve of each pencil member and of E, for the given
// thm12 geometry. Every |L| entry has total degree d; the E entry has
// degree 1.
std::map<Pencil, CurveDivisor> restriction_table(FamilyCase c, Int d);

// The divisor templates used to exhibit gaps. D1 carries the (s,t)
// parameters; D2 and D3 are the fixed extremal templates.
struct DivisorTemplate {
    enum class Kind { D1, D2, D3 };
    Kind kind = Kind::D1;
    Int s = 0;
    Int t = 0;

    static DivisorTemplate d1(Int s, Int t) { return {Kind::D1, s, t}; }
    static DivisorTemplate d2() { return {Kind::D2, 0, 0}; }
    static DivisorTemplate d3() { return {Kind::D3, 0, 0}; }
};

// Expands the template over the restriction table, checks that its surface
// class is dL - E and that the restriction is effective of degree d^2 - 1,
// and returns the exhibited odd gap 2*coeff_P + 1. Throws
// InvalidParameters, ClassMismatch, or NotEffective.
Int gap_witness(FamilyCase c, Int d, const DivisorTemplate& tmpl);

// Every template valid for the case: all admissible D1(s,t) plus D2 (and
// D3 where the case defines one).
std::vector<DivisorTemplate> valid_templates(FamilyCase c, Int d);

} // namespace nsg
