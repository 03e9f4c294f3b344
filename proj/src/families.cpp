#include "nsg/families.hpp"

#include <algorithm>
#include <set>

namespace nsg {

namespace {

// Degrees far beyond the verification range only produce semigroups whose
// bitmaps blow the closure limit anyway; refuse early so generator lists
// and gap formulas stay small.
constexpr Int kMaxDegree = 512;

void require_degree(Int d) {
    if (d < 4)
        throw Error(Errc::DegreeTooSmall,
                    "degree " + std::to_string(d) + " < 4");
    if (d > kMaxDegree)
        throw Error(Errc::LimitExceeded,
                    "degree " + std::to_string(d) + " exceeds limit " +
                    std::to_string(kMaxDegree));
}

} // namespace

std::string_view family_name(FamilyCase c) {
    switch (c) {
        case FamilyCase::Lemma21i: return "lemma21i";
        case FamilyCase::Lemma21ii: return "lemma21ii";
        case FamilyCase::Thm11a: return "thm11a";
        case FamilyCase::Thm11b: return "thm11b";
        case FamilyCase::Thm12a: return "thm12a";
        case FamilyCase::Thm12b: return "thm12b";
        case FamilyCase::Thm12c: return "thm12c";
    }
    return "?";
}

std::optional<FamilyCase> parse_family(std::string_view name) {
    for (FamilyCase c : kAllFamilyCases)
        if (family_name(c) == name) return c;
    return std::nullopt;
}

NumericalSemigroup base_semigroup(FamilyCase c, Int d) {
    require_degree(d);
    std::vector<Int> gens;
    switch (c) {
        case FamilyCase::Lemma21i:
        case FamilyCase::Thm11a:
        case FamilyCase::Thm11b:
            gens = {d - 1, d};
            break;
        case FamilyCase::Lemma21ii:
        case FamilyCase::Thm12a:
        case FamilyCase::Thm12b:
        case FamilyCase::Thm12c:
            for (Int r = 0; r <= d - 2; ++r)
                gens.push_back(d - 1 + r * (d - 2));
            break;
    }
    return NumericalSemigroup::from_generators(std::move(gens));
}

std::vector<Int> family_generators(FamilyCase c, Int d) {
    require_degree(d);
    if (!is_double_cover(c))
        throw Error(Errc::NotACoverCase,
                    std::string(family_name(c)) + " has no double-cover presentation");

    std::vector<Int> gens;
    const NumericalSemigroup base = base_semigroup(c, d);
    for (Int g : base.generators()) gens.push_back(2 * g);

    switch (c) {
        case FamilyCase::Thm11a:
            gens.push_back(6 * d - 3);
            break;
        case FamilyCase::Thm11b:
            gens.push_back(6 * d - 1);
            gens.push_back(2 * d * d + 1);
            break;
        case FamilyCase::Thm12a:
            for (Int r = 0; r <= d - 3; ++r)
                gens.push_back(8 * d - 9 + 2 * r * (d - 2));
            break;
        case FamilyCase::Thm12b:
            for (Int r = 0; r <= d - 4; ++r)
                gens.push_back(8 * d - 11 + 2 * r * (d - 2));
            break;
        case FamilyCase::Thm12c:
            for (Int r = 0; r <= d - 4; ++r)
                gens.push_back(8 * d - 9 + 2 * r * (d - 2));
            gens.push_back(2 * d * d - 1);
            break;
        default:
            break;
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

NumericalSemigroup family_semigroup(FamilyCase c, Int d) {
    if (!is_double_cover(c)) return base_semigroup(c, d);
    return NumericalSemigroup::from_generators(family_generators(c, d));
}

GapSet odd_gap_formula(FamilyCase c, Int d) {
    require_degree(d);
    if (!is_thm12(c))
        throw Error(Errc::InvalidParameters,
                    std::string(family_name(c)) + " has no closed-form odd gap set");

    std::set<Int> out;
    const Int shift = (c == FamilyCase::Thm12b) ? -1 : 1;
    for (Int s = 0; s <= d; ++s) {
        for (Int t = 0; t <= std::min(d - 2, d - s); ++t) {
            if (c == FamilyCase::Thm12b && s == 0 && t == 0) continue;
            out.insert(2 * s * (d - 1) + 2 * t + shift);
        }
    }
    switch (c) {
        case FamilyCase::Thm12a:
            out.insert(2 * d * d - 1);
            break;
        case FamilyCase::Thm12b:
            out.insert(2 * d * d - 2 * d + 1);
            out.insert(2 * d * d - 3);
            break;
        case FamilyCase::Thm12c:
            out.insert(2 * d * d - 2 * d + 3);
            break;
        default:
            break;
    }
    return GapSet(out.begin(), out.end());
}

// --- divisor restriction calculator -----------------------------------

std::string_view pencil_name(Pencil p) {
    switch (p) {
        case Pencil::TP: return "T_P";
        case Pencil::TQ: return "T_Q";
        case Pencil::LP: return "L_P";
        case Pencil::LPR: return "L_PR";
        case Pencil::LQR: return "L_QR";
        case Pencil::E: return "E";
    }
    return "?";
}

Int CurveDivisor::total_degree() const {
    Int deg = at_p + at_q + at_r;
    for (const auto& [label, part] : generic) deg += part.first * part.second;
    return deg;
}

bool CurveDivisor::effective() const {
    if (at_p < 0 || at_q < 0 || at_r < 0) return false;
    for (const auto& [label, part] : generic)
        if (part.first < 0) return false;
    return true;
}

void CurveDivisor::accumulate(const CurveDivisor& part, Int times) {
    at_p += times * part.at_p;
    at_q += times * part.at_q;
    at_r += times * part.at_r;
    for (const auto& [label, g] : part.generic) {
        auto it = generic.try_emplace(label, Int{0}, g.second).first;
        it->second.first += times * g.first;
    }
}

std::map<Pencil, CurveDivisor> restriction_table(FamilyCase c, Int d) {
    require_degree(d);
    if (!is_thm12(c))
        throw Error(Errc::InvalidParameters,
                    "restriction table is defined for the thm12 geometries");

    std::map<Pencil, CurveDivisor> table;

    CurveDivisor tp;                // T_P|_C = (d-1)P + Q
    tp.at_p = d - 1;
    tp.at_q = 1;
    table[Pencil::TP] = tp;

    CurveDivisor tq;                // T_Q|_C = dQ
    tq.at_q = d;
    table[Pencil::TQ] = tq;

    CurveDivisor e;                 // E|_C is one named point, by case
    switch (c) {
        case FamilyCase::Thm12a: e.at_q = 1; break;   // Q on E
        case FamilyCase::Thm12b: e.at_p = 1; break;   // P on E
        default: e.at_r = 1; break;                   // thm12c: R on E
    }
    table[Pencil::E] = e;

    if (c == FamilyCase::Thm12c) {
        CurveDivisor lpr;           // through P and R, generic residue
        lpr.at_p = 1;
        lpr.at_r = 1;
        lpr.generic[Pencil::LPR] = {1, d - 2};
        table[Pencil::LPR] = lpr;

        CurveDivisor lqr;
        lqr.at_q = 1;
        lqr.at_r = 1;
        lqr.generic[Pencil::LQR] = {1, d - 2};
        table[Pencil::LQR] = lqr;
    } else {
        CurveDivisor lp;            // through P only, generic residue
        lp.at_p = 1;
        lp.generic[Pencil::LP] = {1, d - 1};
        table[Pencil::LP] = lp;
    }
    return table;
}

namespace {

DivisorClass pencil_class(Pencil p) {
    return p == Pencil::E ? DivisorClass{0, 1} : DivisorClass{1, 0};
}

// Template as a formal combination of pencil members.
std::vector<std::pair<Pencil, Int>> template_terms(FamilyCase c, Int d,
                                                   const DivisorTemplate& tmpl) {
    using Kind = DivisorTemplate::Kind;
    const bool caseC = (c == FamilyCase::Thm12c);
    switch (tmpl.kind) {
        case Kind::D1:
            if (caseC)
                return {{Pencil::TP, tmpl.s},
                        {Pencil::LPR, tmpl.t},
                        {Pencil::LQR, d - tmpl.s - tmpl.t},
                        {Pencil::E, -1}};
            return {{Pencil::TP, tmpl.s},
                    {Pencil::LP, tmpl.t},
                    {Pencil::TQ, d - tmpl.s - tmpl.t},
                    {Pencil::E, -1}};
        case Kind::D2:
            if (caseC)
                return {{Pencil::LPR, 1},
                        {Pencil::TP, d},
                        {Pencil::TQ, -1},
                        {Pencil::E, -1}};
            return {{Pencil::TP, d + 1}, {Pencil::TQ, -1}, {Pencil::E, -1}};
        case Kind::D3:
            if (caseC)
                return {{Pencil::LQR, 1},
                        {Pencil::TP, d},
                        {Pencil::TQ, -1},
                        {Pencil::E, -1}};
            return {{Pencil::LP, 1},
                    {Pencil::TP, d},
                    {Pencil::TQ, -1},
                    {Pencil::E, -1}};
    }
    return {};
}

void check_template_ranges(FamilyCase c, Int d, const DivisorTemplate& tmpl) {
    using Kind = DivisorTemplate::Kind;
    if (tmpl.kind == Kind::D3 && c == FamilyCase::Thm12a)
        throw Error(Errc::InvalidParameters, "thm12a defines no D3 template");
    if (tmpl.kind != Kind::D1) return;

    const Int s = tmpl.s;
    const Int t = tmpl.t;
    if (s < 0 || s > d || t < 0 || t > std::min(d - 2, d - s))
        throw Error(Errc::InvalidParameters,
                    "(s,t)=(" + std::to_string(s) + "," + std::to_string(t) +
                    ") outside the D1 range");
    if (c == FamilyCase::Thm12b && s == 0 && t == 0)
        throw Error(Errc::InvalidParameters, "(0,0) is excluded for thm12b");
    if (c == FamilyCase::Thm12c && s == d && t == 0)
        throw Error(Errc::InvalidParameters, "(d,0) is excluded for thm12c");
}

} // namespace

Int gap_witness(FamilyCase c, Int d, const DivisorTemplate& tmpl) {
    require_degree(d);
    if (!is_thm12(c))
        throw Error(Errc::InvalidParameters,
                    "gap witnesses are defined for the thm12 geometries");
    check_template_ranges(c, d, tmpl);

    const auto terms = template_terms(c, d, tmpl);

    DivisorClass cls{0, 0};
    for (const auto& [pencil, coeff] : terms) {
        const DivisorClass pc = pencil_class(pencil);
        cls.a += coeff * pc.a;
        cls.b += coeff * pc.b;
    }
    if (cls != curve_class(d))
        throw Error(Errc::ClassMismatch,
                    "template class (" + std::to_string(cls.a) + "," +
                    std::to_string(cls.b) + ") is not (d,-1)");

    const auto table = restriction_table(c, d);
    CurveDivisor restricted;
    for (const auto& [pencil, coeff] : terms)
        restricted.accumulate(table.at(pencil), coeff);

    if (!restricted.effective())
        throw Error(Errc::NotEffective, "restricted divisor has a negative part");
    if (restricted.total_degree() != d * d - 1)
        throw Error(Errc::ClassMismatch,
                    "restricted degree " + std::to_string(restricted.total_degree()) +
                    " != d^2-1");

    // Contact order at the branch point doubles at the ramification point;
    // one more than that doubled order is a gap upstairs.
    return 2 * restricted.at_p + 1;
}

std::vector<DivisorTemplate> valid_templates(FamilyCase c, Int d) {
    require_degree(d);
    if (!is_thm12(c))
        throw Error(Errc::InvalidParameters,
                    "gap witnesses are defined for the thm12 geometries");

    std::vector<DivisorTemplate> out;
    for (Int s = 0; s <= d; ++s) {
        for (Int t = 0; t <= std::min(d - 2, d - s); ++t) {
            if (c == FamilyCase::Thm12b && s == 0 && t == 0) continue;
            if (c == FamilyCase::Thm12c && s == d && t == 0) continue;
            out.push_back(DivisorTemplate::d1(s, t));
        }
    }
    out.push_back(DivisorTemplate::d2());
    if (c != FamilyCase::Thm12a) out.push_back(DivisorTemplate::d3());
    return out;
}

} // namespace nsg
