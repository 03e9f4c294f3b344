#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "nsg/families.hpp"
#include "nsg/lattice.hpp"
#include "nsg/verify.hpp"

using nsg::DivisorTemplate;
using nsg::Errc;
using nsg::Error;
using nsg::FamilyCase;
using nsg::GapSet;
using nsg::Int;

namespace {

Errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an nsg::Error");
    return Errc::InvalidParameters;
}

const std::array<FamilyCase, 3> kThm12 = {FamilyCase::Thm12a, FamilyCase::Thm12b,
                                          FamilyCase::Thm12c};

} // namespace

TEST_CASE("family case names round-trip") {
    for (FamilyCase c : nsg::kAllFamilyCases) {
        const auto parsed = nsg::parse_family(nsg::family_name(c));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == c);
    }
    CHECK_FALSE(nsg::parse_family("thm13x").has_value());
}

TEST_CASE("base_semigroup") {
    CHECK(nsg::base_semigroup(FamilyCase::Lemma21ii, 4).generators() ==
          std::vector<Int>{3, 5, 7});
    CHECK(nsg::base_semigroup(FamilyCase::Lemma21i, 4).generators() ==
          std::vector<Int>{3, 4});
    CHECK(nsg::base_semigroup(FamilyCase::Lemma21ii, 5).generators() ==
          std::vector<Int>{4, 7, 10, 13});
    CHECK(thrown_code([] { nsg::base_semigroup(FamilyCase::Lemma21i, 3); }) ==
          Errc::DegreeTooSmall);

    // Genus of the plane-curve point semigroup matches the adjunction genus
    // of the curve class, both tangency patterns.
    for (Int d = 4; d <= 30; ++d) {
        const Int g = nsg::adjunction_genus(nsg::curve_class(d));
        CHECK(nsg::base_semigroup(FamilyCase::Lemma21i, d).genus() == g);
        CHECK(nsg::base_semigroup(FamilyCase::Lemma21ii, d).genus() == g);
    }
}

TEST_CASE("family_generators") {
    CHECK(nsg::family_generators(FamilyCase::Thm12a, 4) ==
          std::vector<Int>{6, 10, 14, 23, 27});
    CHECK(nsg::family_generators(FamilyCase::Thm12b, 4) ==
          std::vector<Int>{6, 10, 14, 21});
    CHECK(nsg::family_generators(FamilyCase::Thm12c, 4) ==
          std::vector<Int>{6, 10, 14, 23, 31});
    CHECK(nsg::family_generators(FamilyCase::Thm11a, 4) ==
          std::vector<Int>{6, 8, 21});
    CHECK(nsg::family_generators(FamilyCase::Thm11b, 4) ==
          std::vector<Int>{6, 8, 23, 33});
    CHECK(nsg::family_generators(FamilyCase::Thm12a, 5) ==
          std::vector<Int>{8, 14, 20, 26, 31, 37, 43});

    CHECK(thrown_code([] { nsg::family_generators(FamilyCase::Lemma21i, 4); }) ==
          Errc::NotACoverCase);
    CHECK(thrown_code([] { nsg::family_generators(FamilyCase::Thm12a, 3); }) ==
          Errc::DegreeTooSmall);
    CHECK(thrown_code([] { nsg::family_generators(FamilyCase::Thm12a, 99999999); }) ==
          Errc::LimitExceeded);
}

TEST_CASE("family_semigroup") {
    CHECK(nsg::family_semigroup(FamilyCase::Thm12a, 4).genus() == 16);
    CHECK(nsg::family_semigroup(FamilyCase::Thm11a, 4).min_odd_element() == 21);
    CHECK_FALSE(nsg::family_semigroup(FamilyCase::Thm12b, 5).contains(47));
    // Lemma cases fall back to the base semigroup.
    CHECK(nsg::family_semigroup(FamilyCase::Lemma21i, 5) ==
          nsg::base_semigroup(FamilyCase::Lemma21i, 5));
}

TEST_CASE("odd_gap_formula: frozen sets at d=4") {
    CHECK(nsg::odd_gap_formula(FamilyCase::Thm12a, 4) ==
          GapSet{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 25, 31});
    CHECK(nsg::odd_gap_formula(FamilyCase::Thm12b, 4) ==
          GapSet{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 23, 25, 29});
    CHECK(nsg::odd_gap_formula(FamilyCase::Thm12c, 4) ==
          GapSet{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 25, 27});

    const GapSet c5 = nsg::odd_gap_formula(FamilyCase::Thm12c, 5);
    CHECK(c5.size() == 19);
    CHECK(std::binary_search(c5.begin(), c5.end(), 43));   // 2d^2-2d+3

    CHECK(thrown_code([] { nsg::odd_gap_formula(FamilyCase::Thm12a, 3); }) ==
          Errc::DegreeTooSmall);
    CHECK(thrown_code([] { nsg::odd_gap_formula(FamilyCase::Thm11a, 4); }) ==
          Errc::InvalidParameters);
}

TEST_CASE("odd_gap_formula: cardinality is (d^2+3d-2)/2") {
    for (FamilyCase c : kThm12)
        for (Int d = 4; d <= 30; ++d)
            CHECK(static_cast<Int>(nsg::odd_gap_formula(c, d).size()) ==
                  (d * d + 3 * d - 2) / 2);
}

TEST_CASE("restriction_table") {
    for (FamilyCase c : kThm12) {
        for (Int d : {4, 5, 9}) {
            const auto table = nsg::restriction_table(c, d);
            // T_P|_C = (d-1)P + Q and T_Q|_C = dQ in every geometry.
            CHECK(table.at(nsg::Pencil::TP).at_p == d - 1);
            CHECK(table.at(nsg::Pencil::TP).at_q == 1);
            CHECK(table.at(nsg::Pencil::TQ).at_q == d);
            // Pencil members restrict with degree d = C.L, E with degree 1 = C.E.
            for (const auto& [label, divisor] : table) {
                const Int expected = (label == nsg::Pencil::E) ? 1 : d;
                CHECK(divisor.total_degree() == expected);
                CHECK(divisor.effective());
            }
        }
    }
    CHECK(nsg::restriction_table(FamilyCase::Thm12a, 4).at(nsg::Pencil::E).at_q == 1);
    CHECK(nsg::restriction_table(FamilyCase::Thm12b, 7).at(nsg::Pencil::E).at_p == 1);
    CHECK(nsg::restriction_table(FamilyCase::Thm12c, 7).at(nsg::Pencil::E).at_r == 1);

    const auto table_c = nsg::restriction_table(FamilyCase::Thm12c, 6);
    CHECK(table_c.at(nsg::Pencil::LPR).at_p == 1);
    CHECK(table_c.at(nsg::Pencil::LPR).at_r == 1);
    CHECK(table_c.at(nsg::Pencil::LQR).at_q == 1);
    CHECK(table_c.count(nsg::Pencil::LP) == 0);

    CHECK(thrown_code([] { nsg::restriction_table(FamilyCase::Lemma21i, 4); }) ==
          Errc::InvalidParameters);
}

TEST_CASE("gap_witness: worked examples") {
    CHECK(nsg::gap_witness(FamilyCase::Thm12a, 4, DivisorTemplate::d1(1, 2)) == 11);
    CHECK(nsg::gap_witness(FamilyCase::Thm12b, 4, DivisorTemplate::d2()) == 29);
    CHECK(nsg::gap_witness(FamilyCase::Thm12c, 5, DivisorTemplate::d3()) == 41);
    // The extremal templates read off the canonical-class and pencil gaps.
    for (Int d = 4; d <= 12; ++d) {
        CHECK(nsg::gap_witness(FamilyCase::Thm12a, d, DivisorTemplate::d2()) ==
              2 * d * d - 1);
        CHECK(nsg::gap_witness(FamilyCase::Thm12b, d, DivisorTemplate::d3()) ==
              2 * d * d - 2 * d + 1);
        CHECK(nsg::gap_witness(FamilyCase::Thm12c, d, DivisorTemplate::d2()) ==
              2 * d * d - 2 * d + 3);
    }
}

TEST_CASE("gap_witness: rejected templates") {
    CHECK(thrown_code([] {
              nsg::gap_witness(FamilyCase::Thm12a, 4, DivisorTemplate::d1(5, 0));
          }) == Errc::InvalidParameters);
    CHECK(thrown_code([] {
              nsg::gap_witness(FamilyCase::Thm12a, 4, DivisorTemplate::d1(3, 2));
          }) == Errc::InvalidParameters);   // t > d-s
    CHECK(thrown_code([] {
              nsg::gap_witness(FamilyCase::Thm12b, 4, DivisorTemplate::d1(0, 0));
          }) == Errc::InvalidParameters);
    CHECK(thrown_code([] {
              nsg::gap_witness(FamilyCase::Thm12c, 4, DivisorTemplate::d1(4, 0));
          }) == Errc::InvalidParameters);
    CHECK(thrown_code([] {
              nsg::gap_witness(FamilyCase::Thm12a, 4, DivisorTemplate::d3());
          }) == Errc::InvalidParameters);
}

TEST_CASE("gap_witness: every output is a formula gap, and D1 is injective") {
    for (FamilyCase c : kThm12) {
        for (Int d = 4; d <= 12; ++d) {
            const GapSet formula = nsg::odd_gap_formula(c, d);
            std::set<Int> d1_values;
            std::size_t d1_count = 0;
            for (const DivisorTemplate& tmpl : nsg::valid_templates(c, d)) {
                const Int w = nsg::gap_witness(c, d, tmpl);
                CHECK(std::binary_search(formula.begin(), formula.end(), w));
                if (tmpl.kind == DivisorTemplate::Kind::D1) {
                    d1_values.insert(w);
                    ++d1_count;
                }
            }
            CHECK(d1_values.size() == d1_count);
        }
    }
}

TEST_CASE("witness coverage equals the formula set") {
    for (FamilyCase c : kThm12) {
        for (Int d = 4; d <= 10; ++d) {
            std::vector<Int> witnesses;
            for (const DivisorTemplate& tmpl : nsg::valid_templates(c, d))
                witnesses.push_back(nsg::gap_witness(c, d, tmpl));
            std::sort(witnesses.begin(), witnesses.end());
            CHECK(witnesses == nsg::odd_gap_formula(c, d));
        }
    }
}

TEST_CASE("threshold argument for the minimum odd member") {
    // 2s(d-1)+2(d-s)+3 <= 2(s+1)(d-1)-1 exactly when s >= 3, independent of d.
    for (Int d = 4; d <= 30; ++d)
        for (Int s = 0; s <= d; ++s) {
            const bool ineq =
                2 * s * (d - 1) + 2 * (d - s) + 3 <= 2 * (s + 1) * (d - 1) - 1;
            CHECK(ineq == (s >= 3));
        }
}

TEST_CASE("excluded-range membership identities from the d-sweep") {
    for (Int d = 4; d <= 30; ++d) {
        const auto base = nsg::base_semigroup(FamilyCase::Thm12a, d);
        // Top range: n = 2(d+2)(d-1)-k for odd k in [3, 2d-5]; the difference
        // n-(8d-9) lands in twice the base semigroup.
        for (Int k = 3; k <= 2 * d - 5; k += 2) {
            const Int n = 2 * (d + 2) * (d - 1) - k;
            const Int diff = n - (8 * d - 9);
            CHECK(diff == (2 * d - 3 - k) * (d - 1) + (k - 1) * (d - 2));
            REQUIRE(diff % 2 == 0);
            CHECK(base.contains(diff / 2));
        }
        // Next range down: n = 2(d^2-1)-k for odd k in [1, 2d-5]. The
        // difference is a member of twice the base for k < 2d-5 (so those n
        // cannot be extra odd gaps) and escapes it exactly at k = 2d-5,
        // where n = 2d^2-2d+3 is itself an odd generator.
        for (Int k = 1; k <= 2 * d - 5; k += 2) {
            const Int n = 2 * (d * d - 1) - k;
            const Int diff = n - (8 * d - 9);
            CHECK(diff == (2 * d - 5 - k) * (d - 1) + (k - 1) * (d - 2));
            REQUIRE(diff % 2 == 0);
            CHECK(base.contains(diff / 2) == (k < 2 * d - 5));
        }
    }
}

TEST_CASE("verify_case") {
    const auto a4 = nsg::verify_case(FamilyCase::Thm12a, 4);
    CHECK(a4.all_pass());
    CHECK(a4.checks.size() == 8);

    const auto b4 = nsg::verify_case(FamilyCase::Thm12b, 4);
    CHECK(b4.all_pass());
    bool found = false;
    for (const auto& c : b4.checks)
        if (c.name == "2d2-3_excluded") {
            found = true;
            CHECK(c.pass);
            CHECK(c.actual == "non-member");
        }
    CHECK(found);

    const auto lemma = nsg::verify_case(FamilyCase::Lemma21ii, 7);
    CHECK(lemma.all_pass());
    REQUIRE(lemma.checks.size() == 1);
    CHECK(lemma.checks[0].name == "genus");
    CHECK(lemma.checks[0].expected == "15");

    const auto c9 = nsg::verify_case(FamilyCase::Thm12c, 9);
    CHECK(c9.all_pass());
    CHECK(c9.checks.size() == 9);   // both membership facts recorded
}

TEST_CASE("verify_sweep: deterministic order and clean errors") {
    const std::vector<FamilyCase> all(nsg::kAllFamilyCases.begin(),
                                      nsg::kAllFamilyCases.end());
    const auto reports = nsg::verify_sweep(all, 4, 6);
    REQUIRE(reports.size() == 7 * 3);
    std::size_t i = 0;
    for (FamilyCase c : nsg::kAllFamilyCases)
        for (Int d = 4; d <= 6; ++d, ++i) {
            CHECK(reports[i].family == c);
            CHECK(reports[i].d == d);
            CHECK(reports[i].all_pass());
        }

    CHECK(thrown_code([&] { nsg::verify_sweep(all, 3, 5); }) ==
          Errc::DegreeTooSmall);
    CHECK(thrown_code([&] { nsg::verify_sweep(all, 5, 4); }) ==
          Errc::InvalidParameters);
}
