// Command-line front end: semigroup invariants, the double-covering
// families, verification sweeps, and the surface intersection pairing.
// Exit codes: 0 all good, 1 verification failure, 2 usage/input error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsg/families.hpp"
#include "nsg/lattice.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"

using nsg::Errc;
using nsg::Error;
using nsg::FamilyCase;
using nsg::GapSet;
using nsg::Int;
using nsg::NumericalSemigroup;

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(pos, comma - pos);
        Int value = 0;
        const char* first = piece.data();
        const char* last = piece.data() + piece.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || piece.empty())
            throw Error(Errc::InvalidParameters,
                        "cannot parse integer '" + piece + "'");
        out.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "write output to this file");
}

// Invariant block shared by show and family output.
struct InvariantBlock {
    std::vector<Int> generators;
    Int conductor = 0;
    Int frobenius = 0;
    Int genus = 0;
    Int multiplicity = 0;
    Int min_odd_element = 0;
    GapSet gaps, odd_gaps, even_gaps;
};

InvariantBlock block_of(const NumericalSemigroup& h) {
    InvariantBlock b;
    b.generators = h.generators();
    b.conductor = h.conductor();
    b.frobenius = h.frobenius();
    b.genus = h.genus();
    b.multiplicity = h.multiplicity();
    b.min_odd_element = h.min_odd_element();
    b.gaps = h.gaps();
    b.odd_gaps = h.odd_gaps();
    b.even_gaps = h.even_gaps();
    return b;
}

void block_to_json(nlohmann::json& j, const InvariantBlock& b) {
    j["generators"] = b.generators;
    j["conductor"] = b.conductor;
    j["frobenius"] = b.frobenius;
    j["genus"] = b.genus;
    j["multiplicity"] = b.multiplicity;
    j["min_odd_element"] = b.min_odd_element;
    j["gaps"] = b.gaps;
    j["odd_gaps"] = b.odd_gaps;
    j["even_gaps"] = b.even_gaps;
}

void block_to_text(std::ostream& os, const InvariantBlock& b) {
    os << "generators: " << nsg::render_values(b.generators) << '\n'
       << "conductor: " << b.conductor << '\n'
       << "frobenius: " << b.frobenius << '\n'
       << "genus: " << b.genus << '\n'
       << "multiplicity: " << b.multiplicity << '\n'
       << "min_odd_element: " << b.min_odd_element << '\n'
       << "gaps: " << nsg::render_values(b.gaps) << '\n'
       << "odd_gaps: " << nsg::render_values(b.odd_gaps) << '\n'
       << "even_gaps: " << nsg::render_values(b.even_gaps) << '\n';
}

void block_to_csv(std::ostream& os, const InvariantBlock& b) {
    os << "generators," << nsg::render_values(b.generators) << '\n'
       << "conductor," << b.conductor << '\n'
       << "frobenius," << b.frobenius << '\n'
       << "genus," << b.genus << '\n'
       << "multiplicity," << b.multiplicity << '\n'
       << "min_odd_element," << b.min_odd_element << '\n'
       << "gaps," << nsg::render_values(b.gaps) << '\n'
       << "odd_gaps," << nsg::render_values(b.odd_gaps) << '\n'
       << "even_gaps," << nsg::render_values(b.even_gaps) << '\n';
}

int cmd_show(std::ostream& os, const std::string& gens_str,
             const std::string& format) {
    const auto h = NumericalSemigroup::from_generators(parse_int_list(gens_str));
    const auto b = block_of(h);
    if (format == "json") {
        nlohmann::json j;
        block_to_json(j, b);
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        os << "key,value\n";
        block_to_csv(os, b);
    } else {
        block_to_text(os, b);
    }
    return 0;
}

int cmd_family(std::ostream& os, const std::string& case_name, Int d,
               const std::string& format) {
    const auto parsed = nsg::parse_family(case_name);
    if (!parsed)
        throw Error(Errc::InvalidParameters, "unknown case '" + case_name + "'");
    const FamilyCase c = *parsed;
    const auto h = nsg::family_semigroup(c, d);
    const auto b = block_of(h);
    const bool with_formula = nsg::is_thm12(c);
    const GapSet formula = with_formula ? nsg::odd_gap_formula(c, d) : GapSet{};

    if (format == "json") {
        nlohmann::json j;
        j["case"] = std::string(nsg::family_name(c));
        j["d"] = d;
        block_to_json(j, b);
        if (with_formula) j["formula_odd_gaps"] = formula;
        j["checks"] = nlohmann::json::array();
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        os << "key,value\n";
        os << "case," << nsg::family_name(c) << '\n';
        os << "d," << d << '\n';
        block_to_csv(os, b);
        if (with_formula)
            os << "formula_odd_gaps," << nsg::render_values(formula) << '\n';
    } else {
        os << "case: " << nsg::family_name(c) << '\n' << "d: " << d << '\n';
        block_to_text(os, b);
        if (with_formula)
            os << "formula_odd_gaps: " << nsg::render_values(formula) << '\n';
    }
    return 0;
}

int cmd_verify(std::ostream& os, const std::string& case_name, Int d_min,
               Int d_max, const std::string& format) {
    std::vector<FamilyCase> cases;
    if (case_name == "all") {
        cases.assign(nsg::kAllFamilyCases.begin(), nsg::kAllFamilyCases.end());
    } else {
        const auto parsed = nsg::parse_family(case_name);
        if (!parsed)
            throw Error(Errc::InvalidParameters,
                        "unknown case '" + case_name + "'");
        cases.push_back(*parsed);
    }

    const auto reports = nsg::verify_sweep(cases, d_min, d_max);
    bool all_pass = true;
    std::size_t n_checks = 0;
    for (const auto& r : reports) {
        all_pass = all_pass && r.all_pass();
        n_checks += r.checks.size();
    }

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json j;
            j["case"] = std::string(nsg::family_name(r.family));
            j["d"] = r.d;
            block_to_json(j, block_of(nsg::family_semigroup(r.family, r.d)));
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& c : r.checks)
                checks.push_back({{"name", c.name},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"pass", c.pass}});
            j["checks"] = std::move(checks);
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << '\n';
    } else if (format == "csv") {
        os << "case,d,check,expected,actual,pass\n";
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                os << nsg::family_name(r.family) << ',' << r.d << ',' << c.name
                   << ',' << c.expected << ',' << c.actual << ','
                   << (c.pass ? "true" : "false") << '\n';
    } else {
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                os << (c.pass ? "PASS" : "FAIL") << ' '
                   << nsg::family_name(r.family) << " d=" << r.d << ' ' << c.name
                   << " expected=[" << c.expected << "] actual=[" << c.actual
                   << "]\n";
        os << "summary: " << reports.size() << " reports, " << n_checks
           << " checks, " << (all_pass ? "all passed" : "FAILURES PRESENT")
           << '\n';
    }
    return all_pass ? 0 : 1;
}

int cmd_picard(std::ostream& os, const std::string& class_str,
               const std::string& format) {
    const auto coeffs = parse_int_list(class_str);
    if (coeffs.size() != 2)
        throw Error(Errc::InvalidParameters,
                    "--class wants two integers a,b for aL+bE");
    const nsg::DivisorClass dc{coeffs[0], coeffs[1]};
    const Int self = nsg::intersect(dc, dc);
    const Int with_k = nsg::intersect(dc, nsg::canonical_class());
    const bool parity_ok = (self + with_k) % 2 == 0;
    std::optional<Int> genus;
    if (parity_ok) genus = nsg::adjunction_genus(dc);

    if (format == "json") {
        nlohmann::json j;
        j["class"] = {dc.a, dc.b};
        j["self_intersection"] = self;
        j["k_pairing"] = with_k;
        if (genus) j["adjunction_genus"] = *genus;
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        os << "key,value\n";
        os << "class," << dc.a << ' ' << dc.b << '\n';
        os << "self_intersection," << self << '\n';
        os << "k_pairing," << with_k << '\n';
        if (genus) os << "adjunction_genus," << *genus << '\n';
    } else {
        os << "class: " << dc.a << "L + " << dc.b << "E\n";
        os << "self_intersection: " << self << '\n';
        os << "k_pairing: " << with_k << '\n';
        if (genus) os << "adjunction_genus: " << *genus << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroups of double-covering type on the "
                 "degree-one Hirzebruch surface"};
    app.require_subcommand(1);

    std::string gens_str;
    std::string case_name = "all";
    std::string class_str;
    Int d = 4;
    Int d_min = 4;
    Int d_max = 30;
    OutputOptions show_opts, family_opts, verify_opts, picard_opts;

    auto* show = app.add_subcommand("show", "invariants of <gens>");
    show->add_option("--gens", gens_str, "comma-separated positive integers")
        ->required();
    add_output_options(show, show_opts);

    auto* family = app.add_subcommand("family", "emit one of the built-in families");
    family->add_option("--case", case_name, "family case name")->required();
    family->add_option("--d", d, "degree (>= 4)")->required();
    add_output_options(family, family_opts);

    auto* verify = app.add_subcommand("verify", "run the verification sweep");
    verify->add_option("--case", case_name, "family case name or 'all'")
        ->capture_default_str();
    verify->add_option("--d-min", d_min, "sweep start")->capture_default_str();
    verify->add_option("--d-max", d_max, "sweep end")->capture_default_str();
    add_output_options(verify, verify_opts);

    auto* picard = app.add_subcommand("picard", "intersection numbers of aL+bE");
    picard->add_option("--class", class_str, "two integers a,b")->required();
    add_output_options(picard, picard_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const OutputOptions& opts = show->parsed()     ? show_opts
                                    : family->parsed() ? family_opts
                                    : verify->parsed() ? verify_opts
                                                       : picard_opts;
        std::ofstream file;
        if (!opts.out_path.empty()) {
            file.open(opts.out_path);
            if (!file)
                throw Error(Errc::InvalidParameters,
                            "cannot open '" + opts.out_path + "'");
        }
        std::ostream& os = opts.out_path.empty() ? std::cout : file;

        if (show->parsed()) return cmd_show(os, gens_str, opts.format);
        if (family->parsed()) return cmd_family(os, case_name, d, opts.format);
        if (verify->parsed())
            return cmd_verify(os, case_name, d_min, d_max, opts.format);
        return cmd_picard(os, class_str, opts.format);
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
