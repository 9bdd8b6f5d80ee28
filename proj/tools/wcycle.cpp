// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line interface for the Weierstrass cycle toolkit: semigroup
// enumeration, codimension estimates, equivariant cycle classes, factorial
// Schur tables, and Hilbert functions of the tautological ring
// approximations.  All output is deterministic: two runs with the same
// arguments produce byte-identical bytes.

#include <exception>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wcycle/errors.hpp"
#include "wcycle/estimates.hpp"
#include "wcycle/factorial_schur.hpp"
#include "wcycle/hilbert.hpp"
#include "wcycle/reference.hpp"
#include "wcycle/render.hpp"
#include "wcycle/semigroup.hpp"
#include "wcycle/sequence.hpp"
#include "wcycle/symmetric.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace wcycle;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
    std::string format = "text";
    bool ascii = false;

    Format render_format() const {
        if (format == "latex") return Format::latex;
        return Format::text;
    }
};

// ---------------------------------------------------------------- helpers --

Partition parse_mu(const std::string& text) {
    Partition mu;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            mu.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw argument_error("malformed partition component '" + item + "'");
        }
    }
    if (!is_partition(mu))
        throw argument_error("'" + text + "' is not a partition (weakly decreasing, positive)");
    return mu;
}

std::string braces(const std::vector<int>& values, bool latex) {
    std::string out = latex ? "\\{" : "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    out += latex ? "\\}" : "}";
    return out;
}

std::string mu_label(const Partition& mu) {
    std::string out = "(";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(mu[i]);
    }
    return out + ")";
}

json json_sequence(const VCSequence& s) {
    return json{{"genus", s.genus()}, {"gaps", s.gaps()}};
}

json json_class(const CycleClass& cls) {
    json terms = json::array();
    for (const auto& [exps, coeff] : cls.poly.terms()) {
        std::vector<int> lambda(exps.begin() + 1, exps.end());
        terms.push_back(json{{"coeff", to_string(coeff)},
                             {"lambda_exponents", lambda},
                             {"psi_exponent", exps[0]}});
    }
    return json{{"genus", cls.genus}, {"mu", cls.mu}, {"terms", terms}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------- semigroups --

int run_semigroups(int genus, const Options& opt) {
    std::vector<NumericalSemigroup> semigroups = enumerate_semigroups(genus);
    if (opt.format == "json") {
        json rows = json::array();
        for (const NumericalSemigroup& h : semigroups)
            rows.push_back(json{{"genus", h.genus()}, {"gaps", h.gaps()}});
        emit(rows);
        return kExitOk;
    }
    bool latex = opt.format == "latex";
    for (const NumericalSemigroup& h : semigroups)
        std::cout << braces(h.gaps(), latex) << (latex ? " \\\\" : "") << "\n";
    return kExitOk;
}

// -------------------------------------------------------------- estimates --

json json_record(const EstimateRecord& rec) {
    json row{{"gap_sequence", json_sequence(rec.gap_sequence)},
             {"eh_bound", rec.eh_bound},
             {"improved_bound", rec.improved_bound}};
    json witnesses = json::array();
    for (const VCSequence& w : rec.improved_witnesses) witnesses.push_back(json_sequence(w));
    row["improved_witnesses"] = witnesses;
    row["deligne_dim_upper"] = rec.deligne_dim_upper;
    row["codim_lower"] = rec.codim_lower;
    if (rec.exact_codim) row["exact_codim"] = *rec.exact_codim;
    if (rec.exact_codim_bounds)
        row["exact_codim_bounds"] =
            std::vector<int>{rec.exact_codim_bounds->first, rec.exact_codim_bounds->second};
    if (rec.reference_estimate) row["reference_estimate"] = *rec.reference_estimate;
    return row;
}

int run_estimates(int genus, const std::string& variant_name, const Options& opt) {
    AdmissibleVariant variant;
    if (variant_name == "minimum")
        variant = AdmissibleVariant::minimum;
    else if (variant_name == "unique")
        variant = AdmissibleVariant::unique;
    else
        throw argument_error("unknown admissibility variant '" + variant_name + "'");

    std::vector<EstimateRecord> table = estimates_table(genus, variant);
    if (opt.format == "json") {
        json rows = json::array();
        for (const EstimateRecord& rec : table) rows.push_back(json_record(rec));
        emit(rows);
        return kExitOk;
    }
    if (opt.format == "latex") {
        std::cout << "\\begin{tabular}{|l|c|c|c|c|l|}\n\\hline\n"
                  << "gaps & EH & improved & dim upper & codim lower & exact \\\\ \\hline\n";
        for (const EstimateRecord& rec : table) {
            std::string exact = "?";
            if (rec.exact_codim) exact = std::to_string(*rec.exact_codim);
            if (rec.exact_codim_bounds)
                exact = "[" + std::to_string(rec.exact_codim_bounds->first) + "," +
                        std::to_string(rec.exact_codim_bounds->second) + "]";
            std::cout << braces(rec.gap_sequence.gaps(), true) << " & " << rec.eh_bound << " & "
                      << rec.improved_bound << " & " << rec.deligne_dim_upper << " & "
                      << rec.codim_lower << " & " << exact << " \\\\\n";
        }
        std::cout << "\\hline\n\\end{tabular}\n";
        return kExitOk;
    }
    for (const EstimateRecord& rec : table) {
        std::cout << braces(rec.gap_sequence.gaps(), false) << "  eh=" << rec.eh_bound
                  << "  improved=" << rec.improved_bound;
        if (rec.reference_estimate) std::cout << " (reference " << *rec.reference_estimate << ")";
        std::cout << "  dim_upper=" << rec.deligne_dim_upper
                  << "  codim_lower=" << rec.codim_lower;
        if (rec.exact_codim) std::cout << "  exact=" << *rec.exact_codim;
        if (rec.exact_codim_bounds)
            std::cout << "  exact_in=[" << rec.exact_codim_bounds->first << ","
                      << rec.exact_codim_bounds->second << "]";
        std::cout << "  witnesses:";
        for (const VCSequence& w : rec.improved_witnesses)
            std::cout << " " << braces(w.gaps(), false);
        std::cout << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ class --

int run_class(int genus, const std::string& mu_text, const Options& opt) {
    Partition mu = parse_mu(mu_text);
    CycleClass cls = cycle_class(mu, genus);
    if (opt.format == "json") {
        emit(json_class(cls));
        return kExitOk;
    }
    std::cout << render_polynomial(cls.poly, opt.render_format(), opt.ascii) << "\n";
    return kExitOk;
}

// ------------------------------------------------------------ schur-table --

int run_schur_table(int genus, int max_weight, const Options& opt) {
    if (max_weight < 0) max_weight = std::max(0, genus - 1);
    std::vector<Partition> mus;
    for (int w = 1; w <= max_weight; ++w) {
        std::vector<Partition> level = partitions_of(w, genus);
        std::sort(level.begin(), level.end());
        mus.insert(mus.end(), level.begin(), level.end());
    }

    if (opt.format == "json") {
        json rows = json::array();
        for (const Partition& mu : mus) {
            json components = json::array();
            for (const auto& [degree, poly] : shifted_components(mu, genus))
                components.push_back(json{{"degree", degree}, {"polynomial", to_text(poly)}});
            rows.push_back(json{{"mu", mu}, {"components", components}});
        }
        emit(json{{"genus", genus}, {"rows", rows}});
        return kExitOk;
    }
    bool latex = opt.format == "latex";
    for (const Partition& mu : mus) {
        for (const auto& [degree, poly] : shifted_components(mu, genus)) {
            if (latex)
                std::cout << "t^{" << degree << "}_{" << mu_label(mu)
                          << "} = " << render_polynomial(poly, Format::latex, opt.ascii) << "\n";
            else
                std::cout << "t_" << mu_label(mu) << "^" << degree << " = "
                          << render_polynomial(poly, Format::text, opt.ascii) << "\n";
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------- table1 --

int run_table1(int genus, const Options& opt) {
    std::vector<CatalogEntry> entries;
    for (const CatalogEntry& entry : cycle_class_catalog())
        if (genus < 0 || entry.genus == genus) entries.push_back(entry);
    if (entries.empty())
        throw argument_error("no catalogued classes for genus " + std::to_string(genus));

    if (opt.format == "json") {
        json rows = json::array();
        for (const CatalogEntry& entry : entries) {
            CycleClass cls = cycle_class(entry.mu, entry.genus);
            json row = json_class(cls);
            row["weight"] = partition_weight(entry.mu);
            row["expected_codimension"] = entry.expected_codimension;
            rows.push_back(row);
        }
        emit(rows);
        return kExitOk;
    }
    if (opt.format == "latex") {
        std::cout << "\\begin{tabular}{|c|l|c|l|}\n\\hline\n"
                  << "genus & $W_{\\mu}$ & $|\\mu|$ & class \\\\ \\hline\n";
        for (const CatalogEntry& entry : entries) {
            CycleClass cls = cycle_class(entry.mu, entry.genus);
            std::cout << entry.genus << " & $W_{" << mu_label(entry.mu) << "}$"
                      << (entry.expected_codimension ? "" : " $^{*}$") << " & "
                      << partition_weight(entry.mu) << " & $"
                      << render_polynomial(cls.poly, Format::latex, opt.ascii) << "$ \\\\\n";
        }
        std::cout << "\\hline\n\\end{tabular}\n";
        return kExitOk;
    }
    bool any_flagged = false;
    for (const CatalogEntry& entry : entries) {
        CycleClass cls = cycle_class(entry.mu, entry.genus);
        std::cout << "genus " << entry.genus << "  W_" << mu_label(entry.mu)
                  << (entry.expected_codimension ? "" : " *") << "  weight "
                  << partition_weight(entry.mu) << "  class = "
                  << render_polynomial(cls.poly, opt.render_format(), opt.ascii) << "\n";
        if (!entry.expected_codimension) any_flagged = true;
    }
    if (any_flagged)
        std::cout << "* the locus has codimension smaller than the weight; the formula value is "
                     "listed for completeness\n";
    return kExitOk;
}

// ---------------------------------------------------------------- hilbert --

std::vector<GradedPolynomial> vanishing_generators(int genus, int max_weight,
                                                   VanishingCriterion criterion) {
    std::vector<Partition> mus = vanishing_mus(genus, max_weight, criterion);
    std::vector<GradedPolynomial> gens;
    gens.reserve(mus.size());
    for (const Partition& mu : mus) gens.push_back(cycle_class(mu, genus).poly);
    return gens;
}

void print_series(const std::vector<long long>& values, const Options& opt) {
    if (opt.format == "latex") {
        std::ostringstream os;
        bool first = true;
        for (std::size_t d = 0; d < values.size(); ++d) {
            if (values[d] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (values[d] != 1 || d == 0) os << values[d];
            if (d == 1) os << "t";
            if (d > 1) os << "t^{" << d << "}";
        }
        if (first) os << "0";
        std::cout << "$" << os.str() << "$\n";
        return;
    }
    std::cout << "h = ";
    for (std::size_t d = 0; d < values.size(); ++d) {
        if (d) std::cout << ", ";
        std::cout << values[d];
    }
    std::cout << "\n";
}

int run_hilbert(int genus, const std::string& ideal, const std::string& criterion_name,
                const std::string& convention_name, int max_degree,
                const std::vector<std::string>& explicit_mus, const Options& opt) {
    if (max_degree < 0) max_degree = default_degree_cap(genus);

    std::vector<long long> values;
    std::string criterion_used;
    if (ideal == "ev") {
        EvConvention convention;
        if (convention_name == "h")
            convention = EvConvention::complete;
        else if (convention_name == "e")
            convention = EvConvention::elementary;
        else
            throw argument_error("unknown evaluation convention '" + convention_name + "'");
        values = ev_image_hilbert(genus, max_degree, convention);
    } else if (ideal == "schubert") {
        std::vector<GradedPolynomial> gens;
        if (!explicit_mus.empty()) {
            criterion_used = "explicit";
            for (const std::string& text : explicit_mus)
                gens.push_back(cycle_class(parse_mu(text), genus).poly);
        } else if (criterion_name == "ge") {
            criterion_used = "ge";
            gens = vanishing_generators(genus, max_degree, VanishingCriterion::empty_ge);
        } else if (criterion_name == "le") {
            criterion_used = "le";
            gens = vanishing_generators(genus, max_degree, VanishingCriterion::empty_le);
        } else {
            throw argument_error("unknown vanishing criterion '" + criterion_name + "'");
        }
        values = ideal_hilbert(genus, gens, max_degree);
    } else {
        throw argument_error("unknown ideal '" + ideal + "' (expected 'ev' or 'schubert')");
    }

    if (opt.format == "json") {
        json out{{"genus", genus}, {"ideal", ideal}};
        if (ideal == "ev")
            out["convention"] = convention_name;
        else
            out["criterion"] = criterion_used;
        out["max_degree"] = max_degree;
        out["values"] = values;
        emit(out);
        return kExitOk;
    }
    if (opt.format != "latex") {
        std::cout << "genus " << genus << " ideal " << ideal;
        if (ideal == "schubert") std::cout << " criterion " << criterion_used;
        std::cout << " max_degree " << max_degree << "\n";
    }
    print_series(values, opt);
    return kExitOk;
}

// -------------------------------------------------------------- calibrate --

json json_calibration(const std::vector<CalibrationRow>& rows) {
    json out = json::array();
    for (const CalibrationRow& row : rows)
        out.push_back(json{{"degree", row.degree},
                           {"computed", row.computed},
                           {"paper", row.reference},
                           {"match", row.match}});
    return out;
}

void print_calibration(const std::string& title, const std::vector<CalibrationRow>& rows) {
    std::cout << "[" << title << "]\n";
    for (const CalibrationRow& row : rows)
        std::cout << "  d=" << row.degree << ": computed " << row.computed << ", reference "
                  << row.reference << (row.match ? "" : "  MISMATCH") << "\n";
}

int run_calibrate(int genus, int max_degree, const Options& opt) {
    if (!reference_series_known(genus))
        throw argument_error("no reference series on record for genus " + std::to_string(genus) +
                             " (available: 2..6)");
    if (max_degree < 0) max_degree = default_degree_cap(genus);

    std::vector<long long> ev_values = ev_image_hilbert(genus, max_degree);
    std::vector<CalibrationRow> ev_rows = calibrate_series(ev_values, reference_series_ev(genus));

    std::vector<long long> ge_values = ideal_hilbert(
        genus, vanishing_generators(genus, max_degree, VanishingCriterion::empty_ge), max_degree);
    std::vector<CalibrationRow> ge_rows =
        calibrate_series(ge_values, reference_series_ideal(genus));

    std::vector<long long> le_values = ideal_hilbert(
        genus, vanishing_generators(genus, max_degree, VanishingCriterion::empty_le), max_degree);
    std::vector<CalibrationRow> le_rows =
        calibrate_series(le_values, reference_series_ideal(genus));

    if (opt.format == "json") {
        json reports = json::array();
        reports.push_back(json{{"ideal", "ev"}, {"rows", json_calibration(ev_rows)}});
        reports.push_back(
            json{{"ideal", "schubert"}, {"criterion", "ge"}, {"rows", json_calibration(ge_rows)}});
        reports.push_back(
            json{{"ideal", "schubert"}, {"criterion", "le"}, {"rows", json_calibration(le_rows)}});
        emit(json{{"genus", genus}, {"max_degree", max_degree}, {"reports", reports}});
        return kExitOk;
    }
    std::cout << "genus " << genus << " (max degree " << max_degree << ")\n";
    print_calibration("ev", ev_rows);
    print_calibration("schubert ge", ge_rows);
    print_calibration("schubert le", le_rows);
    std::size_t matches = 0, total = 0;
    for (const auto* rows : {&ev_rows, &ge_rows, &le_rows})
        for (const CalibrationRow& row : *rows) {
            ++total;
            if (row.match) ++matches;
        }
    std::cout << "summary: " << matches << "/" << total << " rows match\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Weierstrass cycles: numerical semigroups, codimension "
                 "estimates, equivariant cycle classes, and Hilbert functions"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    app.add_flag("--ascii", opt.ascii, "ASCII variable names (psi, L1, ...) in text output");

    int genus = 0;
    std::string mu_text;
    std::string variant = "minimum";
    int max_weight = -1;
    int max_degree = -1;
    std::string ideal = "ev";
    std::string criterion = "ge";
    std::string convention = "h";
    std::vector<std::string> explicit_mus;
    int table1_genus = -1;

    CLI::App* semigroups_cmd =
        app.add_subcommand("semigroups", "List all numerical semigroups of a genus");
    semigroups_cmd->add_option("--genus", genus, "Genus (number of gaps)")->required();

    CLI::App* estimates_cmd =
        app.add_subcommand("estimates", "Codimension estimate table for a genus");
    estimates_cmd->add_option("--genus", genus, "Genus")->required();
    estimates_cmd->add_option("--variant", variant, "Admissibility rule for improved bounds")
        ->check(CLI::IsMember({"minimum", "unique"}))
        ->capture_default_str();

    CLI::App* class_cmd = app.add_subcommand("class", "Equivariant cycle class of a partition");
    class_cmd->add_option("--genus", genus, "Genus")->required();
    class_cmd->add_option("--mu", mu_text, "Partition, e.g. 2,1")->required();

    CLI::App* schur_cmd =
        app.add_subcommand("schur-table", "Homogeneous components of shifted factorial Schur "
                                          "polynomials");
    schur_cmd->add_option("--genus", genus, "Number of variables")->required();
    schur_cmd->add_option("--max-weight", max_weight, "Largest partition weight (default g-1)");

    CLI::App* table1_cmd =
        app.add_subcommand("table1", "Catalogue of cycle classes for genus 2..5");
    table1_cmd->add_option("--genus", table1_genus, "Restrict to one genus (default: all)");

    CLI::App* hilbert_cmd =
        app.add_subcommand("hilbert", "Hilbert function of a tautological ring approximation");
    hilbert_cmd->add_option("--genus", genus, "Genus")->required();
    hilbert_cmd->add_option("--ideal", ideal, "Which quotient: image of the evaluation map (ev) "
                                              "or quotient by vanishing classes (schubert)")
        ->check(CLI::IsMember({"ev", "schubert"}))
        ->capture_default_str();
    hilbert_cmd->add_option("--criterion", criterion, "Partition selection for schubert ideal")
        ->check(CLI::IsMember({"ge", "le"}))
        ->capture_default_str();
    hilbert_cmd->add_option("--convention", convention,
                            "Evaluation map sends L_k to this symmetric function of the gaps "
                            "times psi^k: complete (h) or elementary (e)")
        ->check(CLI::IsMember({"h", "e"}))
        ->capture_default_str();
    hilbert_cmd->add_option("--max-degree", max_degree, "Largest degree (default per genus)");
    hilbert_cmd->add_option("--mu", explicit_mus,
                            "Explicit generator partition (repeatable); overrides --criterion");

    CLI::App* calibrate_cmd = app.add_subcommand(
        "calibrate", "Compare computed Hilbert functions with the reference series (genus 2..6)");
    calibrate_cmd->add_option("--genus", genus, "Genus")->required();
    calibrate_cmd->add_option("--max-degree", max_degree, "Largest degree (default per genus)");

    // Accept the global --format/--ascii flags after the subcommand as well.
    for (CLI::App* sub : {semigroups_cmd, estimates_cmd, class_cmd, schur_cmd, table1_cmd,
                          hilbert_cmd, calibrate_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (semigroups_cmd->parsed()) return run_semigroups(genus, opt);
        if (estimates_cmd->parsed()) return run_estimates(genus, variant, opt);
        if (class_cmd->parsed()) return run_class(genus, mu_text, opt);
        if (schur_cmd->parsed()) return run_schur_table(genus, max_weight, opt);
        if (table1_cmd->parsed()) return run_table1(table1_genus, opt);
        if (hilbert_cmd->parsed())
            return run_hilbert(genus, ideal, criterion, convention, max_degree, explicit_mus, opt);
        if (calibrate_cmd->parsed()) return run_calibrate(genus, max_degree, opt);
        std::cerr << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
