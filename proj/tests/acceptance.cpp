// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one self-contained check per shipped guarantee, each
// printed as a single [PASS]/[FAIL] line with timing.  The known deviation in
// criterion 3 is reported honestly and does not fail the run; any other
// failure does.
//
// Usage: acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "goldens.hpp"
#include "wcycle/estimates.hpp"
#include "wcycle/factorial_schur.hpp"
#include "wcycle/hilbert.hpp"
#include "wcycle/matrix.hpp"
#include "wcycle/polynomial.hpp"
#include "wcycle/reference.hpp"
#include "wcycle/semigroup.hpp"
#include "wcycle/sequence.hpp"
#include "wcycle/symmetric.hpp"

using namespace wcycle;

namespace {

std::string g_binary;

// Collects the first failure message of a criterion.
class Check {
public:
    void require(bool condition, const std::string& message) {
        if (!condition && ok_) {
            ok_ = false;
            message_ = message;
        }
    }
    void note(const std::string& message) { note_ = message; }
    bool ok() const { return ok_; }
    const std::string& message() const { return message_; }
    const std::string& note() const { return note_; }

private:
    bool ok_ = true;
    std::string message_;
    std::string note_;
};

std::string brace_list(const std::vector<int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

int run_cli(const std::string& args, std::string& output) {
    std::string cmd = "'" + g_binary + "' " + args + " 2>/dev/null";
    output.clear();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ------------------------------------------------------------ criterion 1 --

void criterion_census(Check& check) {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 7, 12, 23, 39, 67};
    for (int g = 0; g <= 8; ++g) {
        std::size_t count = enumerate_semigroups(g).size();
        check.require(count == expected[g],
                      "genus " + std::to_string(g) + ": counted " + std::to_string(count) +
                          ", expected " + std::to_string(expected[g]));
    }
    check.note("9 counts verified");
}

// ------------------------------------------------------------ criterion 2 --

void criterion_genus6_table(Check& check) {
    std::vector<EstimateRecord> table = estimates_table(6);
    check.require(table.size() == 23, "expected 23 rows");
    int verified = 0;
    for (const goldens::HighlightRow& golden : goldens::genus6_highlights()) {
        const EstimateRecord* rec = nullptr;
        for (const EstimateRecord& r : table)
            if (r.gap_sequence.gaps() == golden.gaps) rec = &r;
        std::string label = brace_list(golden.gaps);
        check.require(rec != nullptr, "row " + label + " missing");
        if (!rec) continue;
        check.require(rec->eh_bound == golden.eh,
                      label + ": weight bound " + std::to_string(rec->eh_bound) + ", expected " +
                          std::to_string(golden.eh));
        check.require(rec->improved_bound == golden.improved,
                      label + ": improved bound " + std::to_string(rec->improved_bound) +
                          ", expected " + std::to_string(golden.improved));

        // The reference witness must be below the row's sequence, have the
        // improved weight, satisfy the admissibility rule, and appear among
        // the computed minimisers.
        VCSequence s = rec->gap_sequence;
        VCSequence z = VCSequence::from_gaps(golden.reference_witness_gaps);
        std::string wlabel = brace_list(golden.reference_witness_gaps);
        check.require(leq(z, s), label + ": reference witness " + wlabel + " not below the row");
        check.require(z.weight() == golden.improved,
                      label + ": reference witness weight " + std::to_string(z.weight()));
        check.require(admissible(s, z), label + ": reference witness " + wlabel + " inadmissible");
        bool found = false;
        for (const VCSequence& w : rec->improved_witnesses)
            if (w == z) found = true;
        check.require(found, label + ": reference witness " + wlabel + " not among minimisers");
        ++verified;
    }
    check.note(std::to_string(verified) + " highlighted rows checked within the 23-row table");
}

// ------------------------------------------------------------ criterion 3 --

void criterion_inline_bounds(Check& check) {
    for (const goldens::InlineBoundRow& golden : goldens::inline_bounds()) {
        NumericalSemigroup h(golden.gaps);
        ImprovedBound result = improved_bound(h);
        std::string label = brace_list(golden.gaps);
        if (result.bound != golden.reference_bound) {
            std::ostringstream os;
            os << label << ": computed bound " << result.bound << ", reference "
               << golden.reference_bound << "; the reference witness "
               << brace_list(golden.reference_witness_gaps)
               << " is dominated by the incomparable gap sequence of {1,2,4,5,8}, which does "
                  "not dominate "
               << label
               << ", so no threshold lighter than the sequence itself passes the "
                  "dominating-set-minimum rule (documented deviation)";
            check.require(false, os.str());
            continue;
        }
        VCSequence z = VCSequence::from_gaps(golden.reference_witness_gaps);
        bool found = false;
        for (const VCSequence& w : result.witnesses)
            if (w == z) found = true;
        check.require(found, label + ": reference witness not among the computed minimisers");
    }
    check.note("5 stand-alone bounds compared");
}

// ------------------------------------------------------------ criterion 4 --

void criterion_class_table(Check& check) {
    int verified = 0;
    for (const goldens::ClassGolden& row : goldens::class_goldens()) {
        CycleClass cls = cycle_class(row.mu, row.genus);
        GradedPolynomial expected = parse_polynomial(tautological_ring(row.genus), row.text);
        check.require(cls.poly == expected,
                      "genus " + std::to_string(row.genus) + " class " + brace_list(row.mu) +
                          ": expansion differs from the frozen table");
        ++verified;
    }
    check.require(verified == 20, "expected 20 catalogued classes");
    check.note("20 class expansions verified");
}

// ------------------------------------------------------------ criterion 5 --

void criterion_component_table(Check& check) {
    std::map<std::pair<int, Partition>, std::map<int, GradedPolynomial>> cache;
    int verified = 0;
    for (const goldens::ComponentGolden& row : goldens::component_goldens()) {
        auto key = std::make_pair(row.genus, row.mu);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, shifted_components(row.mu, row.genus)).first;
        GradedPolynomial expected = GradedPolynomial::zero(root_ring(row.genus));
        for (const auto& [coeff, shape] : row.expansion)
            expected += monomial_symmetric(shape, row.genus) * Rational(static_cast<long>(coeff));
        auto comp = it->second.find(row.degree);
        std::string label = "genus " + std::to_string(row.genus) + ", partition " +
                            brace_list(row.mu) + ", degree " + std::to_string(row.degree);
        check.require(comp != it->second.end(), label + ": component missing");
        if (comp != it->second.end())
            check.require(comp->second == expected, label + ": component differs");
        ++verified;
    }
    check.note(std::to_string(verified) + " components across 20 partitions verified");
}

// ------------------------------------------------------------ criterion 6 --

void criterion_restriction_agreement(Check& check) {
    int points = 0;
    for (const CatalogEntry& entry : cycle_class_catalog()) {
        CycleClass cls = cycle_class(entry.mu, entry.genus);
        for (const NumericalSemigroup& h : enumerate_semigroups(entry.genus)) {
            GradedPolynomial direct = restrict_cycle_class(cls, h);
            GradedPolynomial via_values = restrict_via_values(entry.mu, h);
            std::string label = "genus " + std::to_string(entry.genus) + ", partition " +
                                brace_list(entry.mu) + ", fixed point " + brace_list(h.gaps());
            check.require(direct == via_values, label + ": the two restriction routes disagree");
            check.require(direct.is_zero() == restriction_vanishes(entry.mu, h),
                          label + ": vanishing test disagrees with the computed restriction");
            ++points;
        }
    }
    check.note(std::to_string(points) + " (class, fixed point) pairs compared");
}

// ------------------------------------------------------------ criterion 7 --

void criterion_symmetric_identities(Check& check) {
    // The involution squares to the identity on pseudo-random inputs.
    std::mt19937 rng(8675309);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int n = 1; n <= 5; ++n) {
        RingPtr ring = elementary_ring(n);
        for (int trial = 0; trial < 3; ++trial) {
            GradedPolynomial p = GradedPolynomial::zero(ring);
            for (int d = 0; d <= 8; ++d)
                for (const Exponents& e : monomials_of_degree(*ring, d)) {
                    int c = coeff(rng);
                    if (c != 0) p.add_term(e, Rational(c));
                }
            check.require(omega(omega(p)) == p,
                          "involution squared is not the identity (" + std::to_string(n) +
                              " variables, trial " + std::to_string(trial) + ")");
        }
    }

    // The involution conjugates Schur polynomials, and the top homogeneous
    // component of each factorial Schur polynomial is the classical one.
    int checked = 0;
    for (int w = 1; w <= 5; ++w)
        for (const Partition& mu : partitions_of(w)) {
            std::string label = "partition " + brace_list(mu);
            GradedPolynomial lhs = omega(to_elementary(schur(mu, 5)));
            GradedPolynomial rhs = to_elementary(schur(conjugate(mu), 5));
            check.require(lhs == rhs, label + ": conjugation identity fails");

            GradedPolynomial t = factorial_schur(mu, 5);
            check.require(t.homogeneous_component(w) == schur(mu, 5),
                          label + ": top component is not the classical Schur polynomial");
            ++checked;
        }
    check.note("15 involution samples, " + std::to_string(checked) + " partitions");
}

// ------------------------------------------------------------ criterion 8 --

void criterion_quotient_oracles(Check& check) {
    // Principal ideals: h_d = dim A_d - dim A_{d-e}.
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> degree_dist(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        int g = 2 + trial % 2;
        RingPtr ring = tautological_ring(g);
        int e = degree_dist(rng);
        GradedPolynomial f = GradedPolynomial::zero(ring);
        while (f.is_zero())
            for (const Exponents& exps : monomials_of_degree(*ring, e)) {
                int c = coeff(rng);
                if (c != 0) f.add_term(exps, Rational(c));
            }
        std::vector<long long> h = ideal_hilbert(g, {f}, 8);
        for (int d = 0; d <= 8; ++d) {
            long long expected =
                tautological_dim(g, d) - (d >= e ? tautological_dim(g, d - e) : 0);
            check.require(h[d] == expected, "principal-ideal trial " + std::to_string(trial) +
                                                ", degree " + std::to_string(d) + ": got " +
                                                std::to_string(h[d]) + ", oracle " +
                                                std::to_string(expected));
        }
    }

    // Monomial ideals with up to three generators: inclusion-exclusion over
    // least common multiples.
    struct MonomialCase {
        int g;
        std::vector<Exponents> monomials;
    };
    std::vector<MonomialCase> cases{
        {2, {{2, 0, 0}}},
        {2, {{1, 1, 0}, {0, 0, 1}}},
        {2, {{3, 0, 0}, {0, 2, 0}, {0, 0, 2}}},
        {3, {{0, 1, 0, 0}, {1, 0, 1, 0}}},
        {3, {{2, 0, 0, 0}, {0, 0, 0, 1}, {0, 2, 0, 0}}},
    };
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const MonomialCase& c = cases[ci];
        RingPtr ring = tautological_ring(c.g);
        std::vector<GradedPolynomial> gens;
        for (const Exponents& e : c.monomials)
            gens.push_back(GradedPolynomial::monomial(ring, e, Rational(1)));
        std::vector<long long> h = ideal_hilbert(c.g, gens, 8);
        int n = static_cast<int>(c.monomials.size());
        for (int d = 0; d <= 8; ++d) {
            long long ideal_dim = 0;
            for (int mask = 1; mask < (1 << n); ++mask) {
                Exponents l(ring->size(), 0);
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i))
                        for (std::size_t k = 0; k < l.size(); ++k)
                            l[k] = std::max(l[k], c.monomials[i][k]);
                int deg = weighted_degree(*ring, l);
                long long cnt = d >= deg ? tautological_dim(c.g, d - deg) : 0;
                ideal_dim += (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 1) ? cnt : -cnt;
            }
            check.require(h[d] == tautological_dim(c.g, d) - ideal_dim,
                          "monomial-ideal case " + std::to_string(ci) + ", degree " +
                              std::to_string(d) + ": quotient dimension mismatch");
        }
    }
    check.note("10 principal and 5 monomial ideals matched");
}

// ------------------------------------------------------------ criterion 9 --

void criterion_vanishing_generators(Check& check) {
    int restrictions = 0;
    for (int g = 0; g <= 6; ++g) {
        std::vector<NumericalSemigroup> semigroups = enumerate_semigroups(g);
        for (const Partition& mu : vanishing_mus(g, 8)) {
            CycleClass cls = cycle_class(mu, g);
            for (const NumericalSemigroup& h : semigroups) {
                GradedPolynomial value = restrict_cycle_class(cls, h);
                check.require(value.is_zero(),
                              "genus " + std::to_string(g) + ", partition " + brace_list(mu) +
                                  ": restriction at " + brace_list(h.gaps()) + " is nonzero");
                ++restrictions;
            }
        }
    }
    check.note(std::to_string(restrictions) + " restrictions all zero");
}

// ----------------------------------------------------------- criterion 10 --

void criterion_calibration_runs(Check& check) {
    int rows_seen = 0;
    for (int g = 2; g <= 4; ++g) {
        std::string output;
        std::string label = "calibrate --genus " + std::to_string(g);
        int code = run_cli("calibrate --genus " + std::to_string(g) + " --format json", output);
        check.require(code == 0, label + ": exit code " + std::to_string(code));
        if (code != 0) continue;
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(output);
        } catch (const std::exception& e) {
            check.require(false, label + ": invalid JSON (" + e.what() + ")");
            continue;
        }
        check.require(parsed.contains("genus") && parsed["genus"] == g, label + ": bad genus field");
        check.require(parsed.contains("max_degree") && parsed["max_degree"].is_number(),
                      label + ": bad max_degree field");
        check.require(parsed.contains("reports") && parsed["reports"].is_array() &&
                          parsed["reports"].size() == 3,
                      label + ": expected 3 reports");
        if (!parsed.contains("reports") || !parsed["reports"].is_array()) continue;
        for (const nlohmann::json& report : parsed["reports"]) {
            check.require(report.contains("ideal") && report["ideal"].is_string(),
                          label + ": report without ideal name");
            check.require(report.contains("rows") && report["rows"].is_array() &&
                              !report["rows"].empty(),
                          label + ": report without rows");
            if (!report.contains("rows") || !report["rows"].is_array()) continue;
            for (const nlohmann::json& row : report["rows"]) {
                check.require(row.contains("degree") && row.contains("computed") &&
                                  row.contains("paper") && row.contains("match") &&
                                  row["match"].is_boolean(),
                              label + ": row missing a schema field");
                ++rows_seen;
            }
        }
    }
    check.note("3 calibration runs, " + std::to_string(rows_seen) + " schema-checked rows");
}

// ----------------------------------------------------------- criterion 11 --

void criterion_codim_floor(Check& check) {
    int compared = 0;
    for (int g = 0; g <= 6; ++g)
        for (const EstimateRecord& rec : estimates_table(g)) {
            if (!rec.exact_codim) continue;
            check.require(rec.codim_lower <= *rec.exact_codim,
                          brace_list(rec.gap_sequence.gaps()) + ": floor " +
                              std::to_string(rec.codim_lower) + " exceeds exact " +
                              std::to_string(*rec.exact_codim));
            ++compared;
        }

    // The two rows where the floor is known to be sharp.
    const std::vector<std::pair<std::vector<int>, int>> sharp{
        {{1, 2, 4, 5, 7, 8}, 4}, {{1, 3, 5, 7, 9, 11}, 5}};
    std::vector<EstimateRecord> table = estimates_table(6);
    for (const auto& [gaps, value] : sharp) {
        const EstimateRecord* rec = nullptr;
        for (const EstimateRecord& r : table)
            if (r.gap_sequence.gaps() == gaps) rec = &r;
        std::string label = brace_list(gaps);
        check.require(rec != nullptr, label + ": row missing");
        if (!rec) continue;
        check.require(rec->codim_lower == value,
                      label + ": floor " + std::to_string(rec->codim_lower) + ", expected " +
                          std::to_string(value));
        check.require(rec->exact_codim && *rec->exact_codim == value,
                      label + ": exact codimension is not " + std::to_string(value));
    }
    check.note(std::to_string(compared) + " rows with known exact codimension, 2 sharp");
}

// ------------------------------------------------------------------ driver --

struct Criterion {
    int number;
    std::string description;
    double limit_seconds; // 0 = no budget
    bool documented_deviation;
    std::function<void(Check&)> run;
};

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 1;
    }
    g_binary = argv[1];

    const std::vector<Criterion> criteria{
        {1, "semigroup census for genus 0..8", 1.0, false, criterion_census},
        {2, "genus-6 estimate table with reference witnesses", 10.0, false,
         criterion_genus6_table},
        {3, "five stand-alone improved bounds with reference witnesses", 5.0, true,
         criterion_inline_bounds},
        {4, "catalogued cycle-class expansions (20 rows)", 30.0, false, criterion_class_table},
        {5, "shifted factorial Schur component tables", 60.0, false, criterion_component_table},
        {6, "restriction routes agree at every fixed point, genus 2..5", 0.0, false,
         criterion_restriction_agreement},
        {7, "involution, conjugation, and top-component identities", 0.0, false,
         criterion_symmetric_identities},
        {8, "quotient Hilbert functions against independent ideal oracles", 0.0, false,
         criterion_quotient_oracles},
        {9, "selected vanishing classes restrict to zero, genus <= 6, weight <= 8", 0.0, false,
         criterion_vanishing_generators},
        {10, "calibration subcommand completes with a valid report, genus 2..4", 600.0, false,
         criterion_calibration_runs},
        {11, "codimension floor below every known exact value, sharp twice", 0.0, false,
         criterion_codim_floor},
    };

    int green = 0, documented_red = 0, unexpected_red = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("unhandled exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.limit_seconds > 0 && elapsed > criterion.limit_seconds)
            check.require(false, "exceeded the " + std::to_string(criterion.limit_seconds) +
                                     "s budget");

        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        if (check.ok()) {
            ++green;
            line << "[PASS] criterion " << criterion.number << ": " << criterion.description
                 << " (" << (check.note().empty() ? "ok" : check.note()) << "; " << elapsed
                 << "s)";
        } else {
            if (criterion.documented_deviation)
                ++documented_red;
            else
                ++unexpected_red;
            line << "[FAIL] criterion " << criterion.number << ": " << criterion.description
                 << " (" << check.message() << "; " << elapsed << "s)";
        }
        std::cout << line.str() << "\n" << std::flush;
    }

    std::cout << green << "/" << criteria.size() << " criteria green";
    if (documented_red) std::cout << "; " << documented_red << " documented red";
    if (unexpected_red) std::cout << "; " << unexpected_red << " unexpected failures";
    std::cout << "\n";
    return unexpected_red == 0 ? 0 : 1;
}
