// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <optional>
#include <vector>

#include "wcycle/errors.hpp"
#include "wcycle/estimates.hpp"
#include "wcycle/reference.hpp"
#include "wcycle/semigroup.hpp"
#include "wcycle/sequence.hpp"

using namespace wcycle;

namespace {

struct RowGolden {
    std::vector<int> gaps;
    int eh;
    int improved;
    int lower;
    std::optional<int> exact;                      // absent = unknown
    std::optional<int> reference;                  // reference improved value, if distinct
    std::vector<std::vector<int>> witnesses;       // empty = witness is the row itself
};

// Frozen expected rows for genus 3..6 (every semigroup of genus 3..5, plus the
// exceptional genus-6 rows).
const std::vector<RowGolden>& row_goldens() {
    using V = std::vector<int>;
    static const std::vector<RowGolden> rows{
        // genus 3
        {{1, 2, 3}, 0, 0, 0, 0, {}, {}},
        {{1, 2, 4}, 1, 1, 1, 1, {}, {}},
        {{1, 2, 5}, 2, 2, 2, 2, {}, {}},
        {{1, 3, 5}, 3, 2, 2, 2, {}, {V{1, 3, 4}}},
        // genus 4
        {{1, 2, 3, 4}, 0, 0, 0, 0, {}, {}},
        {{1, 2, 3, 5}, 1, 1, 1, 1, {}, {}},
        {{1, 2, 3, 6}, 2, 2, 2, 2, {}, {}},
        {{1, 2, 3, 7}, 3, 3, 3, 3, {}, {}},
        {{1, 2, 4, 5}, 2, 2, 2, 2, {}, {}},
        {{1, 2, 4, 7}, 4, 3, 3, 3, {}, {V{1, 2, 4, 6}}},
        {{1, 3, 5, 7}, 6, 3, 3, 3, {}, {V{1, 3, 4, 5}}},
        // genus 5
        {{1, 2, 3, 4, 5}, 0, 0, 0, 0, {}, {}},
        {{1, 2, 3, 4, 6}, 1, 1, 1, 1, {}, {}},
        {{1, 2, 3, 4, 7}, 2, 2, 2, 2, {}, {}},
        {{1, 2, 3, 4, 8}, 3, 3, 3, 3, {}, {}},
        {{1, 2, 3, 4, 9}, 4, 4, 4, 4, {}, {}},
        {{1, 2, 3, 5, 6}, 2, 2, 2, 2, {}, {}},
        {{1, 2, 3, 5, 7}, 3, 3, 2, 3, {}, {}},
        {{1, 2, 3, 5, 9}, 5, 5, 4, 4, 4, {}},
        {{1, 2, 3, 6, 7}, 4, 4, 3, 4, {}, {}},
        {{1, 2, 4, 5, 7}, 4, 3, 3, std::nullopt, 4, {V{1, 2, 4, 5, 6}}},
        {{1, 2, 4, 5, 8}, 5, 5, 3, 5, {}, {}},
        {{1, 3, 5, 7, 9}, 10, 4, 4, 4, {}, {V{1, 3, 4, 5, 6}}},
        // genus 6, the rows where the improved bound beats the plain weight
        {{1, 2, 3, 5, 7, 11}, 8, 7, 5, 6, {}, {V{1, 2, 3, 4, 7, 11}, V{1, 2, 3, 5, 6, 11}}},
        {{1, 2, 3, 6, 7, 11}, 9, 6, 5, 6, {}, {V{1, 2, 3, 6, 7, 8}}},
        {{1, 2, 4, 5, 7, 8}, 6, 4, 4, 4, {}, {V{1, 2, 4, 5, 6, 7}}},
        {{1, 2, 4, 5, 7, 10}, 8, 6, 4, 5, {}, {V{1, 2, 4, 5, 6, 9}}},
        {{1, 2, 4, 5, 8, 11}, 10, 7, 5, 6, {}, {V{1, 2, 3, 4, 8, 10}, V{1, 2, 3, 5, 8, 9}}},
        {{1, 3, 5, 7, 9, 11}, 15, 5, 5, 5, {}, {V{1, 3, 4, 5, 6, 7}}},
    };
    return rows;
}

VCSequence seq_of(const std::vector<int>& gaps) {
    return VCSequence::from_gaps(gaps);
}

} // namespace

TEST_CASE("weight bound and codimension floor") {
    CHECK(eh_bound(NumericalSemigroup({1, 2, 3})) == 0);
    CHECK(eh_bound(NumericalSemigroup({1, 3, 5, 7, 9, 11})) == 15);
    CHECK(eh_bound(NumericalSemigroup::naturals()) == 0);

    CHECK(codim_lower(NumericalSemigroup({1, 3, 5, 7, 9, 11})) == 5);  // g=6, t=1
    CHECK(codim_lower(NumericalSemigroup({1, 2, 3, 4, 5, 6})) == 0);   // t = g
    CHECK(codim_lower(NumericalSemigroup::naturals()) == 0);
}

TEST_CASE("admissibility under the minimum rule") {
    VCSequence s = seq_of({1, 3, 5});      // (4, 2, 0)
    CHECK(admissible(s, s));
    CHECK(admissible(s, seq_of({1, 3, 4})));                      // (3,2,0)
    // (4,1,0) is itself a semigroup sequence (gaps {1,2,5}) dominating the
    // threshold but not dominating s, so the threshold fails.
    CHECK_FALSE(admissible(s, VCSequence({4, 1, 0})));
    CHECK_FALSE(admissible(s, VCSequence({2, 1, 0})));

    CHECK_THROWS_AS(admissible(s, VCSequence({5, 2, 0})), argument_error);  // not below s
    CHECK_THROWS_AS(admissible(s, VCSequence({2, 0})), argument_error);     // genus mismatch
}

TEST_CASE("admissibility under the uniqueness rule") {
    VCSequence s = seq_of({1, 3, 5});
    CHECK(admissible(s, seq_of({1, 3, 4}), AdmissibleVariant::unique));
    // The generic sequence is dominated by every sequence, so never unique
    // (genus >= 2 has more than one semigroup).
    CHECK_FALSE(admissible(s, VCSequence({2, 1, 0}), AdmissibleVariant::unique));

    // A threshold dominated only by s itself.
    VCSequence hyper = seq_of({1, 3});     // (2, 0)
    CHECK(admissible(hyper, hyper, AdmissibleVariant::unique));
}

TEST_CASE("improved bound and witnesses") {
    ImprovedBound ib = improved_bound(NumericalSemigroup({1, 3, 5}));
    CHECK(ib.bound == 2);
    REQUIRE(ib.witnesses.size() == 1);
    CHECK(ib.witnesses[0].gaps() == std::vector<int>{1, 3, 4});

    // Threshold = the sequence itself when nothing lighter is admissible.
    ImprovedBound tight = improved_bound(NumericalSemigroup({1, 2, 3, 5, 9}));
    CHECK(tight.bound == 5);
    REQUIRE(tight.witnesses.size() == 1);
    CHECK(tight.witnesses[0].gaps() == std::vector<int>{1, 2, 3, 5, 9});

    // Witness lists are sorted by gap list and duplicate-free.
    ImprovedBound multi = improved_bound(NumericalSemigroup({1, 2, 3, 5, 7, 11}));
    CHECK(multi.bound == 7);
    REQUIRE(multi.witnesses.size() == 2);
    CHECK(multi.witnesses[0].gaps() == std::vector<int>{1, 2, 3, 4, 7, 11});
    CHECK(multi.witnesses[1].gaps() == std::vector<int>{1, 2, 3, 5, 6, 11});
}

TEST_CASE("improved bound under the uniqueness rule") {
    // Genus 1: the single sequence (0) dominates itself uniquely.
    ImprovedBound g1 = improved_bound(NumericalSemigroup({1}), AdmissibleVariant::unique);
    CHECK(g1.bound == 0);
    CHECK(g1.witnesses.size() == 1);

    // Gaps {1,2}: every threshold below (1,0) is dominated by both genus-2
    // sequences, so no unique threshold exists; fall back to the weight bound.
    ImprovedBound none = improved_bound(NumericalSemigroup({1, 2}), AdmissibleVariant::unique);
    CHECK(none.bound == 0);
    CHECK(none.witnesses.empty());

    // Gaps {1,3}: the sequence (2,0) dominates only itself.
    ImprovedBound hyper = improved_bound(NumericalSemigroup({1, 3}), AdmissibleVariant::unique);
    CHECK(hyper.bound == 1);
    REQUIRE(hyper.witnesses.size() == 1);
    CHECK(hyper.witnesses[0].gaps() == std::vector<int>{1, 3});
}

TEST_CASE("table rows match the frozen goldens") {
    std::map<int, std::vector<EstimateRecord>> tables;
    for (int g : {3, 4, 5, 6}) tables[g] = estimates_table(g);

    for (const RowGolden& golden : row_goldens()) {
        CAPTURE(golden.gaps);
        int g = static_cast<int>(golden.gaps.size());
        const EstimateRecord* rec = nullptr;
        for (const EstimateRecord& r : tables[g])
            if (r.gap_sequence.gaps() == golden.gaps) rec = &r;
        REQUIRE(rec != nullptr);

        CHECK(rec->eh_bound == golden.eh);
        CHECK(rec->improved_bound == golden.improved);
        CHECK(rec->codim_lower == golden.lower);
        if (golden.exact)
            CHECK(rec->exact_codim == golden.exact);
        else
            CHECK_FALSE(rec->exact_codim.has_value());
        if (golden.reference)
            CHECK(rec->reference_estimate == golden.reference);
        else
            CHECK_FALSE(rec->reference_estimate.has_value());

        std::vector<std::vector<int>> witness_gaps;
        for (const VCSequence& w : rec->improved_witnesses) witness_gaps.push_back(w.gaps());
        if (golden.witnesses.empty())
            CHECK(witness_gaps == std::vector<std::vector<int>>{golden.gaps});
        else
            CHECK(witness_gaps == golden.witnesses);
    }
}

TEST_CASE("rows not listed as exceptional have matching bounds") {
    // For genus <= 5, the improved bound equals the known exact codimension on
    // every row, and the plain weight bound agrees except on the recorded
    // exceptions.
    for (int g = 0; g <= 5; ++g)
        for (const EstimateRecord& rec : estimates_table(g)) {
            CAPTURE(g);
            CAPTURE(rec.gap_sequence.gaps());
            CHECK(rec.improved_bound <= rec.eh_bound);
            CHECK(rec.codim_lower <= rec.improved_bound);
            if (rec.exact_codim) {
                CHECK(rec.codim_lower <= *rec.exact_codim);
                CHECK(*rec.exact_codim <= rec.eh_bound);
            }
            bool exceptional = false;
            for (const ExceptionalEstimate& e : exceptional_estimates())
                if (e.gaps == rec.gap_sequence.gaps()) exceptional = true;
            if (!exceptional) {
                REQUIRE(rec.exact_codim.has_value());
                CHECK(*rec.exact_codim == rec.eh_bound);
                CHECK(rec.improved_bound == rec.eh_bound);
            }
        }
}

TEST_CASE("the one bounded-window row") {
    std::vector<EstimateRecord> table = estimates_table(6);
    int windows = 0;
    for (const EstimateRecord& rec : table)
        if (rec.exact_codim_bounds) {
            ++windows;
            CHECK(rec.gap_sequence.gaps() == std::vector<int>{1, 2, 3, 4, 6, 8});
            CHECK(rec.exact_codim_bounds->first == 2);
            CHECK(rec.exact_codim_bounds->second == 3);
            CHECK_FALSE(rec.exact_codim.has_value());
            CHECK(rec.eh_bound == 3);
            CHECK(rec.improved_bound == 3);
            CHECK(rec.codim_lower == 2);
        }
    CHECK(windows == 1);
}

TEST_CASE("upper dimension estimate column") {
    // Genus 6, in enumeration order.
    const std::vector<int> expected{16, 15, 14, 13, 12, 11, 14, 14, 13, 11, 13, 12,
                                    12, 13, 13, 12, 13, 11, 11, 12, 12, 11, 11};
    std::vector<EstimateRecord> table = estimates_table(6);
    REQUIRE(table.size() == expected.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        CAPTURE(i);
        CHECK(table[i].deligne_dim_upper == expected[i]);
    }
}

TEST_CASE("witnesses really are admissible minimisers") {
    for (int g : {3, 4, 5})
        for (const EstimateRecord& rec : estimates_table(g)) {
            CAPTURE(rec.gap_sequence.gaps());
            REQUIRE_FALSE(rec.improved_witnesses.empty());
            for (const VCSequence& w : rec.improved_witnesses) {
                CHECK(leq(w, rec.gap_sequence));
                CHECK(w.weight() == rec.improved_bound);
                CHECK(admissible(rec.gap_sequence, w));
            }
        }
}

TEST_CASE("single record matches its table row") {
    NumericalSemigroup h({1, 2, 4, 5, 7, 8});
    EstimateRecord rec = estimate_record(h);
    std::vector<EstimateRecord> table = estimates_table(6);
    const EstimateRecord* row = nullptr;
    for (const EstimateRecord& r : table)
        if (r.gap_sequence.gaps() == h.gaps()) row = &r;
    REQUIRE(row != nullptr);
    CHECK(rec.eh_bound == row->eh_bound);
    CHECK(rec.improved_bound == row->improved_bound);
    CHECK(rec.codim_lower == row->codim_lower);
    CHECK(rec.exact_codim == row->exact_codim);
    CHECK(rec.improved_witnesses.size() == row->improved_witnesses.size());
}

TEST_CASE("serial and parallel tables agree") {
    for (int g : {4, 5, 6}) {
        std::vector<EstimateRecord> serial = estimates_table(g, AdmissibleVariant::minimum, Exec::serial);
        std::vector<EstimateRecord> parallel = estimates_table(g, AdmissibleVariant::minimum, Exec::parallel);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CAPTURE(g);
            CAPTURE(i);
            CHECK(serial[i].gap_sequence == parallel[i].gap_sequence);
            CHECK(serial[i].improved_bound == parallel[i].improved_bound);
            CHECK(serial[i].improved_witnesses.size() == parallel[i].improved_witnesses.size());
        }
    }
}

TEST_CASE("genus beyond the reference data leaves exact codimension open") {
    for (const EstimateRecord& rec : estimates_table(7)) {
        CHECK_FALSE(rec.exact_codim.has_value());
        CHECK_FALSE(rec.exact_codim_bounds.has_value());
        CHECK(rec.improved_bound <= rec.eh_bound);
        CHECK(rec.codim_lower <= rec.improved_bound);
    }
}

TEST_CASE("resource cap propagates") {
    CHECK_THROWS_AS(estimates_table(17), resource_error);
    CHECK_THROWS_AS(estimates_table(5, AdmissibleVariant::minimum, Exec::serial, 4), resource_error);
}
