// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/estimates.hpp"

#include <algorithm>

#include "wcycle/errors.hpp"
#include "wcycle/reference.hpp"

namespace wcycle {

int eh_bound(const NumericalSemigroup& h) { return VCSequence::of_semigroup(h).weight(); }

int codim_lower(const NumericalSemigroup& h) {
    return std::max(0, h.genus() - end_extension_excess(h));
}

namespace {

using ZVector = std::vector<int>;

bool leq_z(const ZVector& a, const ZVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Admissibility against a precomputed list of all semigroup sequences of the
// same genus.
bool admissible_against(const ZVector& s, const ZVector& z, const std::vector<ZVector>& all,
                        AdmissibleVariant variant) {
    if (variant == AdmissibleVariant::unique) {
        for (const ZVector& t : all)
            if (leq_z(z, t) && t != s) return false;
        return true;
    }
    // minimum: every dominating semigroup sequence also dominates s.
    for (const ZVector& t : all)
        if (leq_z(z, t) && !leq_z(s, t)) return false;
    return true;
}

std::vector<ZVector> all_sequences(int genus, Exec exec, int genus_cap) {
    std::vector<ZVector> out;
    for (const NumericalSemigroup& h : enumerate_semigroups(genus, exec, genus_cap))
        out.push_back(VCSequence::of_semigroup(h).z());
    return out;
}

struct Search {
    const ZVector& s;
    const std::vector<ZVector>& all;
    AdmissibleVariant variant;
    int g;
    int best;
    std::vector<ZVector> minimizers;
    ZVector current;

    // Depth-first over strictly decreasing thresholds below s, ascending in
    // weight at each position so cheap thresholds are found early and the
    // weight cut stays tight.
    void run(int pos, int partial_weight) {
        if (pos == g) {
            if (partial_weight > best) return;
            if (admissible_against(s, current, all, variant)) {
                if (partial_weight < best) {
                    best = partial_weight;
                    minimizers.clear();
                }
                minimizers.push_back(current);
            }
            return;
        }
        int staircase = g - 1 - pos;
        int hi = s[pos];
        if (pos > 0) hi = std::min(hi, current[pos - 1] - 1);
        for (int v = staircase; v <= hi; ++v) {
            int weight = partial_weight + (v - staircase);
            if (weight > best) break; // larger v only increases the weight
            current[pos] = v;
            run(pos + 1, weight);
        }
    }
};

ImprovedBound improved_bound_against(const VCSequence& seq, const std::vector<ZVector>& all,
                                     AdmissibleVariant variant) {
    int g = seq.genus();
    Search search{seq.z(), all, variant, g, seq.weight() + 1, {}, ZVector(g, 0)};
    search.run(0, 0);
    ImprovedBound out;
    if (search.minimizers.empty()) {
        // Possible only under the `unique` variant: fall back to the plain
        // weight bound with no witnesses.
        out.bound = seq.weight();
        return out;
    }
    out.bound = search.best;
    for (ZVector& z : search.minimizers) out.witnesses.emplace_back(std::move(z));
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const VCSequence& a, const VCSequence& b) { return a.gaps() < b.gaps(); });
    return out;
}

EstimateRecord build_record(const NumericalSemigroup& h, const std::vector<ZVector>& all,
                            AdmissibleVariant variant) {
    EstimateRecord rec{VCSequence::of_semigroup(h), 0, 0, {}, 0, 0, {}, {}, {}};
    rec.eh_bound = rec.gap_sequence.weight();
    ImprovedBound improved = improved_bound_against(rec.gap_sequence, all, variant);
    rec.improved_bound = improved.bound;
    rec.improved_witnesses = std::move(improved.witnesses);
    rec.deligne_dim_upper = deligne_dim_upper(h);
    rec.codim_lower = codim_lower(h);

    const ExceptionalEstimate* exception = nullptr;
    for (const ExceptionalEstimate& row : exceptional_estimates())
        if (row.gaps == h.gaps()) exception = &row;
    if (exception != nullptr) {
        rec.exact_codim = exception->exact;
        rec.exact_codim_bounds = exception->exact_bounds;
        if (exception->reference_improved &&
            *exception->reference_improved != rec.improved_bound)
            rec.reference_estimate = exception->reference_improved;
    } else if (exact_codim_known(h.genus())) {
        rec.exact_codim = rec.eh_bound;
    }
    return rec;
}

} // namespace

bool admissible(const VCSequence& s, const VCSequence& z, AdmissibleVariant variant) {
    if (!leq(z, s))
        throw argument_error("threshold must lie below the semigroup sequence componentwise");
    NumericalSemigroup h(s.gaps()); // validates that s belongs to a semigroup
    (void)h;
    std::vector<ZVector> all = all_sequences(s.genus(), Exec::serial, 16);
    return admissible_against(s.z(), z.z(), all, variant);
}

ImprovedBound improved_bound(const NumericalSemigroup& h, AdmissibleVariant variant) {
    std::vector<ZVector> all = all_sequences(h.genus(), Exec::serial, 16);
    return improved_bound_against(VCSequence::of_semigroup(h), all, variant);
}

EstimateRecord estimate_record(const NumericalSemigroup& h, AdmissibleVariant variant) {
    std::vector<ZVector> all = all_sequences(h.genus(), Exec::serial, 16);
    return build_record(h, all, variant);
}

std::vector<EstimateRecord> estimates_table(int genus, AdmissibleVariant variant, Exec exec,
                                            int genus_cap) {
    std::vector<NumericalSemigroup> semigroups = enumerate_semigroups(genus, exec, genus_cap);
    std::vector<ZVector> all;
    all.reserve(semigroups.size());
    for (const NumericalSemigroup& h : semigroups)
        all.push_back(VCSequence::of_semigroup(h).z());
    std::vector<EstimateRecord> records(semigroups.size(),
                                        EstimateRecord{VCSequence({}), 0, 0, {}, 0, 0, {}, {}, {}});
    parallel_for(semigroups.size(), exec,
                 [&](std::size_t i) { records[i] = build_record(semigroups[i], all, variant); });
    return records;
}

} // namespace wcycle
