// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wcycle/exec.hpp"
#include "wcycle/semigroup.hpp"
#include "wcycle/sequence.hpp"

namespace wcycle {

// The weight of the semigroup's own sequence: the classical codimension
// estimate for the locus of Weierstrass points with that semigroup.
int eh_bound(const NumericalSemigroup& h);

// Lower bound max(0, g - t) for the codimension, with t = |End(H) \ H|.
int codim_lower(const NumericalSemigroup& h);

// Admissibility rules for a comparison threshold Z below a semigroup
// sequence S.
//  - minimum: every semigroup sequence dominating Z also dominates S
//             (componentwise), i.e. S is the componentwise minimum of the
//             dominating set.
//  - unique:  S is the only semigroup sequence dominating Z.
enum class AdmissibleVariant { minimum, unique };

// Checks admissibility of z for the semigroup sequence s.  Throws
// argument_error unless z <= s componentwise and both have the same genus.
bool admissible(const VCSequence& s, const VCSequence& z,
                AdmissibleVariant variant = AdmissibleVariant::minimum);

struct ImprovedBound {
    int bound = 0;
    // All admissible thresholds of minimal weight, sorted by gap list.  Empty
    // only when no admissible threshold exists at all (possible under the
    // `unique` variant); the bound then falls back to the plain weight bound.
    std::vector<VCSequence> witnesses;
};

// Minimises the weight over all strictly decreasing thresholds Z <= S that
// are admissible for S under the chosen variant.  Under the default variant
// Z = S is always admissible, so the result never exceeds eh_bound.
ImprovedBound improved_bound(const NumericalSemigroup& h,
                             AdmissibleVariant variant = AdmissibleVariant::minimum);

// One table row per semigroup: the computed bounds plus the built-in
// reference codimension data for genus <= 6.
struct EstimateRecord {
    VCSequence gap_sequence;
    int eh_bound = 0;
    int improved_bound = 0;
    std::vector<VCSequence> improved_witnesses;
    int deligne_dim_upper = 0;
    int codim_lower = 0;
    // Known exact codimension (embedded reference data, genus <= 6).  Absent
    // when unknown or when the reference data is inconsistent for the row.
    std::optional<int> exact_codim;
    // For the one genus-6 row whose exact codimension is known only up to a
    // window, the inclusive [low, high] range.
    std::optional<std::pair<int, int>> exact_codim_bounds;
    // Reference value of the improved estimate when it differs from the
    // computed one; both values are then reported side by side.
    std::optional<int> reference_estimate;
};

// Builds the full table for a genus, one record per numerical semigroup in
// enumeration order.  Rows are independent and computed in parallel under
// Exec::parallel.
std::vector<EstimateRecord> estimates_table(int genus,
                                            AdmissibleVariant variant = AdmissibleVariant::minimum,
                                            Exec exec = Exec::parallel, int genus_cap = 16);

// The record for a single semigroup (same content as the matching table row).
EstimateRecord estimate_record(const NumericalSemigroup& h,
                               AdmissibleVariant variant = AdmissibleVariant::minimum);

} // namespace wcycle
