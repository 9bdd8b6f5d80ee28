// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wcycle/sequence.hpp"

namespace wcycle {

// Built-in reference data for low genus: known exact codimensions of the
// Weierstrass loci, the catalogued cycle classes, and the reference Hilbert
// series that the calibration command compares against.  These values are
// shipped with the library so that computed results can be checked and
// reported next to them.

// Rows of the codimension table that deviate from the default rule
// "exact codimension = weight of the gap sequence" (genus <= 6).
struct ExceptionalEstimate {
    std::vector<int> gaps;
    // Known exact codimension; absent when not even the reference data pins
    // it down consistently.
    std::optional<int> exact;
    // Inclusive window for the exact codimension when only bounds are known.
    std::optional<std::pair<int, int>> exact_bounds;
    // Reference value of the improved estimate where it is known to differ
    // from what the default admissibility rule computes.
    std::optional<int> reference_improved;
};

const std::vector<ExceptionalEstimate>& exceptional_estimates();

// True when the exact codimension of every locus of this genus is covered by
// the reference data (the default rule plus the exceptional rows above).
bool exact_codim_known(int genus);

// Catalogue of the cycle classes tabulated for genus 2..5.  The three largest
// genus-5 entries are computed by the same formula but are not expected to
// equal the actual locus classes, because the corresponding loci have smaller
// codimension than the weight of the partition; they are flagged.
struct CatalogEntry {
    int genus;
    Partition mu;
    bool expected_codimension; // false for the flagged entries
};

const std::vector<CatalogEntry>& cycle_class_catalog();

// Reference Hilbert series coefficients (genus 2..6): the image of the
// evaluation map, and the quotient by the vanishing ideal.  Index = degree.
const std::vector<long long>& reference_series_ev(int genus);
const std::vector<long long>& reference_series_ideal(int genus);
// True when reference series are available for the genus.
bool reference_series_known(int genus);

// Degree cap used by default for the Hilbert computations of a genus: large
// enough to cover the reference series on record.
int default_degree_cap(int genus);

} // namespace wcycle
