// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/reference.hpp"

#include "wcycle/errors.hpp"

namespace wcycle {

const std::vector<ExceptionalEstimate>& exceptional_estimates() {
    static const std::vector<ExceptionalEstimate> rows = {
        {{1, 3, 5}, 2, std::nullopt, std::nullopt},
        {{1, 2, 4, 7}, 3, std::nullopt, std::nullopt},
        {{1, 3, 5, 7}, 3, std::nullopt, std::nullopt},
        // The reference improved estimate 4 disagrees with the value computed
        // under the componentwise-minimum rule (5); both are reported.
        {{1, 2, 3, 5, 9}, 4, std::nullopt, 4},
        // The reference data implies exact codimension 4, but the computed
        // improved bound is 3; the two are inconsistent, so no exact value is
        // asserted and the reference value is carried alongside.
        {{1, 2, 4, 5, 7}, std::nullopt, std::nullopt, 4},
        {{1, 3, 5, 7, 9}, 4, std::nullopt, std::nullopt},
        // Exact codimension known only to lie in [2, 3].
        {{1, 2, 3, 4, 6, 8}, std::nullopt, std::make_pair(2, 3), std::nullopt},
        {{1, 2, 3, 5, 7, 11}, 6, std::nullopt, std::nullopt},
        {{1, 2, 3, 6, 7, 11}, 6, std::nullopt, std::nullopt},
        {{1, 2, 4, 5, 7, 8}, 4, std::nullopt, std::nullopt},
        {{1, 2, 4, 5, 7, 10}, 5, std::nullopt, std::nullopt},
        {{1, 2, 4, 5, 8, 11}, 6, std::nullopt, std::nullopt},
        {{1, 3, 5, 7, 9, 11}, 5, std::nullopt, std::nullopt},
    };
    return rows;
}

bool exact_codim_known(int genus) { return genus >= 0 && genus <= 6; }

const std::vector<CatalogEntry>& cycle_class_catalog() {
    static const std::vector<CatalogEntry> rows = {
        {2, {1}, true},
        {3, {1}, true},
        {3, {1, 1}, true},
        {3, {2}, true},
        {4, {1}, true},
        {4, {1, 1}, true},
        {4, {2}, true},
        {4, {1, 1, 1}, true},
        {4, {2, 1}, true},
        {4, {3}, true},
        {5, {1}, true},
        {5, {1, 1}, true},
        {5, {2}, true},
        {5, {1, 1, 1}, true},
        {5, {2, 1}, true},
        {5, {3}, true},
        {5, {1, 1, 1, 1}, true},
        {5, {2, 1, 1}, false},
        {5, {2, 2}, true},
        {5, {3, 1}, true},
        {5, {4}, true},
        {5, {3, 1, 1}, false},
        {5, {4, 1}, false},
    };
    return rows;
}

namespace {

const std::vector<long long>& series_or_throw(int genus,
                                              const std::vector<std::vector<long long>>& table) {
    if (genus < 2 || genus > 6)
        throw argument_error("no reference series for genus " + std::to_string(genus));
    return table[genus - 2];
}

} // namespace

bool reference_series_known(int genus) { return genus >= 2 && genus <= 6; }

const std::vector<long long>& reference_series_ev(int genus) {
    static const std::vector<std::vector<long long>> table = {
        {1, 1},
        {1, 2, 2, 1},
        {1, 2, 4, 3, 1},
        {1, 2, 4, 7, 2, 1},
        {1, 2, 4, 7, 11, 6, 3},
    };
    return series_or_throw(genus, table);
}

const std::vector<long long>& reference_series_ideal(int genus) {
    static const std::vector<std::vector<long long>> table = {
        {1, 2, 4, 4, 2, 1, 1, 1, 1},
        {1, 2, 4, 7, 9, 9, 6, 1},
        {1, 2, 4, 7, 12, 16, 20, 22, 21, 15, 9, 2},
        {1, 2, 4, 7, 12, 19, 27, 35, 43, 51, 54, 54, 49, 41, 27, 12, 2},
        {1, 2, 4,  7, 12, 19, 30, 42,  57,  73, 92, 110,
         127, 138, 149, 151, 144, 129, 106, 75, 41, 15, 2},
    };
    return series_or_throw(genus, table);
}

int default_degree_cap(int genus) {
    switch (genus) {
        case 2: return 8;
        case 3: return 7;
        case 4: return 11;
        case 5: return 16;
        case 6: return 22;
        default: return 8;
    }
}

} // namespace wcycle
