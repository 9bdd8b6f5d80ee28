// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "wcycle/exec.hpp"
#include "wcycle/factorial_schur.hpp"
#include "wcycle/matrix.hpp"
#include "wcycle/polynomial.hpp"
#include "wcycle/sequence.hpp"

namespace wcycle {

// Which symmetric function of the gaps the variable L_k evaluates to under
// the fixed-point evaluation map.  Image ranks are identical under the two
// conventions.
enum class EvConvention { complete, elementary };

// Evaluation matrix in one degree: rows are the monomials of that degree of
// the tautological ring (canonical order), columns the semigroups of the
// genus (enumeration order); the entry drops psi and evaluates each L_k at
// the chosen symmetric function of the column's gaps.
RationalMatrix ev_matrix(int g, int degree, EvConvention convention = EvConvention::complete);

// Hilbert function of the image of the evaluation map, degree by degree up
// to max_degree (inclusive).  Degrees are processed in parallel under
// Exec::parallel.
std::vector<long long> ev_image_hilbert(int g, int max_degree,
                                        EvConvention convention = EvConvention::complete,
                                        Exec exec = Exec::parallel);

// Partition selection rules for the vanishing ideal's generators:
//  - empty_ge: partitions whose attached sequence dominates no semigroup
//    sequence of the genus (so the class restricts to zero everywhere);
//  - empty_le: partitions whose attached sequence is dominated by no
//    semigroup sequence (never satisfied, since the staircase sequence lies
//    below every threshold; kept for comparison runs).
enum class VanishingCriterion { empty_ge, empty_le };

// All partitions with at most g parts and weight <= max_weight selected by
// the criterion, sorted by weight and then lexicographically.
std::vector<Partition> vanishing_mus(int g, int max_weight,
                                     VanishingCriterion criterion = VanishingCriterion::empty_ge);

// Hilbert function of the quotient by the homogeneous ideal generated by the
// given elements of the tautological ring: in each degree d,
// dim A_d - rank{ m * f : f a generator, m a monomial of degree d - deg f }.
// Throws argument_error if a generator is not homogeneous or lives in a
// different ring.
std::vector<long long> ideal_hilbert(int g, const std::vector<GradedPolynomial>& generators,
                                     int max_degree, Exec exec = Exec::parallel);

// Dimension of the degree-d piece of the tautological ring.
long long tautological_dim(int g, int degree);

// One comparison row of a calibration run.
struct CalibrationRow {
    int degree = 0;
    long long computed = 0;
    long long reference = 0;
    bool match = false;
};

// Pairs a computed Hilbert function with reference coefficients (taken as 0
// beyond the recorded reference data).
std::vector<CalibrationRow> calibrate_series(const std::vector<long long>& computed,
                                             const std::vector<long long>& reference);

} // namespace wcycle
