// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "wcycle/polynomial.hpp"
#include "wcycle/rational.hpp"

namespace wcycle {

// Dense matrix over the rationals, row major.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank via exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

// Determinant of a square rational matrix via exact elimination.
Rational determinant(RationalMatrix m);

// Dense matrix with polynomial entries (all in one ring), row major.
using PolynomialMatrix = std::vector<std::vector<GradedPolynomial>>;

// Determinant of a square polynomial matrix.  Uses division-free cofactor
// expansion with column-subset memoization for n <= 8 and fraction-free
// Bareiss elimination (with exact divisions) for larger sizes.
GradedPolynomial determinant(const PolynomialMatrix& m);

} // namespace wcycle
