// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/matrix.hpp"

#include <utility>

#include "wcycle/errors.hpp"

namespace wcycle {

std::size_t rank(RationalMatrix m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw argument_error("ragged matrix");
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Rational determinant(RationalMatrix m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw argument_error("determinant requires a square matrix");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = 1 / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

namespace {

// Division-free determinant: minors over growing row prefixes, memoized by the
// column subset (bitmask).  Well suited to rows whose entries touch disjoint
// variables, where intermediate minors stay sparse.
GradedPolynomial determinant_cofactor(const PolynomialMatrix& m, RingPtr ring) {
    std::size_t n = m.size();
    std::vector<GradedPolynomial> minors(std::size_t{1} << n, GradedPolynomial::zero(ring));
    minors[0] = GradedPolynomial::constant(ring, 1);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        // Minor of rows 0..k-1 and the columns in `mask`, expanded along row k-1.
        GradedPolynomial value = GradedPolynomial::zero(ring);
        int sign = (k % 2 == 1) ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t bit = std::size_t{1} << j;
            if (!(mask & bit)) continue;
            if (!m[k - 1][j].is_zero() && !minors[mask ^ bit].is_zero()) {
                GradedPolynomial contrib = minors[mask ^ bit] * m[k - 1][j];
                if (sign > 0)
                    value += contrib;
                else
                    value -= contrib;
            }
            sign = -sign;
        }
        minors[mask] = std::move(value);
    }
    return minors[(std::size_t{1} << n) - 1];
}

// Fraction-free Bareiss elimination with exact polynomial divisions.
GradedPolynomial determinant_bareiss(PolynomialMatrix m, RingPtr ring) {
    std::size_t n = m.size();
    GradedPolynomial prev = GradedPolynomial::constant(ring, 1);
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return GradedPolynomial::zero(ring);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                GradedPolynomial num = m[i][j] * m[c][c] - m[i][c] * m[c][j];
                m[i][j] = num.exact_divide(prev);
            }
            m[i][c] = GradedPolynomial::zero(ring);
        }
        prev = m[c][c];
    }
    GradedPolynomial det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

} // namespace

GradedPolynomial determinant(const PolynomialMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw argument_error("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw argument_error("determinant requires a square matrix");
    RingPtr ring = m[0][0].ring();
    for (const auto& row : m)
        for (const auto& entry : row)
            if (!entry.ring()->same_as(*ring))
                throw argument_error("matrix entries live in different rings");
    if (n == 1) return m[0][0];
    if (n <= 8) return determinant_cofactor(m, ring);
    return determinant_bareiss(m, ring);
}

} // namespace wcycle
