// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "wcycle/semigroup.hpp"

namespace wcycle {

// A partition: weakly decreasing positive integers (trailing zeros dropped).
using Partition = std::vector<int>;

// True when mu is weakly decreasing with positive parts.
bool is_partition(const Partition& mu);
// Sum of the parts.
int partition_weight(const Partition& mu);
// Conjugate (transpose) partition.
Partition conjugate(const Partition& mu);
// All partitions of weight n, in lexicographically descending order.
std::vector<Partition> partitions_of(int n);
// All partitions of weight n with at most max_parts parts.
std::vector<Partition> partitions_of(int n, int max_parts);

// A vanishing-order sequence of genus g: strictly decreasing nonnegative
// integers z_1 > z_2 > ... > z_g >= 0.  The sequence of a numerical semigroup
// lists its gaps minus one, in descending order; general sequences serve as
// comparison thresholds.
class VCSequence {
public:
    // Validates strict decrease and nonnegativity; throws argument_error.
    explicit VCSequence(std::vector<int> z);

    // The sequence of a numerical semigroup (entry i is the (g-i+1)-st gap
    // minus one).
    static VCSequence of_semigroup(const NumericalSemigroup& h);
    // The sequence with gap set `gaps` (validated as strictly increasing
    // positive integers; the gap set need not belong to a semigroup).
    static VCSequence from_gaps(const std::vector<int>& gaps);
    // The sequence z_i = mu_i + (g - i) attached to a partition with at most
    // g parts; throws argument_error when mu has more than g parts.
    static VCSequence from_partition(int genus, const Partition& mu);

    int genus() const { return static_cast<int>(z_.size()); }
    const std::vector<int>& z() const { return z_; }

    // Gap view: entry i of the result is z_{g-i+1} + 1, strictly increasing.
    std::vector<int> gaps() const;
    // The partition mu_i = z_i - (g - i), trailing zeros dropped.
    Partition partition() const;
    // Weight: sum of z_i + i - g over i = 1..g, equal to the weight of the
    // attached partition.
    int weight() const;

    bool operator==(const VCSequence& rhs) const { return z_ == rhs.z_; }
    bool operator!=(const VCSequence& rhs) const { return !(*this == rhs); }
    bool operator<(const VCSequence& rhs) const { return z_ < rhs.z_; }

private:
    std::vector<int> z_;
};

// Componentwise comparison a_i <= b_i for all i; throws argument_error when
// the genera differ.
bool leq(const VCSequence& a, const VCSequence& b);

} // namespace wcycle
