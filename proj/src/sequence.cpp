// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/sequence.hpp"

#include <algorithm>
#include <string>

#include "wcycle/errors.hpp"

namespace wcycle {

bool is_partition(const Partition& mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0) return false;
        if (i > 0 && mu[i] > mu[i - 1]) return false;
    }
    return true;
}

int partition_weight(const Partition& mu) {
    int w = 0;
    for (int part : mu) w += part;
    return w;
}

Partition conjugate(const Partition& mu) {
    Partition out;
    if (mu.empty()) return out;
    out.resize(mu.front(), 0);
    for (int part : mu)
        for (int j = 0; j < part; ++j) ++out[j];
    return out;
}

namespace {

void build_partitions(int remaining, int max_part, int max_parts, Partition& current,
                      std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (max_parts == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        build_partitions(remaining - part, part, max_parts - 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<Partition> partitions_of(int n, int max_parts) {
    if (n < 0) throw argument_error("partition weight must be nonnegative");
    if (max_parts < 0) throw argument_error("partition length bound must be nonnegative");
    std::vector<Partition> out;
    Partition current;
    build_partitions(n, n, max_parts, current, out);
    return out;
}

VCSequence::VCSequence(std::vector<int> z) {
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] < 0)
            throw argument_error("sequence entries must be nonnegative");
        if (i > 0 && z[i] >= z[i - 1])
            throw argument_error("sequence entries must be strictly decreasing");
    }
    z_ = std::move(z);
}

VCSequence VCSequence::of_semigroup(const NumericalSemigroup& h) { return from_gaps(h.gaps()); }

VCSequence VCSequence::from_gaps(const std::vector<int>& gaps) {
    std::vector<int> z;
    z.reserve(gaps.size());
    for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) z.push_back(*it - 1);
    try {
        return VCSequence(std::move(z));
    } catch (const argument_error&) {
        throw argument_error("gap list must be strictly increasing positive integers");
    }
}

VCSequence VCSequence::from_partition(int genus, const Partition& mu) {
    if (genus < 0) throw argument_error("genus must be nonnegative");
    if (!is_partition(mu)) throw argument_error("not a partition (weakly decreasing, positive)");
    if (static_cast<int>(mu.size()) > genus)
        throw argument_error("partition has more than genus parts");
    std::vector<int> z(genus);
    for (int i = 0; i < genus; ++i) {
        int part = i < static_cast<int>(mu.size()) ? mu[i] : 0;
        z[i] = part + (genus - 1 - i);
    }
    return VCSequence(std::move(z));
}

std::vector<int> VCSequence::gaps() const {
    std::vector<int> out;
    out.reserve(z_.size());
    for (auto it = z_.rbegin(); it != z_.rend(); ++it) out.push_back(*it + 1);
    return out;
}

Partition VCSequence::partition() const {
    int g = genus();
    Partition mu;
    for (int i = 0; i < g; ++i) {
        int part = z_[i] - (g - 1 - i);
        if (part < 0)
            throw argument_error("sequence lies below the minimal staircase; no partition");
        mu.push_back(part);
    }
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    return mu;
}

int VCSequence::weight() const {
    int g = genus();
    int w = 0;
    for (int i = 0; i < g; ++i) w += z_[i] - (g - 1 - i);
    return w;
}

bool leq(const VCSequence& a, const VCSequence& b) {
    if (a.genus() != b.genus())
        throw argument_error("cannot compare sequences of different genus (" +
                             std::to_string(a.genus()) + " vs " + std::to_string(b.genus()) + ")");
    for (int i = 0; i < a.genus(); ++i)
        if (a.z()[i] > b.z()[i]) return false;
    return true;
}

} // namespace wcycle
