// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "wcycle/errors.hpp"

namespace wcycle {

namespace {

std::string gaps_to_string(const std::vector<int>& gaps) {
    std::string s = "{";
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(gaps[i]);
    }
    return s + "}";
}

// Closure check on a membership table covering 0..frobenius: no gap may be a
// sum of two nonzero members.
bool complement_is_closed(const std::vector<bool>& member, int frobenius) {
    for (int a = 1; a <= frobenius; ++a) {
        if (!member[a]) continue;
        for (int b = a; a + b <= frobenius; ++b) {
            if (member[b] && !member[a + b]) return false;
        }
    }
    return true;
}

} // namespace

bool is_numerical_semigroup(const std::vector<int>& gaps) {
    if (gaps.empty()) return true;
    std::vector<int> sorted = gaps;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1) return false;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return false;
    int frobenius = sorted.back();
    std::vector<bool> member(frobenius + 1, true);
    for (int g : sorted) member[g] = false;
    return complement_is_closed(member, frobenius);
}

NumericalSemigroup::NumericalSemigroup(std::vector<int> gaps) {
    std::sort(gaps.begin(), gaps.end());
    if (!is_numerical_semigroup(gaps))
        throw argument_error("not the gap set of a numerical semigroup: " + gaps_to_string(gaps));
    gaps_ = std::move(gaps);
    frobenius_ = gaps_.empty() ? -1 : gaps_.back();
}

NumericalSemigroup NumericalSemigroup::naturals() { return NumericalSemigroup(std::vector<int>{}); }

bool NumericalSemigroup::contains(int n) const {
    if (n < 0) return false;
    if (n > frobenius_) return true;
    return !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

int NumericalSemigroup::multiplicity() const {
    int n = 1;
    while (!contains(n)) ++n;
    return n;
}

namespace {

// Enumeration node: membership bitmask for the values 0..63 (large enough for
// every semigroup up to the genus cap, whose gaps stay below 2*genus).
struct Node {
    std::uint64_t members;
    int frobenius;
    int genus;
};

bool mask_member(std::uint64_t mask, int n) { return (mask >> n) & 1u; }

// n is a minimal generator iff it is a nonzero member that is not a sum of
// two nonzero members.
bool is_minimal_generator(std::uint64_t mask, int n) {
    if (!mask_member(mask, n)) return false;
    for (int a = 1; a + a <= n; ++a)
        if (mask_member(mask, a) && mask_member(mask, n - a)) return false;
    return true;
}

// Children in the genus tree: remove one minimal generator larger than the
// frobenius number.  The removed element becomes the child's frobenius.
void children_of(const Node& node, std::vector<Node>& out) {
    out.clear();
    int lo = std::max(1, node.frobenius + 1);
    int hi = 2 * node.genus + 1; // largest possible frobenius at genus+1
    for (int m = lo; m <= hi; ++m) {
        if (!is_minimal_generator(node.members, m)) continue;
        out.push_back(Node{node.members & ~(std::uint64_t{1} << m), m, node.genus + 1});
    }
}

std::vector<int> gaps_of_node(const Node& node) {
    std::vector<int> gaps;
    gaps.reserve(node.genus);
    for (int n = 1; n <= node.frobenius; ++n)
        if (!mask_member(node.members, n)) gaps.push_back(n);
    return gaps;
}

void collect(const Node& node, int target, std::vector<std::vector<int>>& out) {
    if (node.genus == target) {
        out.push_back(gaps_of_node(node));
        return;
    }
    std::vector<Node> kids;
    children_of(node, kids);
    for (const Node& kid : kids) collect(kid, target, out);
}

} // namespace

std::vector<NumericalSemigroup> enumerate_semigroups(int genus, Exec exec, int genus_cap) {
    if (genus < 0) throw argument_error("genus must be nonnegative");
    if (genus > genus_cap)
        throw resource_error("genus " + std::to_string(genus) + " exceeds the enumeration cap " +
                             std::to_string(genus_cap));
    Node root{~std::uint64_t{0}, -1, 0};

    // Expand a small frontier breadth-first, then walk the remaining subtrees
    // independently (in parallel under Exec::parallel).
    std::vector<Node> frontier{root};
    int depth = 0;
    int frontier_depth = std::min(genus, 4);
    std::vector<Node> next, kids;
    while (depth < frontier_depth) {
        next.clear();
        for (const Node& node : frontier) {
            children_of(node, kids);
            next.insert(next.end(), kids.begin(), kids.end());
        }
        frontier.swap(next);
        ++depth;
    }

    std::vector<std::vector<std::vector<int>>> buckets(frontier.size());
    parallel_for(frontier.size(), exec,
                 [&](std::size_t i) { collect(frontier[i], genus, buckets[i]); });

    std::vector<std::vector<int>> all;
    for (auto& bucket : buckets)
        for (auto& gaps : bucket) all.push_back(std::move(gaps));
    std::sort(all.begin(), all.end());

    std::vector<NumericalSemigroup> out;
    out.reserve(all.size());
    for (auto& gaps : all) out.emplace_back(std::move(gaps));
    return out;
}

NumericalSemigroup end_extension(const NumericalSemigroup& h) {
    // A gap n stabilises H iff n + h is a member for every nonzero member h
    // with n + h <= frobenius; larger sums are members automatically.
    std::vector<int> end_gaps;
    for (int n : h.gaps()) {
        bool stabilises = true;
        for (int m = 1; n + m <= h.frobenius(); ++m) {
            if (h.contains(m) && m != 0 && !h.contains(n + m)) {
                stabilises = false;
                break;
            }
        }
        if (!stabilises) end_gaps.push_back(n);
    }
    return NumericalSemigroup(std::move(end_gaps));
}

int end_extension_excess(const NumericalSemigroup& h) {
    return h.genus() - end_extension(h).genus();
}

int deligne_dim_upper(const NumericalSemigroup& h, DimConvention convention) {
    int g = h.genus();
    int t = end_extension_excess(h);
    return convention == DimConvention::plus ? 2 * g - 2 + t : 2 * g - t - 2;
}

} // namespace wcycle
