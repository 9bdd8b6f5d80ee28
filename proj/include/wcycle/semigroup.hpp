// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "wcycle/exec.hpp"

namespace wcycle {

// A numerical semigroup: a cofinite subset of the nonnegative integers that
// contains 0 and is closed under addition.  Represented by its finite set of
// gaps (the positive integers it misses); the genus is the number of gaps and
// the frobenius number is the largest gap (-1 when there are no gaps).
class NumericalSemigroup {
public:
    // Builds the semigroup with the given gap set; throws argument_error if
    // the complement of the gap set is not closed under addition or the gaps
    // are not distinct positive integers.
    explicit NumericalSemigroup(std::vector<int> gaps);

    // The semigroup of all nonnegative integers (genus 0).
    static NumericalSemigroup naturals();

    int genus() const { return static_cast<int>(gaps_.size()); }
    int frobenius() const { return frobenius_; }
    const std::vector<int>& gaps() const { return gaps_; }

    // Membership test for arbitrary nonnegative integers.
    bool contains(int n) const;
    // Smallest nonzero member.
    int multiplicity() const;

    bool operator==(const NumericalSemigroup& rhs) const { return gaps_ == rhs.gaps_; }
    bool operator!=(const NumericalSemigroup& rhs) const { return !(*this == rhs); }
    bool operator<(const NumericalSemigroup& rhs) const { return gaps_ < rhs.gaps_; }

private:
    NumericalSemigroup() = default;
    std::vector<int> gaps_;
    int frobenius_ = -1;
};

// True when the given positive integers form the gap set of a numerical
// semigroup.  Closure only needs to be checked for sums of nonzero members
// that do not exceed the largest gap; everything larger is a member anyway.
bool is_numerical_semigroup(const std::vector<int>& gaps);

// All numerical semigroups of the given genus, sorted by gap set
// (lexicographically ascending).  Enumeration walks the genus tree in which
// each semigroup's parent is obtained by adjoining its frobenius number, so
// every semigroup is produced exactly once.  Throws resource_error when genus
// exceeds genus_cap (default 16) and argument_error for negative genus.
std::vector<NumericalSemigroup> enumerate_semigroups(int genus, Exec exec = Exec::parallel,
                                                     int genus_cap = 16);

// The endomorphism semigroup End(H) = { n >= 0 : n + h in H for every nonzero
// member h of H }.  It contains H and is itself a numerical semigroup.
NumericalSemigroup end_extension(const NumericalSemigroup& h);

// t = |End(H) \ H|, the number of gaps of H that stabilise H additively.
int end_extension_excess(const NumericalSemigroup& h);

// Sign convention for the t-term in the dimension bound below.
enum class DimConvention { plus, minus };

// Upper bound for the dimension of the locus of curves with a Weierstrass
// point of semigroup H inside the moduli of genus-g curves: 2g - 2 + t under
// the `plus` convention (the default) and 2g - t - 2 under `minus`.
int deligne_dim_upper(const NumericalSemigroup& h, DimConvention convention = DimConvention::plus);

} // namespace wcycle
