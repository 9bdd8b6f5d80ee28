// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/factorial_schur.hpp"

#include <string>

#include "wcycle/errors.hpp"
#include "wcycle/matrix.hpp"

namespace wcycle {

GradedPolynomial falling_factorial(const GradedPolynomial& p, int k) {
    if (k < 0) throw argument_error("falling factorial length must be nonnegative");
    GradedPolynomial out = GradedPolynomial::constant(p.ring(), 1);
    for (int j = 0; j < k; ++j)
        out *= p - GradedPolynomial::constant(p.ring(), j);
    return out;
}

Rational falling_factorial(const Rational& value, int k) {
    if (k < 0) throw argument_error("falling factorial length must be nonnegative");
    Rational out = 1;
    for (int j = 0; j < k; ++j) out *= value - j;
    return out;
}

GradedPolynomial factorial_schur(const Partition& mu, int n) {
    if (!is_partition(mu)) throw argument_error("not a partition");
    if (static_cast<int>(mu.size()) > n)
        throw argument_error("partition has more than " + std::to_string(n) + " parts");
    if (n == 0) return GradedPolynomial::constant(root_ring(0), 1);
    RingPtr ring = root_ring(n);
    PolynomialMatrix numerator(n, std::vector<GradedPolynomial>(n, GradedPolynomial::zero(ring)));
    PolynomialMatrix denominator(n, std::vector<GradedPolynomial>(n, GradedPolynomial::zero(ring)));
    for (int i = 0; i < n; ++i) {
        GradedPolynomial xi = GradedPolynomial::variable(ring, i);
        for (int j = 0; j < n; ++j) {
            int part = j < static_cast<int>(mu.size()) ? mu[j] : 0;
            numerator[i][j] = falling_factorial(xi, part + (n - 1 - j));
            denominator[i][j] = falling_factorial(xi, n - 1 - j);
        }
    }
    return determinant(numerator).exact_divide(determinant(denominator));
}

std::map<int, GradedPolynomial> shifted_components(const Partition& mu, int g) {
    GradedPolynomial t = factorial_schur(mu, g);
    RingPtr ring = t.ring();
    std::vector<GradedPolynomial> shifted;
    for (int i = 0; i < g; ++i)
        shifted.push_back(GradedPolynomial::variable(ring, i) -
                          GradedPolynomial::constant(ring, 1));
    return t.substitute(shifted).homogeneous_components();
}

RingPtr tautological_ring(int g) {
    if (g < 0) throw argument_error("genus must be nonnegative");
    std::vector<std::string> names{"psi"};
    std::vector<int> weights{1};
    for (int k = 1; k <= g; ++k) {
        names.push_back("L" + std::to_string(k));
        weights.push_back(k);
    }
    return Ring::make(std::move(names), std::move(weights));
}

CycleClass cycle_class(const Partition& mu, int g) {
    if (!is_partition(mu)) throw argument_error("not a partition");
    if (static_cast<int>(mu.size()) > g)
        throw argument_error("partition has more than genus parts");
    int w = partition_weight(mu);
    RingPtr a_ring = tautological_ring(g);

    // Images e_k -> L_k used to transport elementary-basis expressions.
    std::vector<GradedPolynomial> e_to_lambda;
    for (int k = 1; k <= g; ++k)
        e_to_lambda.push_back(GradedPolynomial::variable(a_ring, k));

    GradedPolynomial total(a_ring);
    std::map<int, GradedPolynomial> components = shifted_components(mu, g);
    for (int i = 0; i <= w; ++i) {
        auto it = components.find(i);
        if (it == components.end()) continue;
        GradedPolynomial in_lambda = omega(to_elementary(it->second)).substitute(e_to_lambda);
        Exponents psi_power(a_ring->size(), 0);
        psi_power[0] = w - i;
        total += in_lambda * GradedPolynomial::monomial(a_ring, psi_power, 1);
    }
    if (w % 2 == 1) total = -total;
    return CycleClass{g, mu, total};
}

GradedPolynomial restrict_cycle_class(const CycleClass& cls, const NumericalSemigroup& h) {
    if (h.genus() != cls.genus)
        throw argument_error("semigroup genus does not match the class genus");
    RingPtr a_ring = cls.poly.ring();
    std::vector<Rational> gap_values;
    for (int gap : h.gaps()) gap_values.emplace_back(gap);
    std::vector<GradedPolynomial> images;
    images.push_back(GradedPolynomial::variable(a_ring, 0)); // psi -> psi
    for (int k = 1; k <= cls.genus; ++k) {
        Exponents psi_power(a_ring->size(), 0);
        psi_power[0] = k;
        images.push_back(
            GradedPolynomial::monomial(a_ring, psi_power, complete_value(gap_values, k)));
    }
    return cls.poly.substitute(images);
}

GradedPolynomial restrict_via_values(const Partition& mu, const NumericalSemigroup& h) {
    if (!is_partition(mu)) throw argument_error("not a partition");
    int g = h.genus();
    if (static_cast<int>(mu.size()) > g)
        throw argument_error("partition has more than genus parts");
    int w = partition_weight(mu);
    RingPtr a_ring = tautological_ring(g);

    Rational value = 1;
    if (g > 0) {
        RationalMatrix numerator(g, std::vector<Rational>(g, Rational(0)));
        RationalMatrix denominator(g, std::vector<Rational>(g, Rational(0)));
        const std::vector<int>& gaps = h.gaps();
        for (int i = 0; i < g; ++i) {
            Rational shifted = Rational(gaps[i]) - 1;
            for (int j = 0; j < g; ++j) {
                int part = j < static_cast<int>(mu.size()) ? mu[j] : 0;
                numerator[i][j] = falling_factorial(shifted, part + (g - 1 - j));
                denominator[i][j] = falling_factorial(shifted, g - 1 - j);
            }
        }
        value = determinant(numerator) / determinant(denominator);
    }
    if (w % 2 == 1) value = -value;
    Exponents psi_power(a_ring->size(), 0);
    psi_power[0] = w;
    return GradedPolynomial::monomial(a_ring, psi_power, value);
}

bool restriction_vanishes(const Partition& mu, const NumericalSemigroup& h) {
    VCSequence threshold = VCSequence::from_partition(h.genus(), mu);
    return !leq(threshold, VCSequence::of_semigroup(h));
}

} // namespace wcycle
