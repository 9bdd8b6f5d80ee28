// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wcycle/rational.hpp"

namespace wcycle {

// A finitely generated free commutative coefficient ring description: named
// variables, each with a positive integer grading weight.  Rings are immutable
// and shared by the polynomials defined over them.
class Ring {
public:
    static std::shared_ptr<const Ring> make(std::vector<std::string> variables,
                                            std::vector<int> weights);

    // Convenience: all weights equal to 1.
    static std::shared_ptr<const Ring> make_standard(std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    std::size_t size() const { return vars_.size(); }

    // Index of a variable name; throws argument_error if unknown.
    std::size_t index_of(const std::string& name) const;
    bool has_variable(const std::string& name) const;

    bool same_as(const Ring& other) const;

private:
    Ring(std::vector<std::string> vars, std::vector<int> weights);
    std::vector<std::string> vars_;
    std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Exponent vector of a monomial; entry i is the exponent of ring variable i.
using Exponents = std::vector<int>;

// Total weighted degree of an exponent vector in a ring.
int weighted_degree(const Ring& ring, const Exponents& e);

// Canonical term order: higher weighted degree first, then lexicographically
// larger exponent vector first (with respect to the ring's declared variable
// order).  This is the order used for storage, printing, and leading terms.
struct TermOrder {
    std::vector<int> weights;
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// A polynomial over a graded ring with exact rational coefficients.  Terms are
// kept in canonical order and zero coefficients are never stored, so equal
// polynomials have identical representations.
class GradedPolynomial {
public:
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    explicit GradedPolynomial(RingPtr ring);

    static GradedPolynomial zero(RingPtr ring);
    static GradedPolynomial constant(RingPtr ring, const Rational& value);
    static GradedPolynomial variable(RingPtr ring, std::size_t index);
    static GradedPolynomial monomial(RingPtr ring, Exponents exps, const Rational& coeff);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Weighted degree of the polynomial; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    // The part of weighted degree d (zero polynomial if absent).
    GradedPolynomial homogeneous_component(int d) const;
    // All nonzero homogeneous parts, keyed by degree.
    std::map<int, GradedPolynomial> homogeneous_components() const;

    Rational coefficient(const Exponents& e) const;
    // Leading term with respect to the canonical order; throws on zero.
    std::pair<Exponents, Rational> leading_term() const;

    GradedPolynomial operator-() const;
    GradedPolynomial& operator+=(const GradedPolynomial& rhs);
    GradedPolynomial& operator-=(const GradedPolynomial& rhs);
    GradedPolynomial operator+(const GradedPolynomial& rhs) const;
    GradedPolynomial operator-(const GradedPolynomial& rhs) const;
    GradedPolynomial operator*(const GradedPolynomial& rhs) const;
    GradedPolynomial& operator*=(const GradedPolynomial& rhs);
    GradedPolynomial operator*(const Rational& scalar) const;
    GradedPolynomial& operator*=(const Rational& scalar);
    GradedPolynomial pow(unsigned exponent) const;

    bool operator==(const GradedPolynomial& rhs) const;
    bool operator!=(const GradedPolynomial& rhs) const { return !(*this == rhs); }

    // Exact division; throws divisibility_error if the quotient is not exact.
    GradedPolynomial exact_divide(const GradedPolynomial& divisor) const;

    // Substitutes images[i] for variable i.  All images must live in one ring,
    // which becomes the ring of the result.
    GradedPolynomial substitute(const std::vector<GradedPolynomial>& images) const;
    // Replaces a single variable by a polynomial in the same ring.
    GradedPolynomial substitute_variable(std::size_t index, const GradedPolynomial& image) const;
    // Full evaluation at rational points.
    Rational evaluate(const std::vector<Rational>& point) const;

    void add_term(const Exponents& e, const Rational& coeff);

private:
    RingPtr ring_;
    TermMap terms_;
};

// All exponent vectors of weighted degree d, in canonical term order.
std::vector<Exponents> monomials_of_degree(const Ring& ring, int d);

// Canonical ASCII rendering: terms in canonical order, coefficients in p/q
// form, monomials as '*'-joined variable^exponent factors.  parse_polynomial
// inverts it exactly.
std::string to_text(const GradedPolynomial& p);
GradedPolynomial parse_polynomial(RingPtr ring, const std::string& text);

} // namespace wcycle
