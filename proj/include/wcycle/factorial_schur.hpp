// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "wcycle/polynomial.hpp"
#include "wcycle/semigroup.hpp"
#include "wcycle/sequence.hpp"
#include "wcycle/symmetric.hpp"

namespace wcycle {

// Falling factorial (p)(p-1)...(p-k+1); k = 0 gives 1.
GradedPolynomial falling_factorial(const GradedPolynomial& p, int k);
Rational falling_factorial(const Rational& value, int k);

// Factorial Schur polynomial in n root variables: the exact quotient
//   det[ (x_i falling to mu_j + n - j) ] / det[ (x_i falling to n - j) ].
// The partition may have at most n parts.  The quotient is a symmetric
// polynomial whose top homogeneous part is the classical Schur polynomial.
GradedPolynomial factorial_schur(const Partition& mu, int n);

// Homogeneous components (by degree) of the factorial Schur polynomial with
// every variable shifted by one, i.e. of t_mu(x1-1, ..., xg-1).
std::map<int, GradedPolynomial> shifted_components(const Partition& mu, int g);

// The graded polynomial ring the cycle classes live in: psi of weight 1 and
// L1..Lg with weight(Lk) = k (rendered as psi and lambda_k).
RingPtr tautological_ring(int g);

// An equivariant cycle class attached to a partition: a homogeneous element
// of weight |mu| in the tautological ring.
struct CycleClass {
    int genus = 0;
    Partition mu;
    GradedPolynomial poly;
};

// Builds the class: with T^i the degree-i component of the shifted factorial
// Schur polynomial, the class is
//   (-1)^|mu| * sum_i  omega(T^i in elementary form) |_{e_k -> L_k} * psi^(|mu|-i).
// Homogeneous of weight |mu|; its pure-psi coefficient is a positive integer
// and its psi-free part is (-1)^|mu| times the Schur polynomial of the
// conjugate partition in the L variables.
CycleClass cycle_class(const Partition& mu, int g);

// Restriction to the fixed point labelled by a numerical semigroup: the
// substitution L_k -> h_k(gaps) * psi^k.  The result is a multiple of
// psi^|mu| in the tautological ring.
GradedPolynomial restrict_cycle_class(const CycleClass& cls, const NumericalSemigroup& h);

// Same restriction computed without expanding the class: evaluates the
// shifted factorial Schur polynomial at the gap values and scales psi^|mu|.
// Agrees with restrict_cycle_class at every fixed point.
GradedPolynomial restrict_via_values(const Partition& mu, const NumericalSemigroup& h);

// Vanishing criterion: the restriction at h vanishes exactly when the
// semigroup's sequence does not dominate the sequence of mu.
bool restriction_vanishes(const Partition& mu, const NumericalSemigroup& h);

} // namespace wcycle
