// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wcycle/polynomial.hpp"
#include "wcycle/sequence.hpp"

namespace wcycle {

// Rings used for symmetric function computations in n variables:
//  - root ring: x1..xn, all of weight 1;
//  - elementary ring: e1..en with weight(e_k) = k;
//  - complete ring: h1..hn with weight(h_k) = k.
RingPtr root_ring(int n);
RingPtr elementary_ring(int n);
RingPtr complete_ring(int n);

// e_k and h_k as explicit polynomials in the root ring (k = 0 gives 1; e_k
// vanishes for k > n).
GradedPolynomial elementary_polynomial(int n, int k);
GradedPolynomial complete_polynomial(int n, int k);

// Monomial symmetric polynomial m_mu in n variables (0 when mu has more than
// n parts).
GradedPolynomial monomial_symmetric(const Partition& mu, int n);

// Invariance under adjacent variable swaps: checked exhaustively for up to 4
// variables and on a fixed sample of swaps for more.
bool is_symmetric(const GradedPolynomial& p);

// Rewrites a symmetric polynomial in the root ring as a polynomial in the
// elementary symmetric polynomials, by repeatedly eliminating the leading
// monomial.  Throws symmetry_error when the input is not symmetric.
GradedPolynomial to_elementary(const GradedPolynomial& p);

// Expands a polynomial in the elementary ring back into the root ring.
GradedPolynomial from_elementary(const GradedPolynomial& p, int n);

// h_k written in the elementary ring via the Newton-style recursion
// h_k = sum_{i=1..k} (-1)^(i-1) e_i h_{k-i}.
GradedPolynomial complete_in_elementary(int n, int k);

// The involution omega on the elementary ring: the algebra map e_k -> h_k
// (with h_k expressed in the e's).  It is an involution and sends the Schur
// polynomial s_mu to s_mu' (conjugate partition).
GradedPolynomial omega(const GradedPolynomial& p);

// Schur polynomial s_mu(x1..xn) via the Jacobi-Trudi determinant
// det[h_{mu_i - i + j}].
GradedPolynomial schur(const Partition& mu, int n);

// Values of e_k and h_k at a rational point, by dynamic programming.
Rational elementary_value(const std::vector<Rational>& values, int k);
Rational complete_value(const std::vector<Rational>& values, int k);

} // namespace wcycle
