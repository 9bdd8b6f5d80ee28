// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/symmetric.hpp"

#include <algorithm>
#include <string>

#include "wcycle/errors.hpp"
#include "wcycle/matrix.hpp"

namespace wcycle {

namespace {

std::vector<std::string> numbered(const std::string& stem, int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

} // namespace

RingPtr root_ring(int n) {
    if (n < 0) throw argument_error("variable count must be nonnegative");
    return Ring::make_standard(numbered("x", n));
}

RingPtr elementary_ring(int n) {
    if (n < 0) throw argument_error("variable count must be nonnegative");
    std::vector<int> weights(n);
    for (int k = 1; k <= n; ++k) weights[k - 1] = k;
    return Ring::make(numbered("e", n), weights);
}

RingPtr complete_ring(int n) {
    if (n < 0) throw argument_error("variable count must be nonnegative");
    std::vector<int> weights(n);
    for (int k = 1; k <= n; ++k) weights[k - 1] = k;
    return Ring::make(numbered("h", n), weights);
}

GradedPolynomial elementary_polynomial(int n, int k) {
    RingPtr ring = root_ring(n);
    if (k < 0) throw argument_error("symmetric function index must be nonnegative");
    if (k == 0) return GradedPolynomial::constant(ring, 1);
    GradedPolynomial out(ring);
    if (k > n) return out;
    // All squarefree monomials of degree k.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Exponents e(n, 0);
        for (int i : pick) e[i] = 1;
        out.add_term(e, 1);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

GradedPolynomial complete_polynomial(int n, int k) {
    RingPtr ring = root_ring(n);
    if (k < 0) throw argument_error("symmetric function index must be nonnegative");
    GradedPolynomial out(ring);
    if (n == 0) return k == 0 ? GradedPolynomial::constant(ring, 1) : out;
    // All monomials of degree k, each with coefficient 1.
    for (const Exponents& e : monomials_of_degree(*ring, k)) out.add_term(e, 1);
    return out;
}

GradedPolynomial monomial_symmetric(const Partition& mu, int n) {
    RingPtr ring = root_ring(n);
    if (!is_partition(mu)) throw argument_error("not a partition");
    if (mu.empty()) return GradedPolynomial::constant(ring, 1);
    GradedPolynomial out(ring);
    if (static_cast<int>(mu.size()) > n) return out;
    Exponents e(n, 0);
    for (std::size_t i = 0; i < mu.size(); ++i) e[i] = mu[i];
    std::sort(e.begin(), e.end());
    // Distinct permutations of the exponent multiset.
    do {
        out.add_term(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

namespace {

GradedPolynomial swap_variables(const GradedPolynomial& p, std::size_t i, std::size_t j) {
    GradedPolynomial out(p.ring());
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        std::swap(f[i], f[j]);
        out.add_term(f, c);
    }
    return out;
}

} // namespace

bool is_symmetric(const GradedPolynomial& p) {
    std::size_t n = p.ring()->size();
    if (n <= 1) return true;
    std::vector<std::size_t> swaps;
    if (n <= 4) {
        for (std::size_t i = 0; i + 1 < n; ++i) swaps.push_back(i);
    } else {
        swaps = {0, n / 2 - 1, n - 2};
    }
    for (std::size_t i : swaps)
        if (swap_variables(p, i, i + 1) != p) return false;
    return true;
}

GradedPolynomial to_elementary(const GradedPolynomial& p) {
    int n = static_cast<int>(p.ring()->size());
    RingPtr e_ring = elementary_ring(n);
    if (!is_symmetric(p))
        throw symmetry_error("polynomial is not symmetric in its root variables");

    // Precompute e_1..e_n once.
    std::vector<GradedPolynomial> elem;
    for (int k = 1; k <= n; ++k) elem.push_back(elementary_polynomial(n, k));

    GradedPolynomial result(e_ring);
    for (auto& entry : p.homogeneous_components()) {
        GradedPolynomial f = entry.second;
        while (!f.is_zero()) {
            auto [exps, coeff] = f.leading_term();
            for (std::size_t i = 1; i < exps.size(); ++i)
                if (exps[i] > exps[i - 1])
                    throw symmetry_error(
                        "leading monomial is not dominant; polynomial is not symmetric");
            Exponents e_exps(n, 0);
            GradedPolynomial reduction = GradedPolynomial::constant(p.ring(), coeff);
            for (int k = 1; k <= n; ++k) {
                int d = exps[k - 1] - (k < n ? exps[k] : 0);
                e_exps[k - 1] = d;
                if (d > 0) reduction *= elem[k - 1].pow(static_cast<unsigned>(d));
            }
            result.add_term(e_exps, coeff);
            f -= reduction;
        }
    }
    return result;
}

GradedPolynomial from_elementary(const GradedPolynomial& p, int n) {
    if (static_cast<int>(p.ring()->size()) != n)
        throw argument_error("elementary-ring polynomial does not match variable count");
    std::vector<GradedPolynomial> images;
    for (int k = 1; k <= n; ++k) images.push_back(elementary_polynomial(n, k));
    return p.substitute(images);
}

GradedPolynomial complete_in_elementary(int n, int k) {
    RingPtr e_ring = elementary_ring(n);
    if (k < 0) throw argument_error("symmetric function index must be nonnegative");
    std::vector<GradedPolynomial> h{GradedPolynomial::constant(e_ring, 1)};
    for (int m = 1; m <= k; ++m) {
        GradedPolynomial sum(e_ring);
        for (int i = 1; i <= m && i <= n; ++i) { // e_i = 0 beyond n variables
            GradedPolynomial term = GradedPolynomial::variable(e_ring, i - 1) * h[m - i];
            if (i % 2 == 1)
                sum += term;
            else
                sum -= term;
        }
        h.push_back(sum);
    }
    return h[k];
}

GradedPolynomial omega(const GradedPolynomial& p) {
    int n = static_cast<int>(p.ring()->size());
    std::vector<GradedPolynomial> images;
    for (int k = 1; k <= n; ++k) images.push_back(complete_in_elementary(n, k));
    return p.substitute(images);
}

GradedPolynomial schur(const Partition& mu, int n) {
    RingPtr ring = root_ring(n);
    if (!is_partition(mu)) throw argument_error("not a partition");
    if (mu.empty()) return GradedPolynomial::constant(ring, 1);
    std::size_t parts = mu.size();
    PolynomialMatrix m(parts, std::vector<GradedPolynomial>(parts, GradedPolynomial::zero(ring)));
    for (std::size_t i = 0; i < parts; ++i) {
        for (std::size_t j = 0; j < parts; ++j) {
            int index = mu[i] - static_cast<int>(i) + static_cast<int>(j);
            if (index >= 0) m[i][j] = complete_polynomial(n, index);
        }
    }
    return determinant(m);
}

Rational elementary_value(const std::vector<Rational>& values, int k) {
    if (k < 0) throw argument_error("symmetric function index must be nonnegative");
    if (k > static_cast<int>(values.size())) return 0;
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = 1;
    for (const Rational& v : values)
        for (int m = k; m >= 1; --m) e[m] += v * e[m - 1];
    return e[k];
}

Rational complete_value(const std::vector<Rational>& values, int k) {
    if (k < 0) throw argument_error("symmetric function index must be nonnegative");
    std::vector<Rational> h(k + 1, Rational(0));
    h[0] = 1;
    for (const Rational& v : values)
        for (int m = 1; m <= k; ++m) h[m] += v * h[m - 1];
    return h[k];
}

} // namespace wcycle
