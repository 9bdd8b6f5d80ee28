// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/hilbert.hpp"

#include <algorithm>
#include <map>

#include "wcycle/errors.hpp"
#include "wcycle/symmetric.hpp"

namespace wcycle {

namespace {

Rational evaluate_monomial(const Exponents& exps, const std::vector<Rational>& gap_values,
                           EvConvention convention) {
    // exps[0] is the psi exponent (dropped); exps[k] the exponent of L_k.
    Rational out = 1;
    for (std::size_t k = 1; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        Rational base = convention == EvConvention::complete
                            ? complete_value(gap_values, static_cast<int>(k))
                            : elementary_value(gap_values, static_cast<int>(k));
        for (int j = 0; j < exps[k]; ++j) out *= base;
    }
    return out;
}

} // namespace

RationalMatrix ev_matrix(int g, int degree, EvConvention convention) {
    if (degree < 0) throw argument_error("degree must be nonnegative");
    RingPtr ring = tautological_ring(g);
    std::vector<Exponents> rows = monomials_of_degree(*ring, degree);
    std::vector<NumericalSemigroup> semigroups = enumerate_semigroups(g, Exec::serial);
    std::vector<std::vector<Rational>> gap_values;
    for (const NumericalSemigroup& h : semigroups) {
        std::vector<Rational> values;
        for (int gap : h.gaps()) values.emplace_back(gap);
        gap_values.push_back(std::move(values));
    }
    RationalMatrix m(rows.size(), std::vector<Rational>(semigroups.size(), Rational(0)));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < semigroups.size(); ++c)
            m[r][c] = evaluate_monomial(rows[r], gap_values[c], convention);
    return m;
}

std::vector<long long> ev_image_hilbert(int g, int max_degree, EvConvention convention,
                                        Exec exec) {
    if (max_degree < 0) throw argument_error("degree cap must be nonnegative");
    std::vector<long long> out(max_degree + 1, 0);
    parallel_for(static_cast<std::size_t>(max_degree) + 1, exec, [&](std::size_t d) {
        out[d] = static_cast<long long>(rank(ev_matrix(g, static_cast<int>(d), convention)));
    });
    return out;
}

std::vector<Partition> vanishing_mus(int g, int max_weight, VanishingCriterion criterion) {
    if (g < 0) throw argument_error("genus must be nonnegative");
    if (max_weight < 0) throw argument_error("weight cap must be nonnegative");
    std::vector<VCSequence> sequences;
    for (const NumericalSemigroup& h : enumerate_semigroups(g, Exec::serial))
        sequences.push_back(VCSequence::of_semigroup(h));

    std::vector<Partition> out;
    for (int w = 1; w <= max_weight; ++w) {
        std::vector<Partition> level = partitions_of(w, g);
        std::sort(level.begin(), level.end());
        for (const Partition& mu : level) {
            VCSequence threshold = VCSequence::from_partition(g, mu);
            bool empty = true;
            for (const VCSequence& s : sequences) {
                bool related = criterion == VanishingCriterion::empty_ge ? leq(threshold, s)
                                                                        : leq(s, threshold);
                if (related) {
                    empty = false;
                    break;
                }
            }
            if (empty) out.push_back(mu);
        }
    }
    return out;
}

long long tautological_dim(int g, int degree) {
    return static_cast<long long>(monomials_of_degree(*tautological_ring(g), degree).size());
}

std::vector<long long> ideal_hilbert(int g, const std::vector<GradedPolynomial>& generators,
                                     int max_degree, Exec exec) {
    if (max_degree < 0) throw argument_error("degree cap must be nonnegative");
    RingPtr ring = tautological_ring(g);
    for (const GradedPolynomial& f : generators) {
        if (!f.ring()->same_as(*ring))
            throw argument_error("ideal generator lives in a different ring");
        if (!f.is_homogeneous())
            throw argument_error("ideal generators must be homogeneous");
    }

    std::vector<long long> out(max_degree + 1, 0);
    parallel_for(static_cast<std::size_t>(max_degree) + 1, exec, [&](std::size_t dd) {
        int d = static_cast<int>(dd);
        std::vector<Exponents> basis = monomials_of_degree(*ring, d);
        std::map<Exponents, std::size_t> column_of;
        for (std::size_t i = 0; i < basis.size(); ++i) column_of.emplace(basis[i], i);

        RationalMatrix rows;
        for (const GradedPolynomial& f : generators) {
            if (f.is_zero()) continue;
            int e = f.degree();
            if (e > d) continue;
            for (const Exponents& m : monomials_of_degree(*ring, d - e)) {
                GradedPolynomial shifted = f * GradedPolynomial::monomial(ring, m, 1);
                std::vector<Rational> row(basis.size(), Rational(0));
                for (const auto& [exps, coeff] : shifted.terms()) row[column_of.at(exps)] = coeff;
                rows.push_back(std::move(row));
            }
        }
        long long dim = static_cast<long long>(basis.size());
        out[dd] = rows.empty() ? dim : dim - static_cast<long long>(rank(std::move(rows)));
    });
    return out;
}

std::vector<CalibrationRow> calibrate_series(const std::vector<long long>& computed,
                                             const std::vector<long long>& reference) {
    std::vector<CalibrationRow> out;
    for (std::size_t d = 0; d < computed.size(); ++d) {
        CalibrationRow row;
        row.degree = static_cast<int>(d);
        row.computed = computed[d];
        row.reference = d < reference.size() ? reference[d] : 0;
        row.match = row.computed == row.reference;
        out.push_back(row);
    }
    return out;
}

} // namespace wcycle
