// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

#include "wcycle/errors.hpp"

namespace wcycle {

// Exact rational scalar.  All arithmetic in the library is performed over the
// rationals with arbitrary-precision integer parts; no floating point is used
// anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// Renders a rational in canonical lowest-terms form: "p" when the denominator
// is 1, otherwise "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "p" or "p/q" (optionally signed) into a canonical rational.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw argument_error("empty rational literal");
    try {
        Rational r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw argument_error("malformed rational literal: '" + text + "'");
    }
}

// True when the rational is an integer.
inline bool is_integer(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_den() == 1;
}

// Converts an integral rational to long; throws if not integral or out of range.
inline long to_long(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() != 1) throw argument_error("rational " + to_string(r) + " is not an integer");
    if (!c.get_num().fits_slong_p())
        throw argument_error("integer " + to_string(r) + " does not fit in long");
    return c.get_num().get_si();
}

} // namespace wcycle
