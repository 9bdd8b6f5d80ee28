// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "wcycle/polynomial.hpp"

namespace wcycle {

// Human-facing output styles.  (JSON output is assembled by the command-line
// tool from the structured data directly.)
enum class Format { text, latex };

// Display form of a canonical variable name:
//  - "psi" renders as the Greek letter (or "psi" in ascii mode, "\psi" in
//    LaTeX);
//  - "L<k>" renders as lambda with subscript k;
//  - any other name of the shape <stem><digits> gains a subscript in LaTeX
//    and stays as-is otherwise.
std::string display_variable(const std::string& name, Format format, bool ascii);

// Renders a polynomial with terms in canonical order.  In ascii text mode the
// output coincides with the canonical parseable form (to_text); otherwise
// factors are juxtaposed without '*' signs.
std::string render_polynomial(const GradedPolynomial& p, Format format, bool ascii);

} // namespace wcycle
