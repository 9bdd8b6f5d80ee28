// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/render.hpp"

#include <cctype>
#include <sstream>

namespace wcycle {

namespace {

bool split_stem(const std::string& name, std::string& stem, std::string& digits) {
    std::size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
    if (i == name.size() || i == 0) return false;
    stem = name.substr(0, i);
    digits = name.substr(i);
    return true;
}

} // namespace

std::string display_variable(const std::string& name, Format format, bool ascii) {
    std::string stem, digits;
    bool numbered = split_stem(name, stem, digits);
    if (format == Format::latex) {
        if (name == "psi") return "\\psi";
        if (numbered && stem == "L") return "\\lambda_{" + digits + "}";
        if (numbered) return stem + "_{" + digits + "}";
        return name;
    }
    if (ascii) return name;
    if (name == "psi") return "ψ";
    if (numbered && stem == "L") return "λ_" + digits;
    return name;
}

std::string render_polynomial(const GradedPolynomial& p, Format format, bool ascii) {
    if (format == Format::text && ascii) return to_text(p);
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c;
        bool negative = a < 0;
        if (negative) a = -a;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else if (format == Format::latex) {
            os << (negative ? "-" : "+");
        } else {
            os << (negative ? " - " : " + ");
        }
        bool has_vars = false;
        for (int x : e)
            if (x > 0) has_vars = true;
        if (!has_vars || a != 1) os << to_string(a);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << display_variable(p.ring()->variables()[i], format, ascii);
            if (e[i] > 1) {
                if (format == Format::latex)
                    os << "^{" << e[i] << "}";
                else
                    os << "^" << e[i];
            }
        }
    }
    return os.str();
}

} // namespace wcycle
