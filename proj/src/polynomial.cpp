// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wcycle/errors.hpp"

namespace wcycle {

Ring::Ring(std::vector<std::string> vars, std::vector<int> weights)
    : vars_(std::move(vars)), weights_(std::move(weights)) {}

RingPtr Ring::make(std::vector<std::string> variables, std::vector<int> weights) {
    if (variables.size() != weights.size())
        throw argument_error("ring variable and weight lists differ in length");
    for (int w : weights)
        if (w <= 0) throw argument_error("ring weights must be positive");
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].empty()) throw argument_error("ring variable names must be nonempty");
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                throw argument_error("duplicate ring variable name: " + variables[i]);
    }
    return std::shared_ptr<const Ring>(new Ring(std::move(variables), std::move(weights)));
}

RingPtr Ring::make_standard(std::vector<std::string> variables) {
    std::vector<int> weights(variables.size(), 1);
    return make(std::move(variables), std::move(weights));
}

std::size_t Ring::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw argument_error("unknown ring variable: " + name);
}

bool Ring::has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool Ring::same_as(const Ring& other) const {
    return this == &other || (vars_ == other.vars_ && weights_ == other.weights_);
}

int weighted_degree(const Ring& ring, const Exponents& e) {
    if (e.size() != ring.size())
        throw argument_error("exponent vector length does not match ring");
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += ring.weights()[i] * e[i];
    return d;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    // true iff a precedes b, i.e. a is the larger term.
    long da = 0, db = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        da += static_cast<long>(weights[i]) * a[i];
        db += static_cast<long>(weights[i]) * b[i];
    }
    if (da != db) return da > db;
    return a > b;
}

namespace {

void require_same_ring(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (!a.ring()->same_as(*b.ring()))
        throw argument_error("polynomials live in different rings");
}

} // namespace

GradedPolynomial::GradedPolynomial(RingPtr ring)
    : ring_(std::move(ring)), terms_(TermOrder{ring_->weights()}) {
    if (!ring_) throw argument_error("polynomial requires a ring");
}

GradedPolynomial GradedPolynomial::zero(RingPtr ring) { return GradedPolynomial(std::move(ring)); }

GradedPolynomial GradedPolynomial::constant(RingPtr ring, const Rational& value) {
    GradedPolynomial p(std::move(ring));
    p.add_term(Exponents(p.ring_->size(), 0), value);
    return p;
}

GradedPolynomial GradedPolynomial::variable(RingPtr ring, std::size_t index) {
    GradedPolynomial p(std::move(ring));
    if (index >= p.ring_->size()) throw argument_error("variable index out of range");
    Exponents e(p.ring_->size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

GradedPolynomial GradedPolynomial::monomial(RingPtr ring, Exponents exps, const Rational& coeff) {
    GradedPolynomial p(std::move(ring));
    if (exps.size() != p.ring_->size())
        throw argument_error("exponent vector length does not match ring");
    for (int e : exps)
        if (e < 0) throw argument_error("monomial exponents must be nonnegative");
    p.add_term(exps, coeff);
    return p;
}

bool GradedPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int GradedPolynomial::degree() const {
    if (terms_.empty()) return -1;
    // Leading term has maximal weighted degree by the term order.
    return weighted_degree(*ring_, terms_.begin()->first);
}

bool GradedPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = weighted_degree(*ring_, terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (weighted_degree(*ring_, e) != d) return false;
    return true;
}

GradedPolynomial GradedPolynomial::homogeneous_component(int d) const {
    GradedPolynomial out(ring_);
    for (const auto& [e, c] : terms_)
        if (weighted_degree(*ring_, e) == d) out.add_term(e, c);
    return out;
}

std::map<int, GradedPolynomial> GradedPolynomial::homogeneous_components() const {
    std::map<int, GradedPolynomial> out;
    for (const auto& [e, c] : terms_) {
        int d = weighted_degree(*ring_, e);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, GradedPolynomial(ring_)).first;
        it->second.add_term(e, c);
    }
    return out;
}

Rational GradedPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Exponents, Rational> GradedPolynomial::leading_term() const {
    if (terms_.empty()) throw argument_error("zero polynomial has no leading term");
    return *terms_.begin();
}

void GradedPolynomial::add_term(const Exponents& e, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& rhs) {
    require_same_ring(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& rhs) {
    require_same_ring(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& rhs) const {
    GradedPolynomial out(*this);
    out += rhs;
    return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& rhs) const {
    GradedPolynomial out(*this);
    out -= rhs;
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& rhs) const {
    require_same_ring(*this, rhs);
    GradedPolynomial out(ring_);
    Exponents e(ring_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

GradedPolynomial& GradedPolynomial::operator*=(const GradedPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

GradedPolynomial GradedPolynomial::operator*(const Rational& scalar) const {
    GradedPolynomial out(ring_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
    return out;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& scalar) {
    *this = *this * scalar;
    return *this;
}

GradedPolynomial GradedPolynomial::pow(unsigned exponent) const {
    GradedPolynomial out = constant(ring_, 1);
    GradedPolynomial base(*this);
    unsigned k = exponent;
    while (k > 0) {
        if (k & 1u) out *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return out;
}

bool GradedPolynomial::operator==(const GradedPolynomial& rhs) const {
    if (!ring_->same_as(*rhs.ring_)) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

GradedPolynomial GradedPolynomial::exact_divide(const GradedPolynomial& divisor) const {
    require_same_ring(*this, divisor);
    if (divisor.is_zero()) throw argument_error("division by the zero polynomial");
    GradedPolynomial remainder(*this);
    GradedPolynomial quotient(ring_);
    const auto [dexp, dcoeff] = divisor.leading_term();
    while (!remainder.is_zero()) {
        const auto [rexp, rcoeff] = remainder.leading_term();
        Exponents q(rexp.size());
        for (std::size_t i = 0; i < rexp.size(); ++i) {
            q[i] = rexp[i] - dexp[i];
            if (q[i] < 0)
                throw divisibility_error("polynomial division is not exact");
        }
        GradedPolynomial t = monomial(ring_, q, rcoeff / dcoeff);
        quotient += t;
        remainder -= t * divisor;
    }
    return quotient;
}

GradedPolynomial GradedPolynomial::substitute(const std::vector<GradedPolynomial>& images) const {
    if (images.size() != ring_->size())
        throw argument_error("substitution requires one image per variable");
    for (const auto& img : images)
        if (!img.ring()->same_as(*images.front().ring()))
            throw argument_error("substitution images live in different rings");
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    GradedPolynomial out(target);
    for (const auto& [e, c] : terms_) {
        GradedPolynomial term = GradedPolynomial::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term *= images[i].pow(static_cast<unsigned>(e[i]));
        out += term;
    }
    return out;
}

GradedPolynomial GradedPolynomial::substitute_variable(std::size_t index,
                                                       const GradedPolynomial& image) const {
    if (index >= ring_->size()) throw argument_error("variable index out of range");
    if (!image.ring()->same_as(*ring_))
        throw argument_error("substitution image lives in a different ring");
    GradedPolynomial out(ring_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        int k = rest[index];
        rest[index] = 0;
        GradedPolynomial term = monomial(ring_, rest, c);
        if (k > 0) term *= image.pow(static_cast<unsigned>(k));
        out += term;
    }
    return out;
}

Rational GradedPolynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->size())
        throw argument_error("evaluation requires one value per variable");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

namespace {

void enumerate_monomials(const Ring& ring, std::size_t index, int remaining, Exponents& current,
                         std::vector<Exponents>& out) {
    if (index == ring.size()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    int w = ring.weights()[index];
    for (int e = remaining / w; e >= 0; --e) {
        current[index] = e;
        enumerate_monomials(ring, index + 1, remaining - e * w, current, out);
    }
    current[index] = 0;
}

} // namespace

std::vector<Exponents> monomials_of_degree(const Ring& ring, int d) {
    if (d < 0) throw argument_error("monomial degree must be nonnegative");
    std::vector<Exponents> out;
    Exponents current(ring.size(), 0);
    enumerate_monomials(ring, 0, d, current, out);
    TermOrder order{ring.weights()};
    std::sort(out.begin(), out.end(), order);
    return out;
}

std::string to_text(const GradedPolynomial& p) {
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
        } else {
            os << (negative ? " - " : " + ");
        }
        bool has_vars = false;
        for (int x : e)
            if (x > 0) has_vars = true;
        bool wrote_coeff = false;
        if (!has_vars || a != 1) {
            os << to_string(a);
            wrote_coeff = true;
        }
        bool first_var = !wrote_coeff;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << p.ring()->variables()[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    RingPtr ring;
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string read_number() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw argument_error("expected a number at position " +
                                               std::to_string(start) + " in '" + text + "'");
        std::string digits = text.substr(start, pos - start);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) throw argument_error("malformed rational in '" + text + "'");
            digits += "/" + text.substr(dstart, pos - dstart);
        }
        return digits;
    }

    std::string read_identifier() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw argument_error("expected a variable at position " +
                                               std::to_string(start) + " in '" + text + "'");
        return text.substr(start, pos - start);
    }

    // One term: [coefficient] [* var[^k]]* with optional leading coefficient.
    GradedPolynomial read_term(bool negate) {
        Rational coeff = 1;
        Exponents exps(ring->size(), 0);
        bool expect_factor = true;
        bool saw_factor = false;
        while (expect_factor) {
            skip_space();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff *= rational_from_string(read_number());
            } else {
                std::string name = read_identifier();
                std::size_t idx = ring->index_of(name);
                int k = 1;
                skip_space();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    k = static_cast<int>(to_long(rational_from_string(read_number())));
                    if (k < 0) throw argument_error("negative exponent in '" + text + "'");
                }
                exps[idx] += k;
            }
            saw_factor = true;
            skip_space();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw argument_error("empty term in '" + text + "'");
        if (negate) coeff = -coeff;
        return GradedPolynomial::monomial(ring, exps, coeff);
    }
};

} // namespace

GradedPolynomial parse_polynomial(RingPtr ring, const std::string& text) {
    Parser parser{ring, text};
    GradedPolynomial out(ring);
    if (parser.at_end()) throw argument_error("empty polynomial text");
    bool negate = false;
    char c = parser.peek();
    if (c == '-') {
        negate = true;
        ++parser.pos;
    } else if (c == '+') {
        ++parser.pos;
    }
    out += parser.read_term(negate);
    while (!parser.at_end()) {
        char op = parser.peek();
        if (op == '+') {
            ++parser.pos;
            out += parser.read_term(false);
        } else if (op == '-') {
            ++parser.pos;
            out += parser.read_term(true);
        } else {
            throw argument_error("unexpected character '" + std::string(1, op) + "' in '" + text +
                                 "'");
        }
    }
    return out;
}

} // namespace wcycle
