#include "voa/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace voa {

Poly::Poly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) c_.emplace_back(c);
    normalize();
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(Int c) {
    Poly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(const Int& c, int degree) {
    Poly p;
    if (c != 0) {
        p.c_.assign(degree + 1, Int(0));
        p.c_[degree] = c;
    }
    return p;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<Int> out(std::max(c_.size(), rhs.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly();
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const Int& factor) const {
    if (factor == 0) return Poly();
    Poly out = *this;
    for (auto& c : out.c_) c *= factor;
    return out;
}

Int Poly::content() const {
    Int g = 0;
    for (const auto& c : c_) g = gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Int& c = c_[k];
        if (c == 0) continue;
        const Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Poly exact_div(const Poly& lhs, const Poly& rhs) {
    if (rhs.is_zero()) throw std::logic_error("polynomial division by zero");
    if (lhs.is_zero()) return Poly();
    if (lhs.degree() < rhs.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<Int> rem = lhs.coeffs();
    std::vector<Int> quot(lhs.degree() - rhs.degree() + 1, Int(0));
    for (int k = lhs.degree() - rhs.degree(); k >= 0; --k) {
        const Int& top = rem[k + rhs.degree()];
        if (top == 0) continue;
        if (top % rhs.leading() != 0) throw std::logic_error("inexact polynomial division");
        const Int q = top / rhs.leading();
        quot[k] = q;
        for (int i = 0; i <= rhs.degree(); ++i) rem[k + i] -= q * rhs.coeff(i);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("inexact polynomial division");
    return Poly(std::move(quot));
}

namespace {

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Poly out = exact_div(p, Poly::constant(p.content()));
    if (out.leading() < 0) out = -out;
    return out;
}

// Pseudo-remainder of a by b (lc(b)^k * a mod b).
Poly pseudo_rem(Poly a, const Poly& b) {
    const Int& lead = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        const Poly t = Poly::monomial(a.leading(), shift);
        a = a.scaled(lead) - t * b;
    }
    return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    const Int content = gcd(a.content(), b.content());
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        Poly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return Poly::constant(content);
    Poly out = a.scaled(content == 0 ? Int(1) : content);
    if (!out.is_zero() && out.leading() < 0) out = -out;
    return out;
}

}  // namespace voa
