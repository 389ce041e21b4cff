#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

/// Univariate polynomial with exact integer coefficients, lowest degree
/// first. No trailing zeros; the zero polynomial has an empty list.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<long long> coeffs);
    explicit Poly(std::vector<Int> coeffs);
    static Poly constant(Int c);
    static Poly monomial(const Int& c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Int(0); }
    const Int& leading() const { return c_.back(); }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator-() const;
    Poly operator*(const Poly& rhs) const;
    bool operator==(const Poly& rhs) const = default;

    Poly scaled(const Int& factor) const;

    /// Greatest common divisor of all coefficients (non-negative; 0 for the
    /// zero polynomial).
    Int content() const;

    /// Ascending-power rendering, e.g. "1 - z^2".
    std::string to_string(char var = 'z') const;

  private:
    void normalize();
    std::vector<Int> c_;
};

/// Exact quotient; throws std::logic_error when rhs does not divide lhs.
Poly exact_div(const Poly& lhs, const Poly& rhs);

/// GCD over the integers (content included), sign-normalized to a positive
/// leading coefficient. gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace voa
