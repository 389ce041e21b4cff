#pragma once

#include <vector>

#include "voa/poly.hpp"

namespace voa {

/// Quotient of integer polynomials, kept canonical: gcd(num, den) = 1
/// (content included), positive leading coefficient on the denominator,
/// zero stored as 0/1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_{1} {}
    RationalFunction(Poly num, Poly den);
    static RationalFunction constant(const Int& c) {
        return RationalFunction(Poly::constant(c), Poly{1});
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;
    RationalFunction reciprocal() const;
    bool operator==(const RationalFunction& rhs) const = default;

    /// Render as "(num)/(den)", flipping both signs when that makes the
    /// denominator's lowest nonzero coefficient positive.
    std::string to_string(char var = 'z') const;

  private:
    Poly num_, den_;
};

/// Equality as rational functions: a.num * b.den == b.num * a.den.
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

/// Maclaurin coefficient of z^n by power-series long division.
/// Requires den(0) != 0.
Rat series_coeff(const RationalFunction& rf, unsigned n);

/// First `count` Maclaurin coefficients.
std::vector<Rat> series_prefix(const RationalFunction& rf, unsigned count);

}  // namespace voa
