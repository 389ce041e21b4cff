#include "voa/ratfunc.hpp"

namespace voa {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly{1};
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
    if (rhs.is_zero()) throw DomainError("division by the zero rational function");
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of the zero rational function");
    return RationalFunction(den_, num_);
}

std::string RationalFunction::to_string(char var) const {
    Poly n = num_, d = den_;
    for (int k = 0; k <= d.degree(); ++k) {
        const Int c = d.coeff(k);
        if (c == 0) continue;
        if (c < 0) {
            n = -n;
            d = -d;
        }
        break;
    }
    return "(" + n.to_string(var) + ")/(" + d.to_string(var) + ")";
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    return a.num() * b.den() == b.num() * a.den();
}

Rat series_coeff(const RationalFunction& rf, unsigned n) {
    return series_prefix(rf, n + 1).back();
}

std::vector<Rat> series_prefix(const RationalFunction& rf, unsigned count) {
    const Int d0 = rf.den().coeff(0);
    if (d0 == 0) throw DomainError("series expansion requires den(0) != 0");
    std::vector<Rat> out;
    out.reserve(count);
    for (unsigned k = 0; k < count; ++k) {
        Rat acc = Rat(rf.num().coeff(static_cast<int>(k)));
        for (unsigned i = 1; i <= k; ++i)
            acc -= Rat(rf.den().coeff(static_cast<int>(i))) * out[k - i];
        out.push_back(acc / Rat(d0));
    }
    return out;
}

}  // namespace voa
