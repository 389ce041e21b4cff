#include "voa/rational.hpp"

namespace voa {

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw SpecError("rational with zero denominator: " + text);
        return Rat(num, den);
    } catch (const SpecError&) {
        throw;
    } catch (const std::exception&) {
        throw SpecError("malformed rational: '" + text + "'");
    }
}

std::string format_rational(const Rat& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

Int ceil_rat(const Rat& value) {
    Int num = numerator(value);
    Int den = denominator(value);  // > 0
    Int q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

}  // namespace voa
