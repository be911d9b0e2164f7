#include "ptcurves/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "ptcurves/errors.hpp"

namespace ptcurves {

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw UsageError("malformed rational '" + text + "'");
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_decimal17(double v) {
    // std::to_chars is locale independent.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string to_decimal17(const Rational& r) { return to_decimal17(to_double(r)); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow(const Rational& r, unsigned k) {
    return Rational(boost::multiprecision::pow(numerator(r), k), boost::multiprecision::pow(denominator(r), k));
}

BigInt pow(const BigInt& b, unsigned k) { return boost::multiprecision::pow(b, k); }

} // namespace ptcurves
