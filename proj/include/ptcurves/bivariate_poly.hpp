#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptcurves/prime_field.hpp"

namespace ptcurves {

/// Dense univariate polynomial c_0 + c_1 y + ... + c_m y^m over F_p.
/// Trailing zeros are trimmed on construction; the zero polynomial has no
/// coefficients and degree -1.
class UnivariatePoly {
public:
    UnivariatePoly(const PrimeModulus& mod, std::vector<u64> coeffs);

    const PrimeModulus& modulus() const noexcept { return mod_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    u64 leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    u64 eval(u64 y) const noexcept;

    friend bool operator==(const UnivariatePoly& l, const UnivariatePoly& r) noexcept {
        return l.mod_ == r.mod_ && l.c_ == r.c_;
    }

private:
    PrimeModulus mod_;
    std::vector<u64> c_;
};

struct Root {
    u64 value;
    int multiplicity;
    friend bool operator==(const Root&, const Root&) = default;
};

enum class RootMethod {
    kAuto,  // scan for small p, gcd/splitting otherwise
    kScan,  // evaluate at every y in F_p
    kFast,  // gcd(g, y^p - y) then equal-degree splitting
};

/// Below this modulus kAuto scans.
inline constexpr u64 kScanThreshold = 4096;

/// All roots in F_p, ascending, with multiplicities from repeated synthetic
/// division. Throws DomainError("identically zero fiber") for g = 0.
std::vector<Root> univariate_roots(const UnivariatePoly& g, RootMethod method = RootMethod::kAuto);

/// deg gcd(g, y^p - y), the number of distinct roots in F_p.
int distinct_root_count(const UnivariatePoly& g);

/// Number of times (y - r) divides g.
int root_multiplicity(const UnivariatePoly& g, u64 r);

/// Sparse bivariate polynomial over F_p keyed by (x-exponent, y-exponent).
class BivariatePoly {
public:
    using Monomial = std::pair<int, int>;

    /// Drops zero coefficients. Throws UsageError when every coefficient is
    /// zero or an exponent is negative.
    BivariatePoly(const PrimeModulus& mod, std::map<Monomial, u64> coeffs);

    const PrimeModulus& modulus() const noexcept { return mod_; }
    const std::map<Monomial, u64>& terms() const noexcept { return coeffs_; }
    int total_degree() const noexcept { return total_degree_; }
    int y_degree() const noexcept { return y_degree_; }
    int x_degree() const noexcept { return x_degree_; }

    u64 coefficient(int i, int j) const;

    /// Raw-word evaluation; x and y must already be reduced.
    u64 eval(u64 x, u64 y) const noexcept;

    /// Coefficients of f(x0, y) as raw words, length y_degree + 1 (untrimmed).
    void specialize_x(u64 x0, std::vector<u64>& out) const;

    /// Canonical text form, e.g. "1*x^1*y^1 + 6".
    std::string to_text() const;

    friend bool operator==(const BivariatePoly& l, const BivariatePoly& r) noexcept {
        return l.mod_ == r.mod_ && l.coeffs_ == r.coeffs_;
    }

private:
    PrimeModulus mod_;
    std::map<Monomial, u64> coeffs_;
    // by_y_[j][i] = coefficient of x^i y^j, dense in i, for Horner evaluation.
    std::vector<std::vector<u64>> by_y_;
    int total_degree_ = 0;
    int y_degree_ = 0;
    int x_degree_ = 0;
};

/// f(x, y) at a point, Horner in y with Horner-in-x coefficients.
FieldElement poly_eval(const BivariatePoly& f, const FieldElement& x, const FieldElement& y);

/// g(y) = f(x0, y).
UnivariatePoly substitute_x(const BivariatePoly& f, const FieldElement& x0);

/// f(a x + b, y_i): a polynomial in x and a single relabeled y-variable.
struct ShiftedPoly {
    BivariatePoly poly;  // second variable is y_{y_index}
    int y_index;
};

/// Throws DomainError when a = 0.
ShiftedPoly shift_substitute(const BivariatePoly& f, const FieldElement& a, const FieldElement& b,
                             int target_y_index);

/// Parses "c*x^i*y^j + ..." (terms may omit the coefficient or exponents,
/// '-' is accepted as a separator as well). Coefficients are reduced mod p.
/// Throws UsageError with the line/column of the first offending character.
BivariatePoly parse_poly(const PrimeModulus& mod, std::string_view text);

namespace upoly {

// Raw dense-vector helpers shared by the root finders. Vectors are trimmed.
using Coeffs = std::vector<u64>;

void trim(Coeffs& a);
Coeffs mul(const PrimeModulus& m, const Coeffs& a, const Coeffs& b);
/// Remainder of a modulo nonzero b.
Coeffs rem(const PrimeModulus& m, Coeffs a, const Coeffs& b);
/// Quotient and remainder of a by nonzero b.
std::pair<Coeffs, Coeffs> divrem(const PrimeModulus& m, Coeffs a, const Coeffs& b);
Coeffs make_monic(const PrimeModulus& m, Coeffs a);
Coeffs gcd(const PrimeModulus& m, Coeffs a, Coeffs b);
/// base^e mod modulus.
Coeffs powmod(const PrimeModulus& m, Coeffs base, u64 e, const Coeffs& modulus);

} // namespace upoly

} // namespace ptcurves
