#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ptcurves/bivariate_poly.hpp"
#include "ptcurves/interval.hpp"

namespace ptcurves {

/// The affine plane curve f(x, y) = 0 over F_p. Requires deg_y f >= 1.
class PlaneCurve {
public:
    explicit PlaneCurve(BivariatePoly f);
    static PlaneCurve parse(const PrimeModulus& mod, std::string_view text);

    const BivariatePoly& poly() const noexcept { return f_; }
    const PrimeModulus& modulus() const noexcept { return f_.modulus(); }
    u64 p() const noexcept { return f_.modulus().value(); }
    int degree() const noexcept { return f_.total_degree(); }
    int y_degree() const noexcept { return f_.y_degree(); }

    UnivariatePoly fiber_poly(u64 x0) const;

    /// Roots of f(x0, y). Throws DomainError("vertical line component") when
    /// f(x0, y) vanishes identically.
    std::vector<Root> fiber_roots(u64 x0, RootMethod method = RootMethod::kAuto) const;

private:
    BivariatePoly f_;
};

/// #{y in J : f(x0, y) = 0}.
int fiber_count(const PlaneCurve& c, const FieldElement& x0, const CyclicInterval& j);

struct RamificationReport {
    std::vector<u64> ramified_x;
    /// Only F_p-rational x were searched; an empty list does not rule out
    /// a totally ramified point over an extension.
    bool fp_only = true;
};

/// Every x0 in F_p whose fiber is lc * (y - y0)^deg_y f.
RamificationReport find_completely_ramified(const PlaneCurve& c, int threads = 0);

struct ConditionOneResult {
    bool holds = true;
    /// Least violating x and two distinct y in J on its fiber.
    std::optional<u64> x;
    u64 y1 = 0;
    u64 y2 = 0;
};

/// At most one y in J per x.
ConditionOneResult check_condition_one(const PlaneCurve& c, const CyclicInterval& j, int threads = 0);

/// N(C), fiber-based.
u64 enumerate_points(const PlaneCurve& c, int threads = 0);

/// Serial point stream in (x, y) lexicographic order.
void for_each_point(const PlaneCurve& c, const std::function<void(u64, u64)>& visit);

/// |N - p| <= (d-1)(d-2) sqrt(p) + d^2, the classical Weil range with a loose
/// additive constant. Meaningful only for absolutely irreducible curves.
bool within_weil_range(const PlaneCurve& c, u64 n_points);

} // namespace ptcurves
