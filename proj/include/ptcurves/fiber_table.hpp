#pragma once

#include <cstdint>
#include <vector>

#include "ptcurves/curve_analysis.hpp"

namespace ptcurves {

/// Distinct F_p-roots of every fiber f(x, y), x = 0..p-1, in a flat array
/// with stride deg_y f. This is the one hot kernel everything else reads.
class FiberRoots {
public:
    u64 p() const noexcept { return p_; }
    int stride() const noexcept { return stride_; }
    int count(u64 x) const noexcept { return static_cast<int>(sizes_[x]); }
    const u64* roots(u64 x) const noexcept { return &roots_[x * stride_]; }

    /// Column counts c[x] = #{y in J : f(x, y) = 0}.
    std::vector<std::uint32_t> column_counts(const CyclicInterval& j, int threads = 0) const;

    u64 total_points() const noexcept;

    friend bool operator==(const FiberRoots&, const FiberRoots&) = default;

private:
    friend FiberRoots compute_fiber_roots(const PlaneCurve&, int, RootMethod);
    friend FiberRoots compute_fiber_roots_serial(const PlaneCurve&);

    u64 p_ = 0;
    int stride_ = 0;
    std::vector<std::uint32_t> sizes_;
    std::vector<u64> roots_;
};

/// OpenMP sweep over x; threads <= 0 uses the runtime default.
FiberRoots compute_fiber_roots(const PlaneCurve& c, int threads = 0, RootMethod method = RootMethod::kAuto);

/// Reference: evaluates f at every (x, y) in F_p^2. Small p only.
FiberRoots compute_fiber_roots_serial(const PlaneCurve& c);

/// Sets the OpenMP thread count for a parallel region; 0 means default.
int resolve_threads(int threads);

} // namespace ptcurves
