#include "ptcurves/fiber_table.hpp"

#include <omp.h>

#include <algorithm>

namespace ptcurves {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

FiberRoots compute_fiber_roots(const PlaneCurve& c, int threads, RootMethod method) {
    FiberRoots fr;
    fr.p_ = c.p();
    fr.stride_ = c.y_degree();
    fr.sizes_.assign(fr.p_, 0);
    fr.roots_.assign(fr.p_ * static_cast<u64>(fr.stride_), 0);
    const int nt = resolve_threads(threads);
    const auto n = static_cast<std::int64_t>(fr.p_);
    // First failing x wins so the error is independent of scheduling.
    std::int64_t bad_x = n;
#pragma omp parallel for num_threads(nt) schedule(dynamic, 1024) reduction(min : bad_x)
    for (std::int64_t xi = 0; xi < n; ++xi) {
        const u64 x = static_cast<u64>(xi);
        UnivariatePoly g = c.fiber_poly(x);
        if (g.is_zero()) {
            bad_x = std::min(bad_x, xi);
            continue;
        }
        auto roots = univariate_roots(g, method);
        fr.sizes_[x] = static_cast<std::uint32_t>(roots.size());
        u64* out = &fr.roots_[x * fr.stride_];
        for (std::size_t k = 0; k < roots.size(); ++k) out[k] = roots[k].value;
    }
    if (bad_x < n) c.fiber_roots(static_cast<u64>(bad_x));  // throws the canonical error
    return fr;
}

FiberRoots compute_fiber_roots_serial(const PlaneCurve& c) {
    FiberRoots fr;
    fr.p_ = c.p();
    fr.stride_ = c.y_degree();
    fr.sizes_.assign(fr.p_, 0);
    fr.roots_.assign(fr.p_ * static_cast<u64>(fr.stride_), 0);
    const BivariatePoly& f = c.poly();
    for (u64 x = 0; x < fr.p_; ++x) {
        if (c.fiber_poly(x).is_zero()) c.fiber_roots(x);
        for (u64 y = 0; y < fr.p_; ++y) {
            if (f.eval(x, y) == 0) fr.roots_[x * fr.stride_ + fr.sizes_[x]++] = y;
        }
    }
    return fr;
}

std::vector<std::uint32_t> FiberRoots::column_counts(const CyclicInterval& j, int threads) const {
    if (j.modulus() != p_) throw UsageError("column_counts: interval modulus mismatch");
    std::vector<std::uint32_t> out(p_, 0);
    const int nt = resolve_threads(threads);
#pragma omp parallel for num_threads(nt) schedule(static)
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(p_); ++xi) {
        const u64 x = static_cast<u64>(xi);
        std::uint32_t n = 0;
        for (std::uint32_t k = 0; k < sizes_[x]; ++k) n += j.contains(roots_[x * stride_ + k]) ? 1u : 0u;
        out[x] = n;
    }
    return out;
}

u64 FiberRoots::total_points() const noexcept {
    u64 t = 0;
    for (auto s : sizes_) t += s;
    return t;
}

} // namespace ptcurves
