#pragma once

#include <random>

#include "ptcurves/counting.hpp"

namespace ptcurves {

/// splitmix64 finalizer; derives independent stream seeds from (seed, index).
u64 derive_seed(u64 seed, u64 stream);

/// mt19937_64 plus an unbiased bounded draw. The engine's output sequence
/// is fixed by the standard, so results do not depend on the library.
class SeededRng {
public:
    explicit SeededRng(u64 seed) : engine_(seed) {}
    SeededRng(u64 seed, u64 stream) : engine_(derive_seed(seed, stream)) {}

    /// Uniform in [0, n), n >= 1.
    u64 below(u64 n);
    /// Uniform in [lo, hi].
    u64 between(u64 lo, u64 hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 engine_;
};

/// Rejection-samples a spec with nonzero a_i and distinct a_i^{-1} b_i.
/// Throws UsageError when s > p (only p distinct ratios exist) or s == 0.
PatternSpec random_pattern_spec(SeededRng& rng, const PrimeModulus& mod, std::size_t s);

/// Uniform start, length in [min_len, max_len] (clamped to p).
CyclicInterval random_interval(SeededRng& rng, u64 p, u64 min_len, u64 max_len);

Rectangle random_rectangle(SeededRng& rng, u64 p);

/// Dense random polynomial of total degree d with deg_y exactly y_degree and
/// a nonzero y^{y_degree} coefficient, so no fiber vanishes identically.
BivariatePoly random_curve_poly(SeededRng& rng, const PrimeModulus& mod, int d, int y_degree);

} // namespace ptcurves
