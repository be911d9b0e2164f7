#include "ptcurves/random_inputs.hpp"

#include <algorithm>
#include <string>

namespace ptcurves {

u64 derive_seed(u64 seed, u64 stream) {
    u64 z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

u64 SeededRng::below(u64 n) {
    if (n == 0) throw UsageError("SeededRng::below requires n >= 1");
    // Reject the top partial block so every residue is equally likely.
    const u64 limit = ~u64{0} - (~u64{0} % n + 1) % n;
    for (;;) {
        u64 v = engine_();
        if (v <= limit) return v % n;
    }
}

PatternSpec random_pattern_spec(SeededRng& rng, const PrimeModulus& mod, std::size_t s) {
    const u64 p = mod.value();
    if (s == 0) throw UsageError("pattern length s must be >= 1");
    if (s > p) throw UsageError("cannot draw " + std::to_string(s) + " distinct ratios a_i^{-1} b_i from F_" + std::to_string(p));
    std::vector<u64> a, b, ratios;
    while (a.size() < s) {
        const u64 ai = rng.between(1, p - 1);
        const u64 bi = rng.below(p);
        const u64 ratio = mod.mul(mod.inv(ai), bi);
        if (std::find(ratios.begin(), ratios.end(), ratio) != ratios.end()) continue;
        a.push_back(ai);
        b.push_back(bi);
        ratios.push_back(ratio);
    }
    return PatternSpec(mod, std::move(a), std::move(b));
}

CyclicInterval random_interval(SeededRng& rng, u64 p, u64 min_len, u64 max_len) {
    max_len = std::min(max_len, p);
    min_len = std::min(min_len, max_len);
    const u64 start = rng.below(p);
    const u64 len = rng.between(min_len, max_len);
    return CyclicInterval(p, start, len);
}

Rectangle random_rectangle(SeededRng& rng, u64 p) {
    auto i = random_interval(rng, p, 0, p);
    auto j = random_interval(rng, p, 0, p);
    return Rectangle(i, j);
}

BivariatePoly random_curve_poly(SeededRng& rng, const PrimeModulus& mod, int d, int y_degree) {
    if (y_degree < 1 || d < y_degree) throw UsageError("random curve needs 1 <= y_degree <= d");
    const u64 p = mod.value();
    std::map<BivariatePoly::Monomial, u64> terms;
    for (int j = 0; j <= y_degree; ++j) {
        for (int i = 0; i + j <= d; ++i) terms[{i, j}] = rng.below(p);
    }
    terms[{0, y_degree}] = rng.between(1, p - 1);
    // Force total degree d through a pure-x or mixed top term.
    terms[{d - y_degree, y_degree}] = rng.between(1, p - 1);
    return BivariatePoly(mod, std::move(terms));
}

} // namespace ptcurves
