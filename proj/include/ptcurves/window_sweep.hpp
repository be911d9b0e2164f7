#pragma once

#include <cstdint>
#include <vector>

#include <omp.h>

#include "ptcurves/fiber_table.hpp"

namespace ptcurves {

/// Sliding (x, x+H] window over the column counts, x = 0..p-1 on the torus.
/// Each of `shards` contiguous x-ranges recomputes its first window and then
/// slides; visit(shard, x, n_x) is called in increasing x within a shard.
/// Requires 1 <= H < p.
template <class Visit>
void sweep_windows(const std::vector<std::uint32_t>& col, u64 h, int shards, Visit&& visit) {
    const u64 p = col.size();
#pragma omp parallel for num_threads(shards) schedule(static, 1)
    for (int s = 0; s < shards; ++s) {
        const u64 lo = p * static_cast<u64>(s) / static_cast<u64>(shards);
        const u64 hi = p * static_cast<u64>(s + 1) / static_cast<u64>(shards);
        if (lo == hi) continue;
        u64 n = 0;
        for (u64 k = 1; k <= h; ++k) n += col[(lo + k) % p];
        for (u64 x = lo;;) {
            visit(s, x, n);
            if (++x == hi) break;
            // (x-1, x-1+H] -> (x, x+H]: drop column x, add column x+H.
            n -= col[x];
            n += col[(x + h) % p];
        }
    }
}

} // namespace ptcurves
