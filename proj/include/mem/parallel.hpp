#pragma once

#include <functional>

namespace mem {

/// Worker count used by assembly, matrix-free products, sweeps and grids.
/// Defaults to 1. Every parallel loop writes disjoint output slots, so results
/// do not depend on the setting.
void set_thread_count(int n);
int thread_count();

/// Runs body(i) for i in [0, count), split into contiguous chunks.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace mem
