#pragma once

namespace tabdx {

// Resolve the worker count: explicit request > TABDX_THREADS > all cores.
// A request of 0 means "not specified".
int resolve_thread_count(int requested);

// Apply the count to the OpenMP runtime (no-op in serial builds).
void apply_thread_count(int threads);

}  // namespace tabdx
