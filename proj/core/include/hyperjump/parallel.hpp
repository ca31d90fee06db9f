#pragma once

#include <cstddef>
#include <functional>

namespace hyperjump {

/// Worker count: hardware concurrency, capped by HYPERJUMP_THREADS when set.
std::size_t worker_count();

/// Runs body(i) for every i in [0, count) on up to worker_count() threads.
/// Callers write results into per-index slots and merge afterwards, so the
/// outcome never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hyperjump
