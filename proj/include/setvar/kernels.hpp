#pragma once

// Data-parallel inner loops behind the set-distance operations.
//
// Every kernel has a `_serial` reference: a plain double loop straight from
// the definition, kept for testing and benchmarking. The `_parallel`
// variants split the outer loop across OpenMP threads and prune each inner
// scan once a partial distance exceeds the best candidate so far. Pruning
// never changes which value wins, so both variants agree bit for bit.

#include <cstddef>
#include <span>
#include <vector>

#include "setvar/metric.hpp"

namespace setvar::kernels {

/// out[i] = d(x_i, Y) for every element of X.
std::vector<double> nearest_distances_serial(const CompactSet& x, const CompactSet& y);
std::vector<double> nearest_distances_parallel(const CompactSet& x, const CompactSet& y);

double excess_serial(const CompactSet& x, const CompactSet& y);
double excess_parallel(const CompactSet& x, const CompactSet& y);

/// Row-major n x n table with entry (i, j) = e(sets[i], sets[j]).
std::vector<double> pairwise_excess_serial(std::span<const CompactSet> sets);
std::vector<double> pairwise_excess_parallel(std::span<const CompactSet> sets);

/// Work size (|X| * |Y|) at which the dispatching operations go parallel.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

int max_threads();

}  // namespace setvar::kernels
