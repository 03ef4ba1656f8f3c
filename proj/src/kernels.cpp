#include "setvar/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace setvar::kernels {

namespace {

// d(x_i, Y), abandoning each candidate once its partial sum can no longer
// beat the running minimum. Euclidean candidates are compared on squared
// sums and the root is taken once at the end.
double nearest_pruned(const CompactSet& x, std::size_t i, const CompactSet& y) {
  const MetricSpace& s = x.space();
  if (s.is_table()) {
    double best = INFINITY;
    const std::size_t xi = x.index(i);
    for (std::size_t j = 0; j < y.size(); ++j) best = std::min(best, s.table_distance(xi, y.index(j)));
    return best;
  }
  const std::size_t dim = s.dim();
  const double* a = x.coords(i).data();
  double best = INFINITY;
  if (s.kind() == SpaceKind::l1seq) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double* b = y.coords(j).data();
      double acc = 0.0;
      std::size_t k = 0;
      for (; k < dim; ++k) {
        acc += std::abs(a[k] - b[k]);
        if (acc > best) break;
      }
      if (k == dim && acc < best) best = acc;
    }
    return best;
  }
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double* b = y.coords(j).data();
    double acc = 0.0;
    std::size_t k = 0;
    for (; k < dim; ++k) {
      const double d = a[k] - b[k];
      acc += d * d;
      if (acc > best) break;
    }
    if (k == dim && acc < best) best = acc;
  }
  return std::sqrt(best);
}

}  // namespace

std::vector<double> nearest_distances_serial(const CompactSet& x, const CompactSet& y) {
  std::vector<double> out(x.size(), INFINITY);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i] = std::min(out[i], x.element_distance(i, y, j));
  return out;
}

std::vector<double> nearest_distances_parallel(const CompactSet& x, const CompactSet& y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const bool big = x.size() * y.size() >= kParallelThreshold;
  std::vector<double> out(x.size());
#pragma omp parallel for if (big) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = nearest_pruned(x, static_cast<std::size_t>(i), y);
  (void)big;
  return out;
}

double excess_serial(const CompactSet& x, const CompactSet& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double best = INFINITY;
    for (std::size_t j = 0; j < y.size(); ++j) best = std::min(best, x.element_distance(i, y, j));
    worst = std::max(worst, best);
  }
  return worst;
}

double excess_parallel(const CompactSet& x, const CompactSet& y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const bool big = x.size() * y.size() >= kParallelThreshold;
  double worst = 0.0;
#pragma omp parallel for if (big) reduction(max : worst) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    worst = std::max(worst, nearest_pruned(x, static_cast<std::size_t>(i), y));
  (void)big;
  return worst;
}

std::vector<double> pairwise_excess_serial(std::span<const CompactSet> sets) {
  const std::size_t n = sets.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out[i * n + j] = excess_serial(sets[i], sets[j]);
  return out;
}

std::vector<double> pairwise_excess_parallel(std::span<const CompactSet> sets) {
  const std::size_t n = sets.size();
  std::vector<double> out(n * n, 0.0);
  const std::ptrdiff_t cells = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < cells; ++c) {
    const std::size_t i = static_cast<std::size_t>(c) / n;
    const std::size_t j = static_cast<std::size_t>(c) % n;
    if (i == j) continue;
    double worst = 0.0;
    for (std::size_t k = 0; k < sets[i].size(); ++k) worst = std::max(worst, nearest_pruned(sets[i], k, sets[j]));
    out[i * n + j] = worst;
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace setvar::kernels
