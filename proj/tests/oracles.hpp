#pragma once

// Brute-force reference computations and random instance generators.
// Nothing here calls the library's distance or variation code; everything
// goes through MetricSpace::distance on materialized points.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "setvar/metric.hpp"
#include "setvar/multifun.hpp"

namespace oracle {

using namespace setvar;

inline double naive_dist(const Point& x, const CompactSet& y) {
  double best = INFINITY;
  for (const auto& q : y.points()) best = std::min(best, y.space().distance(x, q));
  return best;
}

inline double naive_excess(const CompactSet& x, const CompactSet& y) {
  double worst = 0.0;
  for (const auto& p : x.points()) worst = std::max(worst, naive_dist(p, y));
  return worst;
}

inline double naive_hausdorff(const CompactSet& x, const CompactSet& y) {
  return std::max(naive_excess(x, y), naive_excess(y, x));
}

inline std::vector<Point> naive_projection(const CompactSet& x, const CompactSet& y) {
  const double tol = x.space().tolerance();
  std::vector<Point> out;
  for (const auto& q : y.points()) {
    bool hit = false;
    for (const auto& p : x.points())
      if (y.space().distance(p, q) <= naive_dist(p, y) + tol) hit = true;
    if (hit) out.push_back(q);
  }
  return out;
}

enum class Kind { jordan, right, left };

inline double increment(const GridMultifunction& f, std::size_t s, std::size_t t, Kind k) {
  switch (k) {
    case Kind::jordan: return naive_hausdorff(f[s], f[t]);
    case Kind::right: return naive_excess(f[s], f[t]);
    case Kind::left: return naive_excess(f[t], f[s]);
  }
  return 0.0;
}

/// sup over every partition of nodes [lo, hi] (endpoints kept, interior nodes
/// chosen by bitmask) of the summed increments.
inline double partition_sup(const GridMultifunction& f, std::size_t lo, std::size_t hi, Kind k) {
  if (hi <= lo) return 0.0;
  const std::size_t interior = hi - lo - 1;
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
    double sum = 0.0;
    std::size_t prev = lo;
    for (std::size_t b = 0; b < interior; ++b)
      if (mask >> b & 1u) {
        sum += increment(f, prev, lo + 1 + b, k);
        prev = lo + 1 + b;
      }
    sum += increment(f, prev, hi, k);
    best = std::max(best, sum);
  }
  return best;
}

/// max over s_1 <= t_1 <= s_2 <= ... <= t_k of the summed d_H(F(s_i), F(t_i)).
inline double modulus_brute(const GridMultifunction& f, std::size_t k) {
  const std::size_t n = f.size();
  std::vector<std::size_t> seq(2 * k);
  double best = 0.0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == seq.size()) {
      double sum = 0.0;
      for (std::size_t i = 0; i < k; ++i) sum += naive_hausdorff(f[seq[2 * i]], f[seq[2 * i + 1]]);
      best = std::max(best, sum);
      return;
    }
    for (std::size_t j = from; j < n; ++j) {
      seq[pos] = j;
      rec(pos + 1, j);
    }
  };
  rec(0, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Generators

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Point random_point(Rng& rng, const MetricSpace& s, double scale = 1.0) {
  if (s.is_table()) return Point(pick(rng, 0, s.dim() - 1));
  std::vector<double> c(s.dim());
  for (auto& v : c) v = uniform(rng, -scale, scale);
  return Point(std::move(c));
}

inline CompactSet random_set(Rng& rng, const SpacePtr& s, std::size_t max_points, double scale = 1.0) {
  std::vector<Point> pts;
  const std::size_t n = pick(rng, 1, max_points);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, *s, scale));
  return CompactSet(s, std::move(pts));
}

/// A table metric from random points in the plane.
inline SpacePtr random_table(Rng& rng, std::size_t n) {
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) p = {uniform(rng, 0, 1), uniform(rng, 0, 1)};
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
  return MetricSpace::table(std::move(m));
}

inline Grid random_grid(Rng& rng, std::size_t nodes) {
  std::vector<double> t;
  double cur = uniform(rng, -1, 1);
  for (std::size_t i = 0; i < nodes; ++i) {
    t.push_back(cur);
    cur += uniform(rng, 0.05, 1.0);
  }
  return Grid(std::move(t));
}

inline GridMultifunction random_multifunction(Rng& rng, const SpacePtr& s, std::size_t nodes, std::size_t max_points) {
  std::vector<CompactSet> vals;
  for (std::size_t i = 0; i < nodes; ++i) vals.push_back(random_set(rng, s, max_points));
  return GridMultifunction(random_grid(rng, nodes), std::move(vals));
}

/// Moves every coordinate by at most delta in sup norm, keeping the count.
inline CompactSet jitter(Rng& rng, const CompactSet& x, double delta) {
  std::vector<Point> pts;
  for (const auto& p : x.points()) {
    auto c = p.coords();
    std::vector<double> q(c.begin(), c.end());
    for (auto& v : q) v += uniform(rng, -delta, delta);
    pts.emplace_back(std::move(q));
  }
  return CompactSet(x.space_ptr(), std::move(pts));
}

}  // namespace oracle
