#include "setvar/multifun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "setvar/kernels.hpp"

namespace setvar {

Grid::Grid(std::vector<double> nodes, double tolerance) : nodes_(std::move(nodes)), tolerance_(tolerance) {
  if (nodes_.empty()) throw DomainError("grid must have at least one node");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i])) throw DomainError("grid nodes must be finite");
    if (i > 0 && !(nodes_[i] - nodes_[i - 1] > tolerance_))
      throw DomainError("grid nodes must be strictly increasing (node " + std::to_string(i) + ")");
  }
}

std::optional<std::size_t> Grid::find(double t) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t - tolerance_);
  if (it != nodes_.end() && std::abs(*it - t) <= tolerance_) return static_cast<std::size_t>(it - nodes_.begin());
  return std::nullopt;
}

std::size_t Grid::index_of(double t) const {
  if (auto i = find(t)) return *i;
  throw DomainError("t = " + std::to_string(t) + " is not a grid node");
}

GridMultifunction::GridMultifunction(Grid grid, std::vector<CompactSet> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw DomainError("multifunction has " + std::to_string(values_.size()) + " values for " +
                      std::to_string(grid_.size()) + " nodes");
  for (const auto& v : values_) require_same_space(values_.front(), v);
}

NodeRange GridMultifunction::range(double lo, double hi) const {
  const auto& n = grid_.nodes();
  const double tol = grid_.tolerance();
  if (lo > hi) return {0, 0};
  auto b = std::lower_bound(n.begin(), n.end(), lo - tol);
  auto e = std::upper_bound(n.begin(), n.end(), hi + tol);
  return {static_cast<std::size_t>(b - n.begin()), static_cast<std::size_t>(e - n.begin())};
}

GridMultifunction GridMultifunction::restrict(NodeRange r) const {
  if (r.count() == 0 || r.end > size()) throw DomainError("restriction to an empty or invalid node range");
  std::vector<double> nodes(grid_.nodes().begin() + r.begin, grid_.nodes().begin() + r.end);
  std::vector<CompactSet> vals(values_.begin() + r.begin, values_.begin() + r.end);
  return GridMultifunction(Grid(std::move(nodes), grid_.tolerance()), std::move(vals));
}

GridMultifunction GridMultifunction::reversed() const {
  std::vector<double> nodes;
  for (auto it = grid_.nodes().rbegin(); it != grid_.nodes().rend(); ++it) nodes.push_back(-*it);
  std::vector<CompactSet> vals(values_.rbegin(), values_.rend());
  return GridMultifunction(Grid(std::move(nodes), grid_.tolerance()), std::move(vals));
}

// ---------------------------------------------------------------------------
// Variations. On a finite grid the finest partition attains every supremum,
// so each variation is a sum over consecutive nodes.

namespace {

enum class Step { hausdorff, right, left };

double step_value(const GridMultifunction& f, std::size_t i, Step kind) {
  switch (kind) {
    case Step::hausdorff: return hausdorff(f[i], f[i + 1]);
    case Step::right: return excess(f[i], f[i + 1]);
    case Step::left: return excess(f[i + 1], f[i]);
  }
  return 0.0;
}

double sum_steps(const GridMultifunction& f, NodeRange r, Step kind) {
  if (r.end > f.size()) throw DomainError("node range exceeds the grid");
  double s = 0.0;
  for (std::size_t i = r.begin; i + 1 < r.end; ++i) s += step_value(f, i, kind);
  return s;
}

std::vector<double> prefix(const std::vector<double>& steps) {
  std::vector<double> p(steps.size() + 1, 0.0);
  for (std::size_t i = 0; i < steps.size(); ++i) p[i + 1] = p[i] + steps[i];
  return p;
}

}  // namespace

double jordan_variation(const GridMultifunction& f, NodeRange r) { return sum_steps(f, r, Step::hausdorff); }
double dir_variation_right(const GridMultifunction& f, NodeRange r) { return sum_steps(f, r, Step::right); }
double dir_variation_left(const GridMultifunction& f, NodeRange r) { return sum_steps(f, r, Step::left); }
double dir_variation(const GridMultifunction& f, NodeRange r, Side side) {
  return side == Side::right ? dir_variation_right(f, r) : dir_variation_left(f, r);
}

double jordan_variation(const GridMultifunction& f, double lo, double hi) {
  return jordan_variation(f, f.range(lo, hi));
}
double dir_variation_right(const GridMultifunction& f, double lo, double hi) {
  return dir_variation_right(f, f.range(lo, hi));
}
double dir_variation_left(const GridMultifunction& f, double lo, double hi) {
  return dir_variation_left(f, f.range(lo, hi));
}

double jordan_variation(const GridMultifunction& f) { return jordan_variation(f, f.all()); }
double dir_variation_right(const GridMultifunction& f) { return dir_variation_right(f, f.all()); }
double dir_variation_left(const GridMultifunction& f) { return dir_variation_left(f, f.all()); }

VariationReport variation_profile(const GridMultifunction& f) {
  const std::size_t m = f.size() - 1;
  std::vector<double> h(m), r(m), l(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i] = excess(f[i], f[i + 1]);
    l[i] = excess(f[i + 1], f[i]);
    h[i] = std::max(r[i], l[i]);
  }
  VariationReport rep;
  rep.nodes = f.grid().nodes();
  rep.v_profile = prefix(h);
  rep.v_right_profile = prefix(r);
  rep.v_left_profile = prefix(l);
  rep.jordan = rep.v_profile.back();
  rep.right = rep.v_right_profile.back();
  rep.left = rep.v_left_profile.back();
  rep.modulus = modulus_sequence(f, m);
  return rep;
}

std::vector<double> modulus_sequence(const GridMultifunction& f, std::size_t kmax) {
  const std::size_t n = f.size();
  const auto e = kernels::pairwise_excess_parallel(f.values());
  auto dist = [&](std::size_t i, std::size_t j) { return std::max(e[i * n + j], e[j * n + i]); };

  // best[j]: largest sum with the current number of pairs, all ending at or before node j.
  std::vector<double> best(n, 0.0), next(n);
  std::vector<double> out;
  out.reserve(kmax);
  for (std::size_t c = 1; c <= kmax; ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = j > 0 ? next[j - 1] : 0.0;
      for (std::size_t i = 0; i <= j; ++i) v = std::max(v, best[i] + (i < j ? dist(i, j) : 0.0));
      next[j] = v;
    }
    std::swap(best, next);
    out.push_back(best[n - 1]);
  }
  return out;
}

double modulus_of_variation(const GridMultifunction& f, std::size_t k) {
  if (k == 0) throw DomainError("modulus of variation needs k >= 1");
  return modulus_sequence(f, k).back();
}

bool is_nondecreasing(const GridMultifunction& f) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (!is_subset(f[i], f[i + 1])) return false;
  return true;
}

bool is_nonincreasing(const GridMultifunction& f) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (!is_subset(f[i + 1], f[i])) return false;
  return true;
}

std::vector<double> canonical_majorant(const GridMultifunction& f, Side side) {
  const auto rep = variation_profile(f);
  return side == Side::right ? rep.v_right_profile : rep.v_left_profile;
}

bool check_majorant(const GridMultifunction& f, const std::vector<double>& phi, Side side) {
  if (phi.size() != f.size())
    throw DomainError("majorant has " + std::to_string(phi.size()) + " values for " +
                      std::to_string(f.size()) + " nodes");
  const double tol = f.space().tolerance();
  for (std::size_t i = 0; i + 1 < phi.size(); ++i)
    if (phi[i + 1] < phi[i] - tol) return false;
  const std::size_t n = f.size();
  const auto e = kernels::pairwise_excess_parallel(f.values());
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      const double lhs = side == Side::right ? e[s * n + t] : e[t * n + s];
      if (lhs > phi[t] - phi[s] + tol) return false;
    }
  return true;
}

double jump_at(const GridMultifunction& f, double t0, Side side) {
  const std::size_t i = f.grid().index_of(t0);
  if (side == Side::left) return i == 0 ? 0.0 : hausdorff(f[i - 1], f[i]);
  return i + 1 == f.size() ? 0.0 : hausdorff(f[i], f[i + 1]);
}

double real_variation(const std::vector<double>& values) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) s += std::abs(values[i + 1] - values[i]);
  return s;
}

}  // namespace setvar
