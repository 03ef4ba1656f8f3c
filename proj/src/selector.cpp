#include "setvar/selector.hpp"

#include <algorithm>
#include <cmath>

namespace setvar {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::right: return "right";
    case Direction::left: return "left";
    case Direction::two_sided: return "two_sided";
  }
  return "unknown";
}

Direction parse_direction(std::string_view s) {
  if (s == "right") return Direction::right;
  if (s == "left") return Direction::left;
  if (s == "two_sided" || s == "two-sided") return Direction::two_sided;
  throw DomainError("unknown direction '" + std::string(s) + "' (expected right, left, two_sided)");
}

const Inequality& SelectorCertificate::at(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw DomainError("certificate has no check named '" + std::string(name) + "'");
}

namespace {

// Greedy projections over nodes [begin, end): the first node projects `seed`,
// each later node projects its predecessor's value.
void greedy_pass(const GridMultifunction& f, std::size_t begin, std::size_t end, const CompactSet& seed,
                 std::vector<std::optional<CompactSet>>& out) {
  const CompactSet* prev = &seed;
  for (std::size_t i = begin; i < end; ++i) {
    out[i] = project_onto(*prev, f[i]);
    prev = &*out[i];
  }
}

void greedy_point_pass(const GridMultifunction& f, std::size_t begin, std::size_t end, const Point& seed,
                       std::vector<std::optional<Point>>& out) {
  const Point* prev = &seed;
  for (std::size_t i = begin; i < end; ++i) {
    out[i] = f[i].point(nearest_position(*prev, f[i]));
    prev = &*out[i];
  }
}

template <typename T>
std::vector<T> unwrap(std::vector<std::optional<T>>& v) {
  std::vector<T> out;
  out.reserve(v.size());
  for (auto& x : v) out.push_back(std::move(*x));
  return out;
}

Inequality make_check(std::string name, double lhs, double rhs, double tol) {
  return {std::move(name), lhs, rhs, lhs <= rhs + tol};
}

}  // namespace

SelectorResult select_bv_right(const GridMultifunction& f, double t0, const CompactSet& x0,
                               const SelectorOptions& opts) {
  require_same_space(x0, f[0]);
  const std::size_t i0 = f.grid().index_of(t0);
  std::vector<std::optional<CompactSet>> vals(f.size());
  greedy_pass(f, i0, f.size(), x0, vals);
  if (i0 > 0) {
    const CompactSet& seed = opts.segment_seed ? *opts.segment_seed : x0;
    require_same_space(seed, f[0]);
    greedy_pass(f, 0, i0, seed, vals);
  }
  GridMultifunction gamma(f.grid(), unwrap(vals));
  auto cert = verify_certificate(f, gamma, t0, x0, Direction::right);
  return {std::move(gamma), std::move(cert)};
}

SelectorResult select_bv_left(const GridMultifunction& f, double t0, const CompactSet& x0,
                              const SelectorOptions& opts) {
  f.grid().index_of(t0);
  auto mirrored = select_bv_right(f.reversed(), -t0, x0, opts);
  GridMultifunction gamma(f.grid(), mirrored.selector.reversed().values());
  auto cert = verify_certificate(f, gamma, t0, x0, Direction::left);
  return {std::move(gamma), std::move(cert)};
}

SelectorResult select_bv_two_sided(const GridMultifunction& f, double t0, const CompactSet& x0) {
  const std::size_t i0 = f.grid().index_of(t0);
  auto plus = select_bv_right(f.restrict({i0, f.size()}), t0, x0);
  auto minus = select_bv_left(f.restrict({0, i0 + 1}), t0, plus.selector[0]);
  std::vector<CompactSet> vals(minus.selector.values().begin(), minus.selector.values().begin() + i0);
  vals.insert(vals.end(), plus.selector.values().begin(), plus.selector.values().end());
  GridMultifunction gamma(f.grid(), std::move(vals));
  auto cert = verify_certificate(f, gamma, t0, x0, Direction::two_sided);
  return {std::move(gamma), std::move(cert)};
}

SelectorResult select_bv(const GridMultifunction& f, double t0, const CompactSet& x0, Direction d,
                         const SelectorOptions& opts) {
  switch (d) {
    case Direction::right: return select_bv_right(f, t0, x0, opts);
    case Direction::left: return select_bv_left(f, t0, x0, opts);
    case Direction::two_sided: return select_bv_two_sided(f, t0, x0);
  }
  throw DomainError("unknown direction");
}

namespace {

std::vector<Point> single_right(const GridMultifunction& f, std::size_t i0, const Point& x0) {
  std::vector<std::optional<Point>> path(f.size());
  greedy_point_pass(f, i0, f.size(), x0, path);
  if (i0 > 0) greedy_point_pass(f, 0, i0, x0, path);
  return unwrap(path);
}

std::vector<Point> single_left(const GridMultifunction& f, std::size_t i0, const Point& x0) {
  auto path = single_right(f.reversed(), f.size() - 1 - i0, x0);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

SingleSelectorResult select_single_valued(const GridMultifunction& f, double t0, const Point& x0, Direction d) {
  f.space().check_point(x0);
  const std::size_t i0 = f.grid().index_of(t0);
  std::vector<Point> path;
  switch (d) {
    case Direction::right: path = single_right(f, i0, x0); break;
    case Direction::left: path = single_left(f, i0, x0); break;
    case Direction::two_sided: {
      auto plus = single_right(f.restrict({i0, f.size()}), 0, x0);
      auto minus = single_left(f.restrict({0, i0 + 1}), i0, plus.front());
      path.assign(minus.begin(), minus.begin() + i0);
      path.insert(path.end(), plus.begin(), plus.end());
      break;
    }
  }
  auto gamma = path_as_multifunction(f, path);
  auto cert = verify_certificate(f, gamma, t0, CompactSet(f.space_ptr(), {x0}), d);
  return {std::move(path), std::move(cert)};
}

GridMultifunction path_as_multifunction(const GridMultifunction& f, const std::vector<Point>& path) {
  std::vector<CompactSet> vals;
  vals.reserve(path.size());
  for (const auto& p : path) vals.emplace_back(f.space_ptr(), std::vector<Point>{p});
  return GridMultifunction(f.grid(), std::move(vals));
}

SelectorCertificate verify_certificate(const GridMultifunction& f, const GridMultifunction& gamma, double t0,
                                       const CompactSet& x0, Direction d) {
  if (!(f.grid() == gamma.grid())) throw DomainError("selector and multifunction grids differ");
  require_same_space(f[0], gamma[0]);
  require_same_space(f[0], x0);
  const std::size_t i0 = f.grid().index_of(t0);
  const std::size_t n = f.size();
  const double tol = f.space().tolerance();

  SelectorCertificate cert;
  cert.direction = d;
  cert.tolerance = tol;
  cert.t0 = f.grid()[i0];
  cert.containment_ok = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_subset(gamma[i], f[i])) cert.containment_ok = false;

  cert.checks.push_back(make_check("initial_gap", hausdorff(x0, gamma[i0]), excess(x0, f[i0]), tol));

  switch (d) {
    case Direction::right: {
      const NodeRange after{i0, n}, before{0, i0};
      const double vr = dir_variation_right(f, after), vl = dir_variation_right(f, before);
      cert.jump = jump_at(gamma, t0, Side::left);
      cert.checks.push_back(make_check("right_segment", jordan_variation(gamma, after), vr, tol));
      cert.checks.push_back(make_check("left_segment", jordan_variation(gamma, before), vl, tol));
      cert.checks.push_back(make_check("total", jordan_variation(gamma) - cert.jump, vl + vr, tol));
      cert.checks.push_back(make_check("total_vs_dir", vl + vr, dir_variation_right(f), tol));
      break;
    }
    case Direction::left: {
      const NodeRange after{i0 + 1, n}, before{0, i0 + 1};
      const double vr = dir_variation_left(f, after), vl = dir_variation_left(f, before);
      cert.jump = jump_at(gamma, t0, Side::right);
      cert.checks.push_back(make_check("right_segment", jordan_variation(gamma, after), vr, tol));
      cert.checks.push_back(make_check("left_segment", jordan_variation(gamma, before), vl, tol));
      cert.checks.push_back(make_check("total", jordan_variation(gamma) - cert.jump, vl + vr, tol));
      cert.checks.push_back(make_check("total_vs_dir", vl + vr, dir_variation_left(f), tol));
      break;
    }
    case Direction::two_sided: {
      const NodeRange plus{i0, n}, minus{0, i0 + 1};
      const double vr = dir_variation_right(f, plus), vl = dir_variation_left(f, minus);
      cert.jump = 0.0;
      cert.checks.push_back(make_check("right_segment", jordan_variation(gamma, plus), vr, tol));
      cert.checks.push_back(make_check("left_segment", jordan_variation(gamma, minus), vl, tol));
      cert.checks.push_back(make_check("total", jordan_variation(gamma), vl + vr, tol));
      cert.checks.push_back(make_check("total_vs_dir", vl + vr, jordan_variation(f), tol));
      break;
    }
  }

  cert.all_pass = cert.containment_ok &&
                  std::all_of(cert.checks.begin(), cert.checks.end(), [](const Inequality& c) { return c.pass; });
  return cert;
}

double min_hausdorff_over_subsets(const CompactSet& x0, const CompactSet& s) {
  require_same_space(x0, s);
  if (s.size() > 20) throw DomainError("subset enumeration limited to 20 elements");
  double best = INFINITY;
  const std::uint32_t total = 1u << s.size();
  std::vector<std::size_t> pos;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    pos.clear();
    for (std::size_t k = 0; k < s.size(); ++k)
      if (mask & (1u << k)) pos.push_back(k);
    best = std::min(best, hausdorff(x0, s.subset(pos)));
  }
  return best;
}

}  // namespace setvar
