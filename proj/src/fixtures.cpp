#include "setvar/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace setvar::fixtures {

namespace {

Point scaled_unit(std::size_t dim, int n, double a) {
  std::vector<double> c(dim, 0.0);
  c[static_cast<std::size_t>(n - 1)] = a;
  return Point(std::move(c));
}

Point origin(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Fixture example_5_1(int trunc) {
  require(trunc >= 2, "example_5_1 needs trunc >= 2");
  const auto dim = static_cast<std::size_t>(trunc);
  auto space = MetricSpace::l1seq(dim);
  auto alpha = [](int n) { return 1.0 + 1.0 / n; };

  std::vector<Point> tail;
  for (int n = 2; n <= trunc; ++n) tail.push_back(scaled_unit(dim, n, alpha(n)));
  std::vector<Point> full = tail;
  full.push_back(scaled_unit(dim, 1, 1.0));
  CompactSet x(space, full), y(space, tail);

  Fixture fx;
  fx.name = "example_5_1";
  fx.params = {{"trunc", trunc}};
  fx.multifunction = GridMultifunction(Grid({0.0, 0.5, 1.0}), {x, y, y});
  const double e = 1.0 + alpha(trunc);
  fx.expected = {{"right_variation", e},
                 {"left_variation", 0.0},
                 {"jordan_variation", e},
                 {"right_variation_limit", 2.0},
                 {"dist_u1_Y", e},
                 {"projection_index", static_cast<double>(trunc)}};
  fx.sets.emplace("X0", CompactSet(space, {scaled_unit(dim, 1, 1.0)}));
  fx.sets.emplace("X", x);
  fx.sets.emplace("Y", y);
  fx.t0 = 0.0;
  return fx;
}

Fixture example_5_2(double alpha, int n_split, int trunc) {
  require(alpha != 0.0 && std::isfinite(alpha), "example_5_2 needs a finite alpha != 0");
  require(n_split >= 2, "example_5_2 needs N >= 2");
  require(trunc > n_split, "example_5_2 needs trunc > N");
  const auto dim = static_cast<std::size_t>(trunc);
  auto space = MetricSpace::l1seq(dim);
  auto a = [alpha](int n) { return alpha * (n + 1) / n; };

  std::vector<Point> xs, ys;
  for (int n = 1; n <= n_split; ++n) xs.push_back(scaled_unit(dim, n, a(n)));
  for (int n = n_split + 1; n <= trunc; ++n) ys.push_back(scaled_unit(dim, n, a(n)));
  CompactSet x(space, xs), y(space, ys);

  Fixture fx;
  fx.name = "example_5_2";
  fx.params = {{"alpha", alpha}, {"N", n_split}, {"trunc", trunc}};
  fx.multifunction = GridMultifunction(Grid({0.0, 0.5, 1.0}), {x, x, y});
  const double right = std::abs(a(1)) + std::abs(a(trunc));
  const double left = std::abs(a(n_split + 1)) + std::abs(a(n_split));
  fx.expected = {{"right_variation", right},
                 {"left_variation", left},
                 {"jordan_variation", std::max(right, left)},
                 {"right_variation_limit", std::abs(a(1)) + std::abs(alpha)},
                 {"truncation_margin", std::abs(a(trunc)) - std::abs(alpha)},
                 {"selector_left_variation", left}};
  fx.sets.emplace("X", x);
  fx.sets.emplace("Y", y);
  fx.sets.emplace("X0", CompactSet(space, {scaled_unit(dim, n_split + 1, a(n_split + 1))}));
  fx.sets.emplace("projection", CompactSet(space, {scaled_unit(dim, n_split, a(n_split))}));
  fx.t0 = 1.0;
  return fx;
}

namespace {

struct Staircase {
  SpacePtr space;
  std::vector<double> taus;
  std::vector<CompactSet> values;  // values[k] = X_{k+1}
};

Staircase staircase(int n_block, int steps, bool with_origin) {
  require(n_block >= 1, "example_5_3 needs N >= 1");
  require(steps >= 2, "example_5_3 needs steps >= 2");
  const int top = (steps + 1) * n_block;
  const auto dim = static_cast<std::size_t>(top);
  Staircase s;
  s.space = MetricSpace::l1seq(dim);
  for (int k = 0; k <= steps; ++k) {
    s.taus.push_back(1.0 - std::ldexp(1.0, -k));
    std::vector<Point> pts;
    if (with_origin) pts.push_back(origin(dim));
    for (int i = 1; i <= (k + 1) * n_block; ++i) pts.push_back(scaled_unit(dim, i, 1.0 / i));
    s.values.emplace_back(s.space, std::move(pts));
  }
  return s;
}

}  // namespace

Fixture example_5_3(int n_block, int steps, bool with_origin) {
  auto s = staircase(n_block, steps, with_origin);
  Fixture fx;
  fx.name = "example_5_3";
  fx.params = {{"N", n_block}, {"steps", steps}, {"with_origin", with_origin ? 1.0 : 0.0}};
  // Late nodes crowd toward 1 (spacing 2^-steps), below the default grid tolerance.
  const double spacing = s.taus.back() - s.taus[s.taus.size() - 2];
  fx.multifunction = GridMultifunction(Grid(s.taus, std::min(kDefaultTolerance, 0.25 * spacing)), s.values);
  // e(X_{n+1}, X_n): the new points a_k u_k, k > nN, are nearest to a_{nN} u_{nN}
  // (distance a_k + a_{nN}), or to the origin (distance a_k) when it is present.
  double left = 0.0;
  for (int n = 1; n <= steps; ++n) {
    const double head = 1.0 / (n * n_block + 1);
    left += with_origin ? head : head + 1.0 / (n * n_block);
  }
  fx.expected = {{"right_variation", 0.0}, {"left_variation", left}, {"jordan_variation", left}};
  fx.sets.emplace("X1", s.values.front());
  return fx;
}

Fixture example_5_4(int n_block, int steps, int n, bool with_origin) {
  require(n >= 1 && n <= steps, "example_5_4 needs 1 <= n <= steps");
  auto fx = example_5_3(n_block, steps, with_origin);
  fx.name = "example_5_4";
  fx.params["n"] = n;
  const auto& f = *fx.multifunction;
  const std::size_t dim = f.space().dim();
  std::vector<Point> seed;
  for (int i = n_block + 1; i <= (n + 1) * n_block; ++i) seed.push_back(scaled_unit(dim, i, 1.0 / i));
  fx.sets.emplace("X0", CompactSet(f.space_ptr(), std::move(seed)));
  fx.t0 = f.grid()[static_cast<std::size_t>(n)];
  fx.expected["subset_lower_bound"] = 1.0 / ((n + 1) * n_block);
  return fx;
}

Fixture example_5_5(int m) {
  require(m >= 2, "example_5_5 needs m >= 2");
  const auto dim = static_cast<std::size_t>(m);
  auto space = MetricSpace::l1seq(dim);
  std::vector<double> nodes;
  std::vector<CompactSet> vals;
  std::vector<Point> pts;
  for (int k = 1; k <= m; ++k) {
    nodes.push_back(k);
    pts.push_back(scaled_unit(dim, k, 1.0));
    vals.emplace_back(space, pts);
  }
  Fixture fx;
  fx.name = "example_5_5";
  fx.params = {{"m", m}};
  fx.multifunction = GridMultifunction(Grid(std::move(nodes)), std::move(vals));
  const double left = 2.0 * (m - 1);
  fx.expected = {{"right_variation", 0.0}, {"left_variation", left}, {"jordan_variation", left}};
  return fx;
}

std::vector<double> cantor_default_grid() { return {0.0, 0.1, 0.2, 1.0 / 3.0, 0.4, 0.5}; }

Fixture cantor_problem(std::vector<double> grid_nodes, double quantization) {
  for (double t : grid_nodes) require(t >= 0.0 && t <= 0.5 + 1e-12, "cantor grid must lie in [0, 1/2]");
  auto space = MetricSpace::euclidean(1);
  constexpr int kNet = 64;
  std::vector<Point> net;
  for (int k = 0; k <= kNet; ++k) net.emplace_back(std::vector<double>{static_cast<double>(k) / kNet});
  CompactSet k(space, net);
  Grid grid(grid_nodes);
  const std::size_t n = grid.size();

  Fixture fx;
  fx.name = "cantor";
  fx.params = {{"quantization", quantization}};
  fx.problem = InclusionProblem{space,
                                grid,
                                InclusionMap::cantor(),
                                0.5,
                                grid.nodes(),
                                std::vector<CompactSet>(n, k),
                                0.5 / kNet,
                                k,
                                CompactSet(space, {Point(std::vector<double>{0.0}), Point(std::vector<double>{1.0})}),
                                quantization};
  fx.expected = {{"variation_bound", 1.0}, {"x_t0_min", 0.0}, {"x_t0_max", 1.0}, {"x_t0_size", 2.0}};
  fx.t0 = grid.front();
  return fx;
}

Fixture scaling_problem(std::vector<double> grid_nodes, std::vector<double> phi0, const CompactSet& k,
                        const CompactSet& x0) {
  Grid grid(std::move(grid_nodes));
  require(phi0.size() == grid.size(), "scaling problem needs one phi0 value per node");
  for (std::size_t i = 0; i < phi0.size(); ++i) {
    require(phi0[i] >= 0.0, "phi0 must be nonnegative");
    if (i > 0) require(phi0[i] >= phi0[i - 1], "phi0 must be nondecreasing");
  }
  const double mu = *std::max_element(phi0.begin(), phi0.end());
  require(mu < 1.0, "scaling problem needs sup phi0 < 1");
  require_same_space(k, x0);

  const auto& space = k.space_ptr();
  if (k.space().is_table()) throw DomainError("scaling problem needs a coordinate space");
  const Point zero = origin(k.space().dim());
  double radius = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) radius = std::max(radius, k.space().distance(zero, k.point(i)));

  auto map = InclusionMap::scaling(phi0);
  std::vector<double> phi;
  std::vector<CompactSet> bound;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    phi.push_back(phi0[i] * radius);
    bound.push_back(map(i, grid[i], k));
  }

  Fixture fx;
  fx.name = "scaling";
  fx.params = {{"mu", mu}};
  fx.problem = InclusionProblem{space, grid, map, mu, phi, bound, 0.0, k, x0};
  fx.expected = {{"variation_bound", real_variation(phi) / (1.0 - mu)}};
  fx.t0 = grid.front();
  return fx;
}

// ---------------------------------------------------------------------------
// Registry

namespace {

double num(const std::map<std::string, std::string>& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw DomainError("parameter " + key + " must be a number, got '" + it->second + "'");
  }
}

int integer(const std::map<std::string, std::string>& p, const std::string& key, int fallback) {
  const double v = num(p, key, fallback);
  if (v != std::floor(v)) throw DomainError("parameter " + key + " must be an integer");
  return static_cast<int>(v);
}

void only(const std::map<std::string, std::string>& p, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : p)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      throw DomainError("unknown fixture parameter '" + k + "'");
}

}  // namespace

std::vector<std::string> names() {
  return {"example_5_1", "example_5_2", "example_5_3", "example_5_4", "example_5_5", "cantor", "scaling"};
}

Fixture make(const std::string& name, const std::map<std::string, std::string>& p) {
  if (name == "example_5_1") {
    only(p, {"trunc"});
    return example_5_1(integer(p, "trunc", 100));
  }
  if (name == "example_5_2") {
    only(p, {"alpha", "N", "trunc"});
    return example_5_2(num(p, "alpha", 1.0), integer(p, "N", 2), integer(p, "trunc", 10));
  }
  if (name == "example_5_3") {
    only(p, {"N", "steps", "with_origin"});
    return example_5_3(integer(p, "N", 1), integer(p, "steps", 30), integer(p, "with_origin", 0) != 0);
  }
  if (name == "example_5_4") {
    only(p, {"N", "steps", "n", "with_origin"});
    return example_5_4(integer(p, "N", 1), integer(p, "steps", 3), integer(p, "n", 3),
                       integer(p, "with_origin", 0) != 0);
  }
  if (name == "example_5_5") {
    only(p, {"m"});
    return example_5_5(integer(p, "m", 10));
  }
  if (name == "cantor") {
    only(p, {"quantization"});
    return cantor_problem(cantor_default_grid(), num(p, "quantization", 1e-6));
  }
  if (name == "scaling") {
    only(p, {"nodes", "net"});
    const int nodes = integer(p, "nodes", 6);
    const int net = integer(p, "net", 10);
    if (nodes < 2 || net < 1) throw DomainError("scaling fixture needs nodes >= 2 and net >= 1");
    auto space = MetricSpace::euclidean(1);
    std::vector<double> grid, phi0;
    for (int i = 0; i < nodes; ++i) {
      grid.push_back(0.5 * i / (nodes - 1));
      phi0.push_back(grid.back());
    }
    std::vector<Point> kpts;
    for (int j = 0; j <= net; ++j) kpts.emplace_back(std::vector<double>{static_cast<double>(j) / net});
    CompactSet k(space, kpts);
    return scaling_problem(grid, phi0, k, CompactSet(space, {Point(std::vector<double>{0.0})}));
  }
  throw DomainError("unknown fixture '" + name + "'");
}

}  // namespace setvar::fixtures
