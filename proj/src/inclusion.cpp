#include "setvar/inclusion.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>

#include "setvar/selector.hpp"

namespace setvar {

// ---------------------------------------------------------------------------
// Maps

InclusionMap InclusionMap::cantor() {
  InclusionMap m;
  m.kind_ = "cantor";
  m.fn_ = [](std::size_t, double t, const CompactSet& x) {
    if (x.space().is_table()) throw DomainError("cantor map needs a coordinate space");
    const std::size_t dim = x.space().dim();
    std::vector<Point> out;
    out.reserve(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto c = x.coords(i);
      std::vector<double> lo(dim), hi(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        lo[k] = t * c[k];
        hi[k] = (1.0 - t) + t * c[k];
      }
      out.emplace_back(std::move(lo));
      out.emplace_back(std::move(hi));
    }
    return CompactSet(x.space_ptr(), std::move(out));
  };
  return m;
}

InclusionMap InclusionMap::scaling(std::vector<double> phi0) {
  InclusionMap m;
  m.kind_ = "scaling";
  m.phi0_ = std::move(phi0);
  m.fn_ = [phi0 = m.phi0_](std::size_t node, double, const CompactSet& x) {
    if (x.space().is_table()) throw DomainError("scaling map needs a coordinate space");
    if (node >= phi0.size()) throw DomainError("scaling map has no factor for node " + std::to_string(node));
    const double s = phi0[node];
    std::vector<Point> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto c = x.coords(i);
      std::vector<double> y(c.begin(), c.end());
      for (double& v : y) v *= s;
      out.emplace_back(std::move(y));
    }
    return CompactSet(x.space_ptr(), std::move(out));
  };
  return m;
}

InclusionMap InclusionMap::table(std::vector<std::vector<std::vector<std::size_t>>> images) {
  InclusionMap m;
  m.kind_ = "table";
  m.images_ = std::move(images);
  m.fn_ = [images = m.images_](std::size_t node, double, const CompactSet& x) {
    if (!x.space().is_table()) throw DomainError("table map needs a table space");
    if (node >= images.size()) throw DomainError("table map has no images for node " + std::to_string(node));
    std::vector<Point> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const std::size_t p = x.index(i);
      if (p >= images[node].size()) throw DomainError("table map has no image for point " + std::to_string(p));
      for (std::size_t q : images[node][p]) out.emplace_back(q);
    }
    return CompactSet(x.space_ptr(), std::move(out));
  };
  return m;
}

InclusionMap InclusionMap::custom(std::string name, Fn fn) {
  InclusionMap m;
  m.kind_ = std::move(name);
  m.fn_ = std::move(fn);
  return m;
}

// ---------------------------------------------------------------------------
// Problem checks

void InclusionProblem::check() const {
  if (!space) throw DomainError("inclusion problem needs a space");
  if (!(mu >= 0.0 && mu < 1.0)) throw DomainError("contraction constant mu must lie in [0, 1)");
  if (phi.size() != grid.size()) throw DomainError("phi must have one value per grid node");
  for (std::size_t i = 0; i + 1 < phi.size(); ++i)
    if (phi[i + 1] < phi[i]) throw DomainError("phi must be nondecreasing");
  if (bound.size() != grid.size()) throw DomainError("bound K must have one set per grid node");
  for (const auto& k : bound)
    if (!same_space(k.space_ptr(), space)) throw DomainError("bound set lives in a different space");
  if (!same_space(x0.space_ptr(), space)) throw DomainError("X0 lives in a different space");
  if (domain && !same_space(domain->space_ptr(), space)) throw DomainError("domain lives in a different space");
  if (!(bound_resolution >= 0.0)) throw DomainError("bound_resolution must be nonnegative");
  if (!(quantization > 0.0)) throw DomainError("quantization must be positive");
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (max_iter == 0) throw DomainError("max_iter must be positive");
  if (cardinality_cap == 0) throw DomainError("cardinality_cap must be positive");
  if (map.kind() == "scaling" && map.phi0().size() != grid.size())
    throw DomainError("scaling map needs one factor per grid node");
  if (map.kind() == "table") {
    if (!space->is_table()) throw DomainError("table map needs a table space");
    if (map.images().size() != grid.size()) throw DomainError("table map needs one image list per grid node");
    for (const auto& node : map.images()) {
      if (node.size() != space->dim()) throw DomainError("table map needs an image for every point");
      for (const auto& img : node) {
        if (img.empty()) throw DomainError("table map images must be nonempty");
        for (auto q : img)
          if (q >= space->dim()) throw DomainError("table map image index out of range");
      }
    }
  }
}

namespace {

void record(ConditionReport& r, double lhs, double rhs, double tol, const std::string& where) {
  ++r.checks;
  r.worst_slack = std::min(r.worst_slack, rhs - lhs);
  if (lhs > rhs + tol && r.pass) {
    r.pass = false;
    std::ostringstream os;
    os.precision(12);
    os << where << ": lhs " << lhs << " > rhs " << rhs;
    r.first_violation = os.str();
  }
}

std::vector<CompactSet> draw_samples(const InclusionProblem& p, std::size_t samples, std::uint64_t seed) {
  const CompactSet& source = p.domain ? *p.domain : p.x0;
  std::mt19937_64 rng(seed);
  std::vector<CompactSet> out;
  out.push_back(p.x0);
  if (p.domain) out.push_back(*p.domain);
  const std::size_t max_size = std::min<std::size_t>(source.size(), 8);
  std::vector<std::size_t> all(source.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  while (out.size() < samples + 1) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    const std::size_t k = size_dist(rng);
    std::shuffle(all.begin(), all.end(), rng);
    out.push_back(source.subset(std::span<const std::size_t>(all.data(), k)));
  }
  return out;
}

}  // namespace

ValidationReport validate_problem(const InclusionProblem& p, std::size_t samples, std::uint64_t seed) {
  p.check();
  if (samples == 0) throw DomainError("validate_problem needs at least one sample");
  const double tol = p.space->tolerance();
  const auto xs = draw_samples(p, samples, seed);
  const std::size_t n = p.grid.size();

  ValidationReport rep;
  rep.majorant.name = "majorant";
  rep.contraction.name = "contraction";
  rep.bounded.name = "bounded";

  // images[j][i] = F(t_i, xs[j])
  std::vector<std::vector<CompactSet>> images;
  images.reserve(xs.size());
  for (const auto& x : xs) {
    std::vector<CompactSet> row;
    row.reserve(n);
    for (std::size_t i = 0; i < n; ++i) row.push_back(p.map(i, p.grid[i], x));
    images.push_back(std::move(row));
  }

  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = s + 1; t < n; ++t)
        record(rep.majorant, excess(images[j][s], images[j][t]), p.phi[t] - p.phi[s], tol,
               "sample " + std::to_string(j) + ", nodes " + std::to_string(s) + "<" + std::to_string(t));
      record(rep.bounded, excess(images[j][s], p.bound[s]), p.bound_resolution, tol,
             "sample " + std::to_string(j) + ", node " + std::to_string(s));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      for (std::size_t k = j + 1; k < xs.size(); ++k)
        record(rep.contraction, excess(images[j][i], images[k][i]), p.mu * hausdorff(xs[j], xs[k]), tol,
               "node " + std::to_string(i) + ", samples " + std::to_string(j) + "," + std::to_string(k));
  return rep;
}

// ---------------------------------------------------------------------------
// Solver

CompactSet snap(const CompactSet& x, double pitch) {
  if (x.space().is_table()) return x;
  if (!(pitch > 0.0)) throw DomainError("snap pitch must be positive");
  // Dividing by an exact integer reciprocal keeps decimal lattices like 1e-6 exact at 0 and 1.
  double inv = 1.0 / pitch;
  if (std::abs(inv - std::round(inv)) <= 1e-9 * inv) inv = std::round(inv);
  std::vector<Point> pts;
  pts.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto c = x.coords(i);
    std::vector<double> y(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) y[k] = std::round(c[k] * inv) / inv + 0.0;
    pts.emplace_back(std::move(y));
  }
  return CompactSet(x.space_ptr(), std::move(pts));
}

namespace {

double snap_radius(const MetricSpace& s, double pitch) {
  switch (s.kind()) {
    case SpaceKind::euclidean: return 0.5 * pitch * std::sqrt(static_cast<double>(s.dim()));
    case SpaceKind::l1seq: return 0.5 * pitch * static_cast<double>(s.dim());
    case SpaceKind::table: return 0.0;
  }
  return 0.0;
}

template <typename Body>
void for_each_node(std::size_t n, Execution exec, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
  const bool par = exec == Execution::parallel;
#pragma omp parallel for if (par) schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  (void)par;
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

InclusionSolution solve_inclusion(const InclusionProblem& p, Execution exec) {
  p.check();
  const std::size_t n = p.grid.size();
  const double t0 = p.grid.front();
  const double space_tol = p.space->tolerance();

  std::vector<CompactSet> current(n, p.x0);
  std::vector<double> pitch(n, p.quantization);
  InclusionSolution sol{GridMultifunction(p.grid, current)};

  for (std::size_t it = 1; it <= p.max_iter; ++it) {
    std::vector<std::optional<CompactSet>> snapped(n);
    std::vector<double> node_residual(n, 0.0), node_pitch_before = pitch;

    for_each_node(n, exec, [&](std::size_t i) {
      const CompactSet raw = p.map(i, p.grid[i], current[i]);
      node_residual[i] = excess(current[i], raw);
      const double escape = excess(raw, p.bound[i]);
      if (escape > p.bound_resolution + space_tol)
        throw DomainError("map output escapes K at node " + std::to_string(i) + " (excess " +
                          std::to_string(escape) + ")");
      CompactSet s = snap(raw, pitch[i]);
      while (s.size() > p.cardinality_cap) {
        pitch[i] *= 2.0;
        s = snap(raw, pitch[i]);
      }
      snapped[i] = std::move(s);
    });

    for (std::size_t i = 0; i < n; ++i)
      if (pitch[i] != node_pitch_before[i]) sol.coarsening.push_back({it, i, pitch[i]});

    std::vector<CompactSet> fvals;
    fvals.reserve(n);
    for (auto& s : snapped) fvals.push_back(std::move(*s));
    const GridMultifunction fn(p.grid, std::move(fvals));
    auto next = select_bv_right(fn, t0, p.x0).selector;

    std::vector<double> steps(n);
    for (std::size_t i = 0; i < n; ++i) steps[i] = hausdorff(next[i], current[i]);
    const double step = *std::max_element(steps.begin(), steps.end());

    sol.residual_history.push_back(*std::max_element(node_residual.begin(), node_residual.end()));
    sol.node_steps.push_back(std::move(steps));
    sol.step_history.push_back(step);
    sol.variation_history.push_back(jordan_variation(next));
    current = next.values();
    sol.iterations = it;
    if (step <= p.tol) {
      sol.converged = true;
      break;
    }
  }

  sol.trajectory = GridMultifunction(p.grid, current);
  sol.residual = residual(p.map, sol.trajectory);
  sol.pitch = *std::max_element(pitch.begin(), pitch.end());

  const double r = snap_radius(*p.space, sol.pitch);
  const double vphi = real_variation(p.phi);
  sol.variation_check.lhs = jordan_variation(sol.trajectory);
  sol.variation_check.rhs = vphi / (1.0 - p.mu);
  sol.variation_check.slack = 2.0 * static_cast<double>(n - 1) * r / (1.0 - p.mu) + space_tol;
  sol.variation_check.pass = sol.variation_check.lhs <= sol.variation_check.rhs + sol.variation_check.slack;

  const CompactSet& x_t0 = sol.trajectory[0];
  sol.initial_check.lhs = hausdorff(p.x0, x_t0);
  sol.initial_check.rhs = excess(p.x0, p.map(0, t0, x_t0));
  sol.initial_check.slack = p.tol + r;
  sol.initial_check.pass = sol.initial_check.lhs <= sol.initial_check.rhs + sol.initial_check.slack;

  sol.seed_fixed = is_subset(p.x0, p.map(0, t0, p.x0));
  sol.seed_preserved = x_t0 == p.x0;
  return sol;
}

double residual(const InclusionMap& map, const GridMultifunction& x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, excess(x[i], map(i, x.grid()[i], x[i])));
  return worst;
}

}  // namespace setvar
