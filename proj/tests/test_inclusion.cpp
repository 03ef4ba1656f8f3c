#include <doctest.h>

#include "oracles.hpp"
#include "setvar/fixtures.hpp"
#include "setvar/inclusion.hpp"

using namespace setvar;

namespace {

Point real(double x) { return Point(std::vector<double>{x}); }

CompactSet reals(const SpacePtr& s, std::vector<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(real(x));
  return CompactSet(s, std::move(pts));
}

CompactSet net(const SpacePtr& s, int n) {
  std::vector<double> xs;
  for (int k = 0; k <= n; ++k) xs.push_back(static_cast<double>(k) / n);
  return reals(s, xs);
}

// F(t_i, X) = phi0_i X on [0, 1] with K a fine net; nontrivial seeds shrink to {0}.
InclusionProblem shrinking(std::vector<double> phi0, CompactSet x0) {
  auto s = x0.space_ptr();
  std::vector<double> nodes;
  for (std::size_t i = 0; i < phi0.size(); ++i) nodes.push_back(0.1 * static_cast<double>(i));
  const int n = 1000;
  InclusionProblem p{s, Grid(nodes), InclusionMap::scaling(phi0), *std::max_element(phi0.begin(), phi0.end()),
                     phi0, std::vector<CompactSet>(phi0.size(), net(s, n)), 0.5 / n, net(s, n), std::move(x0)};
  p.tol = 1e-9;
  return p;
}

}  // namespace

TEST_CASE("snap rounds to the lattice and keeps exact lattice points") {
  auto s = MetricSpace::euclidean(1);
  auto x = snap(reals(s, {0.0, 1.0, 0.3333333333, 0.33333334, 2.0 / 3.0}), 1e-6);
  CHECK(x.size() == 4);
  CHECK(x.point(0) == real(0.0));
  CHECK(x.point(1).coords()[0] == doctest::Approx(0.333333).epsilon(1e-12));
  CHECK(x.point(2).coords()[0] == doctest::Approx(0.666667).epsilon(1e-12));
  CHECK(snap(reals(s, {1.0}), 1e-6).point(0) == real(1.0));
  CHECK(snap(reals(s, {-0.0000001}), 1e-6).point(0) == real(0.0));
  auto t = MetricSpace::table({{0, 1}, {1, 0}});
  CompactSet ts(t, {Point(std::size_t{1})});
  CHECK(snap(ts, 1e-3) == ts);
}

TEST_CASE("problem checks") {
  auto fx = fixtures::cantor_problem(fixtures::cantor_default_grid());
  auto p = *fx.problem;
  CHECK_NOTHROW(p.check());
  auto bad = p;
  bad.mu = 1.0;
  CHECK_THROWS_AS(bad.check(), DomainError);
  bad = p;
  bad.phi[2] = -1.0;
  CHECK_THROWS_AS(bad.check(), DomainError);
  bad = p;
  bad.phi.pop_back();
  CHECK_THROWS_AS(bad.check(), DomainError);
  bad = p;
  bad.quantization = 0.0;
  CHECK_THROWS_AS(bad.check(), DomainError);
  bad = p;
  bad.max_iter = 0;
  CHECK_THROWS_AS(bad.check(), DomainError);
  bad = p;
  bad.bound.pop_back();
  CHECK_THROWS_AS(bad.check(), DomainError);
}

TEST_CASE("cantor map values") {
  auto s = MetricSpace::euclidean(1);
  auto m = InclusionMap::cantor();
  CHECK(m(0, 0.0, reals(s, {0.3, 0.7})) == reals(s, {0, 1}));
  CHECK(m(1, 0.5, reals(s, {0, 1})) == reals(s, {0, 0.5, 1}));
}

TEST_CASE("validation of the cantor and scaling problems") {
  auto cantor = *fixtures::cantor_problem(fixtures::cantor_default_grid()).problem;
  auto rep = validate_problem(cantor, 30);
  CHECK(rep.majorant.pass);
  CHECK(rep.contraction.pass);
  CHECK(rep.bounded.pass);
  CHECK(rep.all_pass());
  CHECK(rep.majorant.checks > 0);

  auto scaling = *fixtures::make("scaling", {}).problem;
  CHECK(validate_problem(scaling, 30).all_pass());
}

TEST_CASE("a map that ignores its declared contraction is caught") {
  auto s = MetricSpace::euclidean(1);
  // F(t, X) = X is 1-Lipschitz in X, declared with mu = 0.
  auto ident = InclusionMap::custom("identity", [](std::size_t, double, const CompactSet& x) { return x; });
  auto k = net(s, 10);
  InclusionProblem p{s, Grid({0, 1}), ident, 0.0, {0, 0}, {k, k}, 0.0, k, reals(s, {0})};
  auto rep = validate_problem(p, 20);
  CHECK_FALSE(rep.contraction.pass);
  CHECK(rep.contraction.worst_slack < 0.0);
  CHECK_FALSE(rep.contraction.first_violation.empty());
  CHECK(rep.bounded.pass);
}

TEST_CASE("scaling with X0 = {0} stays at the origin") {
  auto fx = fixtures::make("scaling", {});
  auto sol = solve_inclusion(*fx.problem);
  CHECK(sol.converged);
  CHECK(sol.residual == 0.0);
  CHECK(jordan_variation(sol.trajectory) == 0.0);
  for (const auto& v : sol.trajectory.values()) CHECK(v == fx.problem->x0);
  CHECK(sol.seed_fixed);
  CHECK(sol.seed_preserved);
}

TEST_CASE("a contracting scaling iteration converges geometrically") {
  auto s = MetricSpace::euclidean(1);
  auto p = shrinking({0.2, 0.3, 0.4, 0.5}, reals(s, {1.0}));
  auto sol = solve_inclusion(p);
  CHECK(sol.converged);
  CHECK(sol.residual <= p.tol + sol.pitch);
  CHECK(sol.variation_check.pass);
  CHECK(sol.initial_check.pass);
  CHECK_FALSE(sol.seed_fixed);
  // Later steps shrink by at least mu (plus lattice noise).
  for (std::size_t n = 2; n < sol.step_history.size(); ++n)
    CHECK(sol.step_history[n] <= p.mu * sol.step_history[n - 1] + 2 * sol.pitch);
  // Iterate variation bound: V(X_n) <= (1 + mu + ... + mu^{n-1}) V(phi) + lattice slack.
  const double vphi = real_variation(p.phi);
  double geom = 0.0, pw = 1.0;
  for (std::size_t n = 0; n < sol.variation_history.size(); ++n) {
    geom += pw;
    pw *= p.mu;
    CHECK(sol.variation_history[n] <= geom * vphi + 2 * 3 * sol.pitch + 1e-9);
  }
  CHECK(sol.iterations == sol.step_history.size());
}

TEST_CASE("serial and parallel solves agree") {
  auto p = *fixtures::cantor_problem(fixtures::cantor_default_grid()).problem;
  auto a = solve_inclusion(p, Execution::serial);
  auto b = solve_inclusion(p, Execution::parallel);
  CHECK(a.trajectory == b.trajectory);
  CHECK(a.step_history == b.step_history);

  auto s = MetricSpace::euclidean(1);
  auto q = shrinking({0.1, 0.2, 0.3}, reals(s, {0.5, 1.0}));
  CHECK(solve_inclusion(q, Execution::serial).trajectory == solve_inclusion(q, Execution::parallel).trajectory);
}

TEST_CASE("non-convergence is flagged, not thrown") {
  auto s = MetricSpace::euclidean(1);
  auto p = shrinking({0.2, 0.3, 0.4, 0.5}, reals(s, {1.0}));
  p.max_iter = 2;
  p.tol = 1e-12;
  auto sol = solve_inclusion(p);
  CHECK_FALSE(sol.converged);
  CHECK(sol.iterations == 2);
  CHECK(sol.step_history.size() == 2);
}

TEST_CASE("output escaping K is a domain error") {
  auto s = MetricSpace::euclidean(1);
  auto p = shrinking({0.2, 0.3}, reals(s, {1.0}));
  p.bound = {reals(s, {0.0}), reals(s, {0.0})};
  p.bound_resolution = 0.0;
  CHECK_THROWS_AS(solve_inclusion(p), DomainError);
}

TEST_CASE("cardinality cap coarsens the lattice") {
  auto s = MetricSpace::euclidean(1);
  // F(t, X) = X plus a fine comb: 201 points per evaluation.
  auto comb = InclusionMap::custom("comb", [](std::size_t, double, const CompactSet& x) {
    std::vector<Point> pts = x.points();
    for (int k = 0; k <= 200; ++k) pts.emplace_back(std::vector<double>{k / 200.0});
    return CompactSet(x.space_ptr(), std::move(pts));
  });
  auto k = net(s, 1000);
  InclusionProblem p{s, Grid({0, 1}), comb, 0.0, {0, 0}, {k, k}, 0.0005, k, reals(s, {0.5})};
  p.cardinality_cap = 20;
  p.quantization = 1e-3;
  auto sol = solve_inclusion(p);
  CHECK_FALSE(sol.coarsening.empty());
  CHECK(sol.pitch > p.quantization);
  CHECK(sol.coarsening.front().pitch > p.quantization);
}

TEST_CASE("table-space inclusion") {
  auto t = MetricSpace::table({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  // Every point maps onto {0, 1} at node 0 and onto {1} at node 1.
  auto map = InclusionMap::table({{{0, 1}, {0, 1}, {0, 1}}, {{1}, {1}, {1}}});
  CompactSet all(t, {Point(std::size_t{0}), Point(std::size_t{1}), Point(std::size_t{2})});
  CompactSet x0(t, {Point(std::size_t{0})});
  InclusionProblem p{t, Grid({0, 1}), map, 0.0, {0, 1}, {all, all}, 0.0, all, x0};
  auto rep = validate_problem(p, 10);
  CHECK(rep.all_pass());
  auto sol = solve_inclusion(p);
  CHECK(sol.converged);
  CHECK(sol.residual == 0.0);
  CHECK(sol.trajectory[0] == x0);
  CHECK(sol.trajectory[1] == CompactSet(t, {Point(std::size_t{1})}));
  CHECK(sol.seed_preserved);
}

TEST_CASE("residual") {
  auto s = MetricSpace::euclidean(1);
  auto m = InclusionMap::cantor();
  GridMultifunction fixed(Grid({0, 0.5}), {reals(s, {0, 1}), reals(s, {0, 1})});
  CHECK(residual(m, fixed) == 0.0);
  // F(0, X) = {0, 1} whatever X is, so moving a point at t = 0 by delta costs delta.
  const double delta = 0.01;
  GridMultifunction moved(Grid({0, 0.5}), {reals(s, {0, 1 - delta}), reals(s, {0, 1})});
  CHECK(residual(m, moved) >= delta - 1e-9);
}

TEST_CASE("cantor grid must stay in [0, 1/2]") {
  CHECK_THROWS_AS(fixtures::cantor_problem({0.0, 0.6}), DomainError);
  CHECK_THROWS_AS(fixtures::cantor_problem({-0.1, 0.2}), DomainError);
}
