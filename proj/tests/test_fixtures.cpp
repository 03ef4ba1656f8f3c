#include <doctest.h>

#include "setvar/fixtures.hpp"
#include "setvar/selector.hpp"

using namespace setvar;

namespace {

void check_variations(const fixtures::Fixture& fx, double eps) {
  const auto& f = *fx.multifunction;
  CHECK(dir_variation_right(f) == doctest::Approx(fx.expected.at("right_variation")).epsilon(eps));
  CHECK(dir_variation_left(f) == doctest::Approx(fx.expected.at("left_variation")).epsilon(eps));
  CHECK(jordan_variation(f) == doctest::Approx(fx.expected.at("jordan_variation")).epsilon(eps));
}

}  // namespace

TEST_CASE("example 5.1") {
  for (int trunc : {2, 10, 100}) {
    auto fx = fixtures::example_5_1(trunc);
    check_variations(fx, 1e-12);
    CHECK(dir_variation_left(*fx.multifunction) == 0.0);
  }
  auto fx = fixtures::example_5_1(100);
  CHECK(fx.expected.at("right_variation") == doctest::Approx(2.01));
  CHECK(excess(fx.sets.at("X"), fx.sets.at("Y")) == doctest::Approx(2.01));
  // The nearest point of the tail to u_1 is the last one.
  const auto& y = fx.sets.at("Y");
  const auto near = y.point(nearest_position(fx.sets.at("X0").point(0), y));
  CHECK(near.coords()[99] != 0.0);
  CHECK_THROWS_AS(fixtures::example_5_1(1), DomainError);
}

TEST_CASE("example 5.2") {
  auto fx = fixtures::example_5_2(1.0, 2, 10);
  check_variations(fx, 1e-12);
  CHECK(fx.expected.at("right_variation") == doctest::Approx(3.1));
  CHECK(fx.expected.at("left_variation") == doctest::Approx(17.0 / 6.0));
  CHECK(fx.expected.at("truncation_margin") == doctest::Approx(0.1));
  // Projection of any tail point onto X is a_N u_N.
  const auto& x = fx.sets.at("X");
  const auto& y = fx.sets.at("Y");
  for (std::size_t i = 0; i < y.size(); ++i)
    CHECK(project_onto(CompactSet(y.space_ptr(), {y.point(i)}), x) == fx.sets.at("projection"));

  auto neg = fixtures::example_5_2(-2.0, 3, 8);
  check_variations(neg, 1e-12);
  CHECK_THROWS_AS(fixtures::example_5_2(0.0, 2, 10), DomainError);
  CHECK_THROWS_AS(fixtures::example_5_2(1.0, 1, 10), DomainError);
  CHECK_THROWS_AS(fixtures::example_5_2(1.0, 4, 4), DomainError);
}

TEST_CASE("example 5.3") {
  auto fx = fixtures::example_5_3(1, 30);
  check_variations(fx, 1e-12);
  CHECK(fx.expected.at("left_variation") > 3.0);
  CHECK(is_nondecreasing(*fx.multifunction));
  CHECK(fx.multifunction->size() == 31);
  CHECK(fx.multifunction->grid().back() < 1.0);

  auto with0 = fixtures::example_5_3(2, 6, true);
  check_variations(with0, 1e-12);
  double h = 0.0;
  for (int n = 1; n <= 6; ++n) h += 1.0 / (2 * n + 1);
  CHECK(with0.expected.at("left_variation") == doctest::Approx(h).epsilon(1e-14));
  check_variations(fixtures::example_5_3(3, 4), 1e-12);

  CHECK_THROWS_AS(fixtures::example_5_3(0, 5), DomainError);
  CHECK_THROWS_AS(fixtures::example_5_3(1, 1), DomainError);
}

TEST_CASE("example 5.4") {
  auto fx = fixtures::example_5_4(1, 3, 3);
  CHECK(fx.expected.at("subset_lower_bound") == 0.25);
  CHECK(*fx.t0 == 0.875);
  CHECK(fx.sets.at("X0").size() == 3);
  CHECK(min_hausdorff_over_subsets(fx.sets.at("X0"), fx.multifunction->values().front()) >= 0.25);
  CHECK_THROWS_AS(fixtures::example_5_4(1, 3, 4), DomainError);
  CHECK_THROWS_AS(fixtures::example_5_4(1, 3, 0), DomainError);
}

TEST_CASE("example 5.5") {
  for (int m : {2, 10}) check_variations(fixtures::example_5_5(m), 1e-15);
  auto fx = fixtures::example_5_5(10);
  CHECK(fx.expected.at("left_variation") == 18.0);
  auto two = *fixtures::example_5_5(2).multifunction;
  CHECK(jordan_variation(two) == 2.0);
  CHECK_THROWS_AS(fixtures::example_5_5(1), DomainError);
}

TEST_CASE("cantor and scaling fixtures") {
  auto c = fixtures::cantor_problem(fixtures::cantor_default_grid());
  const auto& p = *c.problem;
  CHECK(p.mu == 0.5);
  CHECK(p.phi == p.grid.nodes());
  // F(0, X) = {0, 1} for any X.
  auto any = CompactSet(p.space, {Point(std::vector<double>{0.2}), Point(std::vector<double>{0.9})});
  CHECK(p.map(0, 0.0, any) == p.x0);

  auto s = fixtures::make("scaling", {});
  CHECK(s.problem->mu == 0.5);
  auto space = MetricSpace::euclidean(1);
  CompactSet k(space, {Point(std::vector<double>{0}), Point(std::vector<double>{1})});
  CompactSet x0(space, {Point(std::vector<double>{0})});
  CHECK_THROWS_AS(fixtures::scaling_problem({0, 1}, {0.5, 1.0}, k, x0), DomainError);
  CHECK_THROWS_AS(fixtures::scaling_problem({0, 1}, {0.5, 0.4}, k, x0), DomainError);
  CHECK_THROWS_AS(fixtures::scaling_problem({0, 1}, {0.5}, k, x0), DomainError);
  auto ok = fixtures::scaling_problem({0, 1}, {0.25, 0.5}, k, x0);
  CHECK(ok.problem->phi == std::vector<double>{0.25, 0.5});
  CHECK(ok.expected.at("variation_bound") == 0.5);
}

TEST_CASE("registry") {
  for (const auto& n : fixtures::names()) CHECK_NOTHROW(fixtures::make(n, {}));
  CHECK(fixtures::make("example_5_2", {{"alpha", "2"}, {"N", "3"}, {"trunc", "6"}}).params.at("alpha") == 2.0);
  CHECK_THROWS_AS(fixtures::make("nope", {}), DomainError);
  CHECK_THROWS_AS(fixtures::make("example_5_1", {{"trunc", "ten"}}), DomainError);
  CHECK_THROWS_AS(fixtures::make("example_5_1", {{"trunc", "2.5"}}), DomainError);
  CHECK_THROWS_AS(fixtures::make("example_5_1", {{"size", "3"}}), DomainError);
}

TEST_CASE("fixtures are deterministic") {
  auto a = fixtures::example_5_3(2, 5);
  auto b = fixtures::example_5_3(2, 5);
  CHECK(*a.multifunction == *b.multifunction);
  CHECK(a.expected == b.expected);
}
