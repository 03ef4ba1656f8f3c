#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setvar/metric.hpp"
#include "setvar/multifun.hpp"

namespace setvar {

enum class Direction { right, left, two_sided };

std::string to_string(Direction d);
Direction parse_direction(std::string_view s);

/// One checked inequality lhs <= rhs + tolerance.
struct Inequality {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// Recomputed bounds for a selector Gamma of F seeded with X0 at t0.
///
/// Checks, by direction (a = first node, b = last node):
///   right:     initial_gap   d_H(X0, G(t0))              <= e(X0, F(t0))
///              right_segment V(G, [t0, b])               <= V+(F, [t0, b])
///              left_segment  V(G, [a, t0))               <= V+(F, [a, t0))
///              total         V(G) - J_a(G, t0)           <= sum of the two V+ terms
///              total_vs_dir  sum of the two V+ terms     <= V+(F)
///   left:      mirror image with V-, segments (t0, b] and [a, t0], jump J_b.
///   two_sided: segments [t0, b] against V+ and [a, t0] against V-, total
///              V(G) <= V+(F, [t0, b]) + V-(F, [a, t0]) <= V(F).
struct SelectorCertificate {
  Direction direction = Direction::right;
  double tolerance = kDefaultTolerance;
  double t0 = 0.0;
  bool containment_ok = false;
  double jump = 0.0;
  std::vector<Inequality> checks;
  bool all_pass = false;

  const Inequality& at(std::string_view name) const;
};

struct SelectorResult {
  GridMultifunction selector;
  SelectorCertificate certificate;
};

struct SingleSelectorResult {
  std::vector<Point> path;
  SelectorCertificate certificate;
};

struct SelectorOptions {
  /// Seed for the greedy pass over the nodes before t0 (after t0 for the
  /// left variant). Defaults to X0.
  std::optional<CompactSet> segment_seed;
};

/// Forward greedy projections: G(t0) = Pr_{F(t0)} X0, then each next node
/// projects the previous value; nodes before t0 get their own pass from the
/// first node.
SelectorResult select_bv_right(const GridMultifunction& f, double t0, const CompactSet& x0,
                               const SelectorOptions& opts = {});
SelectorResult select_bv_left(const GridMultifunction& f, double t0, const CompactSet& x0,
                              const SelectorOptions& opts = {});
SelectorResult select_bv_two_sided(const GridMultifunction& f, double t0, const CompactSet& x0);
SelectorResult select_bv(const GridMultifunction& f, double t0, const CompactSet& x0, Direction d,
                         const SelectorOptions& opts = {});

/// Same recursions, keeping one nearest point per step (canonically smallest on ties).
SingleSelectorResult select_single_valued(const GridMultifunction& f, double t0, const Point& x0,
                                          Direction d);

/// Rebuilds every certificate inequality from metric and variation primitives only.
SelectorCertificate verify_certificate(const GridMultifunction& f, const GridMultifunction& gamma, double t0,
                                       const CompactSet& x0, Direction d = Direction::right);

/// Singleton-valued multifunction through the given points on F's grid.
GridMultifunction path_as_multifunction(const GridMultifunction& f, const std::vector<Point>& path);

/// min over nonempty G within S of d_H(X0, G), by enumerating all 2^|S| - 1 subsets.
/// |S| is limited to 20.
double min_hausdorff_over_subsets(const CompactSet& x0, const CompactSet& s);

}  // namespace setvar
