#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "setvar/metric.hpp"
#include "setvar/multifun.hpp"

namespace setvar {

/// The set map F(t, X) of a functional inclusion X(t) within F(t, X(t)).
///
/// Built-in kinds:
///   cantor   F(t, X) = tX  union  ((1 - t) + tX), coordinatewise
///   scaling  F(t_i, X) = phi0_i X
///   table    F(t_i, X) = union over x in X of images[i][x] (finite spaces)
/// Custom maps wrap any pure callable; they cannot be serialized.
class InclusionMap {
 public:
  using Fn = std::function<CompactSet(std::size_t node, double t, const CompactSet& x)>;

  static InclusionMap cantor();
  static InclusionMap scaling(std::vector<double> phi0);
  static InclusionMap table(std::vector<std::vector<std::vector<std::size_t>>> images);
  static InclusionMap custom(std::string name, Fn fn);

  const std::string& kind() const { return kind_; }
  const std::vector<double>& phi0() const { return phi0_; }
  const std::vector<std::vector<std::vector<std::size_t>>>& images() const { return images_; }

  CompactSet operator()(std::size_t node, double t, const CompactSet& x) const { return fn_(node, t, x); }

 private:
  std::string kind_;
  std::vector<double> phi0_;
  std::vector<std::vector<std::vector<std::size_t>>> images_;
  Fn fn_;
};

/// Data of the contraction theorem for functional inclusions.
///
/// `bound` is the per-node set K(t) of condition (c). When K is really a
/// continuum, `bound` holds a finite net of it and `bound_resolution` the net's
/// covering radius; containment is then tested as e(F(t,X), K(t)) <= radius.
/// `domain` is where validate_problem draws its sample arguments X.
struct InclusionProblem {
  SpacePtr space;
  Grid grid;
  InclusionMap map;
  double mu = 0.0;
  std::vector<double> phi;
  std::vector<CompactSet> bound;
  double bound_resolution = 0.0;
  std::optional<CompactSet> domain;
  CompactSet x0;
  double quantization = 1e-6;
  std::size_t max_iter = 100;
  double tol = 1e-6;
  std::size_t cardinality_cap = 4096;

  /// Throws DomainError on mu outside [0, 1), non-monotone phi, length or space mismatches.
  void check() const;
};

enum class Execution { serial, parallel };

struct ConditionReport {
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  /// min over checks of (rhs - lhs); negative means a violation was found.
  double worst_slack = INFINITY;
  std::string first_violation;
};

struct ValidationReport {
  ConditionReport majorant;     // (a)
  ConditionReport contraction;  // (b)
  ConditionReport bounded;      // (c)
  bool all_pass() const { return majorant.pass && contraction.pass && bounded.pass; }
};

/// Sampling check of conditions (a)-(c). A pass is evidence; a failure is a
/// concrete counterexample.
ValidationReport validate_problem(const InclusionProblem& p, std::size_t samples, std::uint64_t seed = 1);

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

struct CoarseningEvent {
  std::size_t iteration = 0;
  std::size_t node = 0;
  double pitch = 0.0;
};

struct InclusionSolution {
  GridMultifunction trajectory;
  std::size_t iterations = 0;
  bool converged = false;
  /// sup_t e(X(t), F(t, X(t))) against the unsnapped map.
  double residual = 0.0;
  /// Per iteration n >= 1: sup_t d_H(X_n(t), X_{n-1}(t)).
  std::vector<double> step_history{};
  /// Per iteration n >= 1, per node: d_H(X_n(t), X_{n-1}(t)).
  std::vector<std::vector<double>> node_steps{};
  /// Per iteration n >= 1: sup_t e(X_{n-1}(t), F(t, X_{n-1}(t))).
  std::vector<double> residual_history{};
  /// Per iteration n >= 1: V(X_n, T).
  std::vector<double> variation_history{};
  /// V(X, T) <= V(phi, T) / (1 - mu), slack = accumulated snapping error.
  BoundCheck variation_check{};
  /// d_H(X0, X(t0)) <= e(X0, F(t0, X(t0))), slack = tol.
  BoundCheck initial_check{};
  /// Set when X0 is inside F(t0, X0); then X(t0) must equal X0.
  bool seed_fixed = false;
  /// X(t0) == X0 exactly.
  bool seed_preserved = false;
  /// Largest lattice pitch used at any node (>= quantization after coarsening).
  double pitch = 0.0;
  std::vector<CoarseningEvent> coarsening{};
};

/// Snap coordinates to the lattice of the given pitch and deduplicate.
/// Table-space sets are returned unchanged.
CompactSet snap(const CompactSet& x, double pitch);

/// Iterates X_{n+1} = select_bv_right(F(., X_n(.)), t0, X0) from X_0(t) = X0.
InclusionSolution solve_inclusion(const InclusionProblem& p, Execution exec = Execution::parallel);

/// sup over nodes of e(X(t), F(t, X(t))).
double residual(const InclusionMap& map, const GridMultifunction& x);

}  // namespace setvar
