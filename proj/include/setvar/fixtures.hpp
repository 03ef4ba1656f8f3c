#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "setvar/inclusion.hpp"
#include "setvar/metric.hpp"
#include "setvar/multifun.hpp"

namespace setvar::fixtures {

/// A named instance with the closed-form values it should reproduce.
///
/// Sequence-space examples live in R^dim with the 1-norm; u_n is the n-th
/// unit vector (1-based).
struct Fixture {
  std::string name;
  std::map<std::string, double> params;
  std::optional<GridMultifunction> multifunction;
  std::optional<InclusionProblem> problem;
  std::map<std::string, double> expected;
  /// Auxiliary sets: selector seeds, named pieces of the construction.
  std::map<std::string, CompactSet> sets;
  std::optional<double> t0;
};

/// F = (X, Y, Y) on {0, 1/2, 1} with X = {u_1} + {a_n u_n : 2 <= n <= trunc},
/// a_n = 1 + 1/n, Y = X \ {u_1}.
Fixture example_5_1(int trunc);

/// F = (X, X, Y) on {0, 1/2, 1} with a_n = alpha (n+1)/n, X = {a_n u_n : n <= N},
/// Y = {a_n u_n : N < n <= trunc}. Seeds the left selector at t0 = 1 with
/// {a_{N+1} u_{N+1}}.
Fixture example_5_2(double alpha, int n_split, int trunc);

/// Nondecreasing F(tau_k) = X_{k+1}, X_n = {a_i u_i : i <= nN}, a_i = 1/i,
/// tau_k = 1 - 2^-k for k = 0..steps. `with_origin` adds 0 to every X_n.
Fixture example_5_3(int n_block, int steps, bool with_origin = false);

/// example_5_3 with t0 = tau_n and X0 = X_{n+1} \ X_1. Expected
/// `subset_lower_bound` = a_{(n+1)N}.
Fixture example_5_4(int n_block, int steps, int n, bool with_origin = false);

/// F(k) = {u_1, ..., u_k} on {1, ..., m}.
Fixture example_5_5(int m);

/// F(t, X) = tX + (1 - t + tX) on nodes in [0, 1/2], X0 = {0, 1}, mu = 1/2,
/// phi(t) = t, K = a net of [0, 1] with spacing 1/64.
Fixture cantor_problem(std::vector<double> grid_nodes, double quantization = 1e-6);

/// F(t_i, X) = phi0_i X with mu = max phi0, phi = phi0 * max |K|, K(t) = phi0(t) K.
Fixture scaling_problem(std::vector<double> grid_nodes, std::vector<double> phi0, const CompactSet& k,
                        const CompactSet& x0);

std::vector<double> cantor_default_grid();

/// Registry used by the CLI: builds a fixture from string parameters,
/// filling defaults for anything missing.
Fixture make(const std::string& name, const std::map<std::string, std::string>& params);
std::vector<std::string> names();

}  // namespace setvar::fixtures
