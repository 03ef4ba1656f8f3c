#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "setvar/metric.hpp"

namespace setvar {

/// Strictly increasing finite list of nodes t_0 < t_1 < ... < t_m.
class Grid {
 public:
  explicit Grid(std::vector<double> nodes, double tolerance = kDefaultTolerance);

  const std::vector<double>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  double front() const { return nodes_.front(); }
  double back() const { return nodes_.back(); }
  double tolerance() const { return tolerance_; }

  std::optional<std::size_t> find(double t) const;
  /// Like find(), throwing DomainError when t is not a node.
  std::size_t index_of(double t) const;

  friend bool operator==(const Grid& a, const Grid& b) { return a.nodes_ == b.nodes_; }

 private:
  std::vector<double> nodes_;
  double tolerance_;
};

/// Half-open range [begin, end) of node positions.
struct NodeRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t count() const { return end > begin ? end - begin : 0; }
};

/// Step multifunction F : T -> c(M), one compact set per grid node.
class GridMultifunction {
 public:
  GridMultifunction(Grid grid, std::vector<CompactSet> values);

  const SpacePtr& space_ptr() const { return values_.front().space_ptr(); }
  const MetricSpace& space() const { return values_.front().space(); }
  const Grid& grid() const { return grid_; }
  const std::vector<CompactSet>& values() const { return values_; }
  const CompactSet& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  NodeRange all() const { return {0, size()}; }
  /// Nodes inside the closed interval [lo, hi], membership within grid tolerance.
  NodeRange range(double lo, double hi) const;

  GridMultifunction restrict(NodeRange r) const;
  /// G(s) = F(-s) on the reflected grid; swaps right and left excess variations.
  GridMultifunction reversed() const;

  friend bool operator==(const GridMultifunction& a, const GridMultifunction& b) {
    return a.grid_ == b.grid_ && a.values_ == b.values_;
  }

 private:
  Grid grid_;
  std::vector<CompactSet> values_;
};

enum class Side { right, left };

struct VariationReport {
  double jordan = 0.0;
  double right = 0.0;
  double left = 0.0;
  std::vector<double> nodes;
  std::vector<double> v_profile;
  std::vector<double> v_right_profile;
  std::vector<double> v_left_profile;
  /// nu_1 ... nu_m for an m-interval grid.
  std::vector<double> modulus;
};

// Variations over a node range. Fewer than two nodes gives 0.
double jordan_variation(const GridMultifunction& f, NodeRange r);
double dir_variation_right(const GridMultifunction& f, NodeRange r);
double dir_variation_left(const GridMultifunction& f, NodeRange r);
double dir_variation(const GridMultifunction& f, NodeRange r, Side side);

double jordan_variation(const GridMultifunction& f, double lo, double hi);
double dir_variation_right(const GridMultifunction& f, double lo, double hi);
double dir_variation_left(const GridMultifunction& f, double lo, double hi);

double jordan_variation(const GridMultifunction& f);
double dir_variation_right(const GridMultifunction& f);
double dir_variation_left(const GridMultifunction& f);

VariationReport variation_profile(const GridMultifunction& f);

/// nu_k: largest sum of d_H(F(s_i), F(t_i)) over s_1 <= t_1 <= ... <= s_k <= t_k.
double modulus_of_variation(const GridMultifunction& f, std::size_t k);
/// nu_1 ... nu_kmax in one dynamic-programming sweep.
std::vector<double> modulus_sequence(const GridMultifunction& f, std::size_t kmax);

bool is_nondecreasing(const GridMultifunction& f);
bool is_nonincreasing(const GridMultifunction& f);

/// Prefix directional variation; satisfies check_majorant(f, result, side).
std::vector<double> canonical_majorant(const GridMultifunction& f, Side side = Side::right);

/// phi nondecreasing and, for every pair s <= t of nodes,
///   right: e(F(s), F(t)) <= phi(t) - phi(s)
///   left:  e(F(t), F(s)) <= phi(t) - phi(s)
/// within tolerance. All O(m^2) pairs are tested.
bool check_majorant(const GridMultifunction& f, const std::vector<double>& phi, Side side = Side::right);

/// d_H between F(t0) and its neighbour on `side`; 0 at the extreme node.
double jump_at(const GridMultifunction& f, double t0, Side side);

/// Jordan variation of a real-valued grid function.
double real_variation(const std::vector<double>& values);

}  // namespace setvar
