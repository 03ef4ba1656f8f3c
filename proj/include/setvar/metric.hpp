#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace setvar {

/// Raised for contract violations: mismatched spaces, empty sets, bad grids,
/// nodes that are not on the grid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kDefaultTolerance = 1e-9;

enum class SpaceKind { euclidean, l1seq, table };

std::string to_string(SpaceKind kind);

/// An element of a metric space: a coordinate vector (euclidean, l1seq) or
/// an index into a distance table.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : value_(std::move(coords)) {}
  explicit Point(std::size_t index) : value_(index) {}

  bool is_index() const { return std::holds_alternative<std::size_t>(value_); }
  std::size_t index() const { return std::get<std::size_t>(value_); }
  std::span<const double> coords() const { return std::get<std::vector<double>>(value_); }

  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.value_ <=> b.value_; }

 private:
  std::variant<std::vector<double>, std::size_t> value_;
};

class MetricSpace;
using SpacePtr = std::shared_ptr<const MetricSpace>;

/// A distance oracle. Coordinate spaces measure vectors of length `dim()`;
/// table spaces look up an n x n matrix validated as a metric on load.
///
/// The space also owns the absolute tolerance used for every equality and
/// minimizer-attainment comparison on sets living in it.
class MetricSpace {
 public:
  static SpacePtr euclidean(std::size_t dim, double tolerance = kDefaultTolerance);
  static SpacePtr l1seq(std::size_t dim, double tolerance = kDefaultTolerance);
  static SpacePtr table(std::vector<std::vector<double>> matrix,
                        double tolerance = kDefaultTolerance);

  SpaceKind kind() const { return kind_; }
  /// Coordinate count, or the number of table points.
  std::size_t dim() const { return dim_; }
  double tolerance() const { return tolerance_; }
  bool is_table() const { return kind_ == SpaceKind::table; }
  const std::vector<double>& matrix() const { return matrix_; }

  double table_distance(std::size_t i, std::size_t j) const { return matrix_[i * dim_ + j]; }
  double coord_distance(std::span<const double> a, std::span<const double> b) const;
  double distance(const Point& a, const Point& b) const;

  /// Throws DomainError unless `p` is a valid element of this space.
  void check_point(const Point& p) const;

  /// Value equality: same kind, dimension, tolerance, and table entries.
  bool same_as(const MetricSpace& other) const;

 private:
  MetricSpace(SpaceKind kind, std::size_t dim, double tolerance, std::vector<double> matrix);

  SpaceKind kind_;
  std::size_t dim_;
  double tolerance_;
  std::vector<double> matrix_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);

/// A nonempty finite point set, deduplicated within the space tolerance and
/// kept in canonical order (lexicographic coordinates, ascending indices).
/// Coordinates are stored flat, row-major.
class CompactSet {
 public:
  CompactSet(SpacePtr space, std::vector<Point> points);

  const SpacePtr& space_ptr() const { return space_; }
  const MetricSpace& space() const { return *space_; }

  std::size_t size() const { return size_; }
  Point point(std::size_t i) const;
  std::vector<Point> points() const;

  std::span<const double> coords(std::size_t i) const {
    return {coords_.data() + i * space_->dim(), space_->dim()};
  }
  std::size_t index(std::size_t i) const { return indices_[i]; }

  /// Elements at the given positions. Positions must be valid and distinct.
  CompactSet subset(std::span<const std::size_t> positions) const;

  /// Distance between element `i` of this set and element `j` of `other`.
  double element_distance(std::size_t i, const CompactSet& other, std::size_t j) const;

  /// Identical elements in the same space (exact, not within tolerance).
  friend bool operator==(const CompactSet& a, const CompactSet& b);

 private:
  struct Canonical {};
  CompactSet(Canonical, SpacePtr space, std::vector<double> coords, std::vector<std::size_t> indices,
             std::size_t size);

  SpacePtr space_;
  std::size_t size_ = 0;
  std::vector<double> coords_;
  std::vector<std::size_t> indices_;
};

void require_same_space(const CompactSet& a, const CompactSet& b);

/// d(x, Y) = min over y in Y of d(x, y).
double dist_point_set(const Point& x, const CompactSet& y);

/// Pompeiu excess e(X, Y) = max over x in X of d(x, Y).
double excess(const CompactSet& x, const CompactSet& y);

/// Pompeiu-Hausdorff distance max(e(X,Y), e(Y,X)).
double hausdorff(const CompactSet& x, const CompactSet& y);

/// Metric projection Pr_Y X: the points of Y attaining d(x, Y) for some
/// x in X, attainment tested within the space tolerance.
CompactSet project_onto(const CompactSet& x, const CompactSet& y);

/// X within Y up to tolerance, i.e. e(X, Y) <= tol.
bool is_subset(const CompactSet& x, const CompactSet& y);

/// Position in `y` of the canonically smallest element attaining d(x, Y).
std::size_t nearest_position(const Point& x, const CompactSet& y);

}  // namespace setvar
