#include "setvar/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "setvar/kernels.hpp"

namespace setvar {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::euclidean: return "euclidean";
    case SpaceKind::l1seq: return "l1seq";
    case SpaceKind::table: return "table";
  }
  return "unknown";
}

std::string Point::str() const {
  std::ostringstream os;
  os.precision(17);
  if (is_index()) {
    os << index();
    return os.str();
  }
  os << '[';
  auto c = coords();
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? ", " : "") << c[k];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// MetricSpace

MetricSpace::MetricSpace(SpaceKind kind, std::size_t dim, double tolerance, std::vector<double> matrix)
    : kind_(kind), dim_(dim), tolerance_(tolerance), matrix_(std::move(matrix)) {
  if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_))
    throw DomainError("tolerance must be a finite nonnegative number");
}

SpacePtr MetricSpace::euclidean(std::size_t dim, double tolerance) {
  if (dim == 0) throw DomainError("euclidean space needs dim >= 1");
  return SpacePtr(new MetricSpace(SpaceKind::euclidean, dim, tolerance, {}));
}

SpacePtr MetricSpace::l1seq(std::size_t dim, double tolerance) {
  if (dim == 0) throw DomainError("l1seq space needs dim >= 1");
  return SpacePtr(new MetricSpace(SpaceKind::l1seq, dim, tolerance, {}));
}

SpacePtr MetricSpace::table(std::vector<std::vector<double>> rows, double tolerance) {
  const std::size_t n = rows.size();
  if (n == 0) throw DomainError("distance table is empty");
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DomainError("distance table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = rows[i][j];
      if (!std::isfinite(d) || d < 0.0)
        throw DomainError("distance table entries must be finite and nonnegative");
      m[i * n + j] = d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i * n + i] != 0.0) throw DomainError("distance table diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m[i * n + j] - m[j * n + i]) > tolerance)
        throw DomainError("distance table is not symmetric at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
      if (m[i * n + j] <= tolerance)
        throw DomainError("distinct table points must be farther apart than the tolerance");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (m[i * n + k] > m[i * n + j] + m[j * n + k] + tolerance)
          throw DomainError("distance table violates the triangle inequality at (" +
                            std::to_string(i) + ", " + std::to_string(j) + ", " +
                            std::to_string(k) + ")");
  return SpacePtr(new MetricSpace(SpaceKind::table, n, tolerance, std::move(m)));
}

double MetricSpace::coord_distance(std::span<const double> a, std::span<const double> b) const {
  double s = 0.0;
  if (kind_ == SpaceKind::l1seq) {
    for (std::size_t k = 0; k < dim_; ++k) s += std::abs(a[k] - b[k]);
    return s;
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double MetricSpace::distance(const Point& a, const Point& b) const {
  check_point(a);
  check_point(b);
  if (is_table()) return table_distance(a.index(), b.index());
  return coord_distance(a.coords(), b.coords());
}

void MetricSpace::check_point(const Point& p) const {
  if (is_table()) {
    if (!p.is_index()) throw DomainError("table space expects an integer point, got " + p.str());
    if (p.index() >= dim_)
      throw DomainError("table index " + std::to_string(p.index()) + " out of range [0, " +
                        std::to_string(dim_) + ")");
    return;
  }
  if (p.is_index()) throw DomainError(to_string(kind_) + " space expects a coordinate point");
  if (p.coords().size() != dim_)
    throw DomainError("point " + p.str() + " has " + std::to_string(p.coords().size()) +
                      " coordinates, space has dim " + std::to_string(dim_));
  for (double c : p.coords())
    if (!std::isfinite(c)) throw DomainError("point coordinates must be finite");
}

bool MetricSpace::same_as(const MetricSpace& other) const {
  return kind_ == other.kind_ && dim_ == other.dim_ && tolerance_ == other.tolerance_ &&
         matrix_ == other.matrix_;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// ---------------------------------------------------------------------------
// CompactSet

namespace {

// True when the two coordinate vectors lie within `tol` of each other.
bool within(const MetricSpace& s, std::span<const double> a, std::span<const double> b, double tol) {
  double acc = 0.0;
  if (s.kind() == SpaceKind::l1seq) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      acc += std::abs(a[k] - b[k]);
      if (acc > tol) return false;
    }
    return true;
  }
  const double tol2 = tol * tol;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    acc += d * d;
    if (acc > tol2) return false;
  }
  return true;
}

}  // namespace

CompactSet::CompactSet(SpacePtr space, std::vector<Point> points) : space_(std::move(space)) {
  if (!space_) throw DomainError("compact set needs a metric space");
  if (points.empty()) throw DomainError("compact sets must be nonempty");
  for (const auto& p : points) space_->check_point(p);
  std::sort(points.begin(), points.end());

  if (space_->is_table()) {
    for (const auto& p : points)
      if (indices_.empty() || indices_.back() != p.index()) indices_.push_back(p.index());
    size_ = indices_.size();
    return;
  }

  const std::size_t dim = space_->dim();
  const double tol = space_->tolerance();
  coords_.reserve(points.size() * dim);
  for (const auto& p : points) {
    auto c = p.coords();
    bool duplicate = false;
    // Kept elements are sorted by first coordinate; anything within tol of
    // c differs from it by at most tol there.
    for (std::size_t k = size_; k-- > 0;) {
      std::span<const double> kept(coords_.data() + k * dim, dim);
      if (kept[0] < c[0] - tol) break;
      if (within(*space_, kept, c, tol)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    coords_.insert(coords_.end(), c.begin(), c.end());
    ++size_;
  }
}

CompactSet::CompactSet(Canonical, SpacePtr space, std::vector<double> coords,
                       std::vector<std::size_t> indices, std::size_t size)
    : space_(std::move(space)), size_(size), coords_(std::move(coords)), indices_(std::move(indices)) {}

Point CompactSet::point(std::size_t i) const {
  if (space_->is_table()) return Point(indices_[i]);
  auto c = coords(i);
  return Point(std::vector<double>(c.begin(), c.end()));
}

std::vector<Point> CompactSet::points() const {
  std::vector<Point> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(point(i));
  return out;
}

CompactSet CompactSet::subset(std::span<const std::size_t> positions) const {
  if (positions.empty()) throw DomainError("compact sets must be nonempty");
  std::vector<std::size_t> pos(positions.begin(), positions.end());
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end() || pos.back() >= size_)
    throw DomainError("subset positions must be distinct and in range");
  if (space_->is_table()) {
    std::vector<std::size_t> idx;
    idx.reserve(pos.size());
    for (auto p : pos) idx.push_back(indices_[p]);
    return CompactSet(Canonical{}, space_, {}, std::move(idx), pos.size());
  }
  const std::size_t dim = space_->dim();
  std::vector<double> c;
  c.reserve(pos.size() * dim);
  for (auto p : pos) c.insert(c.end(), coords_.begin() + p * dim, coords_.begin() + (p + 1) * dim);
  return CompactSet(Canonical{}, space_, std::move(c), {}, pos.size());
}

double CompactSet::element_distance(std::size_t i, const CompactSet& other, std::size_t j) const {
  if (space_->is_table()) return space_->table_distance(indices_[i], other.indices_[j]);
  return space_->coord_distance(coords(i), other.coords(j));
}

bool operator==(const CompactSet& a, const CompactSet& b) {
  return same_space(a.space_, b.space_) && a.size_ == b.size_ && a.coords_ == b.coords_ &&
         a.indices_ == b.indices_;
}

// ---------------------------------------------------------------------------
// Set distances

void require_same_space(const CompactSet& a, const CompactSet& b) {
  if (!same_space(a.space_ptr(), b.space_ptr()))
    throw DomainError("sets live in different metric spaces");
}

double dist_point_set(const Point& x, const CompactSet& y) {
  const auto& s = y.space();
  s.check_point(x);
  double best = INFINITY;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double d = s.is_table() ? s.table_distance(x.index(), y.index(j))
                                  : s.coord_distance(x.coords(), y.coords(j));
    best = std::min(best, d);
  }
  return best;
}

double excess(const CompactSet& x, const CompactSet& y) {
  require_same_space(x, y);
  return kernels::excess_parallel(x, y);
}

double hausdorff(const CompactSet& x, const CompactSet& y) {
  require_same_space(x, y);
  return std::max(kernels::excess_parallel(x, y), kernels::excess_parallel(y, x));
}

CompactSet project_onto(const CompactSet& x, const CompactSet& y) {
  require_same_space(x, y);
  const double tol = x.space().tolerance();
  const auto nearest = kernels::nearest_distances_parallel(x, y);
  std::vector<char> hit(y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!hit[j] && x.element_distance(i, y, j) <= nearest[i] + tol) hit[j] = 1;
  std::vector<std::size_t> positions;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (hit[j]) positions.push_back(j);
  return y.subset(positions);
}

bool is_subset(const CompactSet& x, const CompactSet& y) {
  return excess(x, y) <= x.space().tolerance();
}

std::size_t nearest_position(const Point& x, const CompactSet& y) {
  const auto& s = y.space();
  s.check_point(x);
  std::vector<double> d(y.size());
  for (std::size_t j = 0; j < y.size(); ++j)
    d[j] = s.is_table() ? s.table_distance(x.index(), y.index(j)) : s.coord_distance(x.coords(), y.coords(j));
  const double best = *std::min_element(d.begin(), d.end());
  for (std::size_t j = 0; j < y.size(); ++j)
    if (d[j] <= best + s.tolerance()) return j;
  return 0;
}

}  // namespace setvar
