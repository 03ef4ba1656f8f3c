#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "setvar/fixtures.hpp"
#include "setvar/inclusion.hpp"
#include "setvar/metric.hpp"
#include "setvar/multifun.hpp"
#include "setvar/selector.hpp"

namespace setvar::io {

using json = nlohmann::json;

/// Raised for structurally invalid documents (wrong types, missing keys).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const MetricSpace& s);
SpacePtr space_from_json(const json& j);

/// "euclidean:3", "l1seq:100", or a path to a JSON space document.
SpacePtr parse_space_spec(const std::string& spec);

json to_json(const Point& p);
Point point_from_json(const json& j);

/// A set is a bare array of points.
json to_json(const CompactSet& x);
CompactSet set_from_json(const json& j, const SpacePtr& space);
/// Accepts {"space": ..., "points": [...]} or a bare array. A bare array needs
/// `fallback`; when that is null the space is Euclidean of the points' length.
CompactSet set_document_from_json(const json& j, const SpacePtr& fallback = nullptr);
json set_document(const CompactSet& x);

json to_json(const Grid& g);
json to_json(const GridMultifunction& f);
GridMultifunction multifunction_from_json(const json& j);

json to_json(const VariationReport& r);
/// Columns t, v, v_right, v_left; one row per node.
std::string variation_csv(const VariationReport& r);

json to_json(const SelectorCertificate& c);

json to_json(const InclusionMap& m);
InclusionMap map_from_json(const json& j, std::size_t nodes);
json to_json(const InclusionProblem& p);
InclusionProblem problem_from_json(const json& j);

json to_json(const ValidationReport& r);
json to_json(const InclusionSolution& s);
/// Columns iteration, step, residual; row n describes X_n.
std::string iteration_csv(const InclusionSolution& s);
/// Columns t, x1 .. x_dim (or t, index for table spaces); one row per point.
std::string points_csv(const GridMultifunction& f);

json to_json(const fixtures::Fixture& fx);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace setvar::io
