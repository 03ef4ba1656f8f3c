#include "setvar/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace setvar::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw FormatError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

json check_json(const BoundCheck& c) {
  return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}, {"pass", c.pass}};
}

json condition_json(const ConditionReport& c) {
  json j = {{"name", c.name}, {"pass", c.pass}, {"checks", c.checks}};
  j["worst_slack"] = std::isfinite(c.worst_slack) ? json(c.worst_slack) : json(nullptr);
  if (!c.first_violation.empty()) j["first_violation"] = c.first_violation;
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------

json to_json(const MetricSpace& s) {
  json j = {{"kind", to_string(s.kind())}};
  if (s.is_table()) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < s.dim(); ++k) row.push_back(s.table_distance(i, k));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  } else {
    j["dim"] = s.dim();
  }
  if (s.tolerance() != kDefaultTolerance) j["tolerance"] = s.tolerance();
  return j;
}

SpacePtr space_from_json(const json& j) {
  const auto& kind = field(j, "kind");
  if (!kind.is_string()) throw FormatError("space kind must be a string");
  const double tol = j.contains("tolerance") ? number(j["tolerance"], "tolerance") : kDefaultTolerance;
  const auto k = kind.get<std::string>();
  if (k == "euclidean") return MetricSpace::euclidean(count(field(j, "dim"), "dim"), tol);
  if (k == "l1seq") return MetricSpace::l1seq(count(field(j, "dim"), "dim"), tol);
  if (k == "table") {
    const auto& m = field(j, "matrix");
    if (!m.is_array()) throw FormatError("matrix must be an array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& r : m) rows.push_back(numbers(r, "matrix row"));
    return MetricSpace::table(std::move(rows), tol);
  }
  throw FormatError("unknown space kind '" + k + "'");
}

SpacePtr parse_space_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto kind = spec.substr(0, colon);
    const auto rest = spec.substr(colon + 1);
    std::size_t dim = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), dim);
    if (ec != std::errc() || ptr != rest.data() + rest.size())
      throw FormatError("bad dimension in space spec '" + spec + "'");
    if (kind == "euclidean") return MetricSpace::euclidean(dim);
    if (kind == "l1seq") return MetricSpace::l1seq(dim);
    throw FormatError("unknown space kind in '" + spec + "'");
  }
  return space_from_json(read_json_file(spec));
}

json to_json(const Point& p) {
  if (p.is_index()) return p.index();
  json a = json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

Point point_from_json(const json& j) {
  if (j.is_number_integer() && j.get<long long>() >= 0) return Point(j.get<std::size_t>());
  if (j.is_array()) return Point(numbers(j, "point coordinate"));
  throw FormatError("a point is an array of numbers or a nonnegative integer");
}

json to_json(const CompactSet& x) {
  json a = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) a.push_back(to_json(x.point(i)));
  return a;
}

CompactSet set_from_json(const json& j, const SpacePtr& space) {
  if (!j.is_array()) throw FormatError("a set is an array of points");
  std::vector<Point> pts;
  for (const auto& p : j) pts.push_back(point_from_json(p));
  return CompactSet(space, std::move(pts));
}

CompactSet set_document_from_json(const json& j, const SpacePtr& fallback) {
  if (j.is_object()) return set_from_json(field(j, "points"), space_from_json(field(j, "space")));
  if (!j.is_array() || j.empty()) throw FormatError("a set document is a nonempty array or {space, points}");
  if (fallback) return set_from_json(j, fallback);
  const auto& first = j.front();
  if (!first.is_array()) throw FormatError("table-space sets need an explicit space");
  return set_from_json(j, MetricSpace::euclidean(first.size()));
}

json set_document(const CompactSet& x) { return {{"space", to_json(x.space())}, {"points", to_json(x)}}; }

json to_json(const Grid& g) { return g.nodes(); }

json to_json(const GridMultifunction& f) {
  json vals = json::array();
  for (const auto& v : f.values()) vals.push_back(to_json(v));
  json j = {{"space", to_json(f.space())}, {"grid", to_json(f.grid())}, {"values", std::move(vals)}};
  if (f.grid().tolerance() != kDefaultTolerance) j["grid_tolerance"] = f.grid().tolerance();
  return j;
}

GridMultifunction multifunction_from_json(const json& j) {
  auto space = space_from_json(field(j, "space"));
  const double gtol = j.contains("grid_tolerance") ? number(j["grid_tolerance"], "grid_tolerance") : kDefaultTolerance;
  Grid grid(numbers(field(j, "grid"), "grid"), gtol);
  const auto& vals = field(j, "values");
  if (!vals.is_array()) throw FormatError("values must be an array of sets");
  std::vector<CompactSet> sets;
  for (const auto& v : vals) sets.push_back(set_from_json(v, space));
  return GridMultifunction(std::move(grid), std::move(sets));
}

json to_json(const VariationReport& r) {
  return {{"jordan", r.jordan},          {"right", r.right},
          {"left", r.left},              {"nodes", r.nodes},
          {"v", r.v_profile},            {"v_right", r.v_right_profile},
          {"v_left", r.v_left_profile},  {"modulus", r.modulus}};
}

std::string variation_csv(const VariationReport& r) {
  std::ostringstream os;
  os << "t,v,v_right,v_left\n";
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    os << format_double(r.nodes[i]) << ',' << format_double(r.v_profile[i]) << ','
       << format_double(r.v_right_profile[i]) << ',' << format_double(r.v_left_profile[i]) << '\n';
  return os.str();
}

json to_json(const SelectorCertificate& c) {
  json checks = json::array();
  for (const auto& q : c.checks) checks.push_back({{"name", q.name}, {"lhs", q.lhs}, {"rhs", q.rhs}, {"pass", q.pass}});
  return {{"direction", to_string(c.direction)},
          {"t0", c.t0},
          {"tolerance", c.tolerance},
          {"containment_ok", c.containment_ok},
          {"jump", c.jump},
          {"checks", std::move(checks)},
          {"all_pass", c.all_pass}};
}

// ---------------------------------------------------------------------------

json to_json(const InclusionMap& m) {
  json j = {{"kind", m.kind()}};
  if (m.kind() == "scaling") j["phi0"] = m.phi0();
  else if (m.kind() == "table") j["images"] = m.images();
  else if (m.kind() != "cantor") throw FormatError("map '" + m.kind() + "' cannot be serialized");
  return j;
}

InclusionMap map_from_json(const json& j, std::size_t nodes) {
  const auto& kind = field(j, "kind");
  if (!kind.is_string()) throw FormatError("map kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "cantor") return InclusionMap::cantor();
  if (k == "scaling") {
    auto phi0 = numbers(field(j, "phi0"), "phi0");
    if (phi0.size() != nodes) throw FormatError("phi0 needs one value per grid node");
    return InclusionMap::scaling(std::move(phi0));
  }
  if (k == "table") {
    const auto& im = field(j, "images");
    std::vector<std::vector<std::vector<std::size_t>>> images;
    if (!im.is_array()) throw FormatError("images must be a per-node array");
    for (const auto& node : im) {
      if (!node.is_array()) throw FormatError("images[node] must be a per-point array");
      auto& row = images.emplace_back();
      for (const auto& img : node) {
        if (!img.is_array()) throw FormatError("images[node][point] must be an array of indices");
        auto& out = row.emplace_back();
        for (const auto& idx : img) out.push_back(count(idx, "image index"));
      }
    }
    if (images.size() != nodes) throw FormatError("images needs one entry per grid node");
    return InclusionMap::table(std::move(images));
  }
  throw FormatError("unknown map kind '" + k + "'");
}

json to_json(const InclusionProblem& p) {
  json bound = json::array();
  for (const auto& b : p.bound) bound.push_back(to_json(b));
  json j = {{"space", to_json(*p.space)},
            {"grid", to_json(p.grid)},
            {"map", to_json(p.map)},
            {"mu", p.mu},
            {"phi", p.phi},
            {"bound", std::move(bound)},
            {"bound_resolution", p.bound_resolution},
            {"x0", to_json(p.x0)},
            {"quantization", p.quantization},
            {"max_iter", p.max_iter},
            {"tol", p.tol},
            {"cardinality_cap", p.cardinality_cap}};
  if (p.domain) j["domain"] = to_json(*p.domain);
  return j;
}

InclusionProblem problem_from_json(const json& j) {
  auto space = space_from_json(field(j, "space"));
  Grid grid(numbers(field(j, "grid"), "grid"));
  auto map = map_from_json(field(j, "map"), grid.size());

  const auto& b = field(j, "bound");
  std::vector<CompactSet> bound;
  if (!b.is_array() || b.empty()) throw FormatError("bound must be a set or an array of per-node sets");
  // One set for every node, or a list of per-node sets.
  const auto& head = b.front();
  const bool single = space->is_table() ? head.is_number()
                                        : head.is_array() && !head.empty() && head.front().is_number();
  if (single) bound.assign(grid.size(), set_from_json(b, space));
  else
    for (const auto& s : b) bound.push_back(set_from_json(s, space));

  InclusionProblem p{space,
                     grid,
                     std::move(map),
                     number(field(j, "mu"), "mu"),
                     numbers(field(j, "phi"), "phi"),
                     std::move(bound),
                     j.contains("bound_resolution") ? number(j["bound_resolution"], "bound_resolution") : 0.0,
                     std::nullopt,
                     set_from_json(field(j, "x0"), space)};
  if (j.contains("domain")) p.domain = set_from_json(j["domain"], space);
  if (j.contains("quantization")) p.quantization = number(j["quantization"], "quantization");
  if (j.contains("max_iter")) p.max_iter = count(j["max_iter"], "max_iter");
  if (j.contains("tol")) p.tol = number(j["tol"], "tol");
  if (j.contains("cardinality_cap")) p.cardinality_cap = count(j["cardinality_cap"], "cardinality_cap");
  p.check();
  return p;
}

json to_json(const ValidationReport& r) {
  return {{"majorant", condition_json(r.majorant)},
          {"contraction", condition_json(r.contraction)},
          {"bounded", condition_json(r.bounded)},
          {"all_pass", r.all_pass()}};
}

json to_json(const InclusionSolution& s) {
  json coarse = json::array();
  for (const auto& c : s.coarsening) coarse.push_back({{"iteration", c.iteration}, {"node", c.node}, {"pitch", c.pitch}});
  return {{"trajectory", to_json(s.trajectory)},
          {"iterations", s.iterations},
          {"converged", s.converged},
          {"residual", s.residual},
          {"step_history", s.step_history},
          {"node_steps", s.node_steps},
          {"residual_history", s.residual_history},
          {"variation_history", s.variation_history},
          {"variation_check", check_json(s.variation_check)},
          {"initial_check", check_json(s.initial_check)},
          {"seed_fixed", s.seed_fixed},
          {"seed_preserved", s.seed_preserved},
          {"pitch", s.pitch},
          {"coarsening", std::move(coarse)}};
}

std::string iteration_csv(const InclusionSolution& s) {
  std::ostringstream os;
  os << "iteration,step,residual\n";
  const std::size_t n = s.step_history.size();
  for (std::size_t k = 0; k < n; ++k) {
    // residual_history[k] belongs to X_k, so X_{k+1} reads the next entry.
    const double res = k + 1 < s.residual_history.size() ? s.residual_history[k + 1] : s.residual;
    os << k + 1 << ',' << format_double(s.step_history[k]) << ',' << format_double(res) << '\n';
  }
  return os.str();
}

std::string points_csv(const GridMultifunction& f) {
  std::ostringstream os;
  const auto& sp = f.space();
  os << 't';
  if (sp.is_table()) os << ",index";
  else
    for (std::size_t c = 1; c <= sp.dim(); ++c) os << ",x" << c;
  os << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& x = f[i];
    for (std::size_t k = 0; k < x.size(); ++k) {
      os << format_double(f.grid()[i]);
      if (sp.is_table()) os << ',' << x.index(k);
      else
        for (double c : x.coords(k)) os << ',' << format_double(c);
      os << '\n';
    }
  }
  return os.str();
}

json to_json(const fixtures::Fixture& fx) {
  json j = {{"name", fx.name}, {"params", fx.params}, {"expected", fx.expected}};
  if (fx.multifunction) j["multifunction"] = to_json(*fx.multifunction);
  if (fx.problem) j["problem"] = to_json(*fx.problem);
  if (fx.t0) j["t0"] = *fx.t0;
  json sets = json::object();
  for (const auto& [name, s] : fx.sets) sets[name] = set_document(s);
  j["sets"] = std::move(sets);
  return j;
}

// ---------------------------------------------------------------------------

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

}  // namespace setvar::io
