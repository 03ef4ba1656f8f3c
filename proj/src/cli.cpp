#include "setvar/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "setvar/fixtures.hpp"
#include "setvar/inclusion.hpp"
#include "setvar/io.hpp"
#include "setvar/multifun.hpp"
#include "setvar/selector.hpp"

namespace setvar::cli {

namespace {

using io::json;

// Thrown by command bodies to leave with a specific status.
struct Exit {
  int code;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) out << text;
  else io::write_text_file(path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CompactSet load_set(const std::string& path, const SpacePtr& space) {
  return io::set_document_from_json(io::read_json_file(path), space);
}

Point parse_point(const std::string& text, const MetricSpace& space) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw io::FormatError("bad point coordinate '" + item + "'");
    coords.push_back(v);
  }
  if (space.is_table()) {
    if (coords.size() != 1 || coords[0] < 0 || coords[0] != static_cast<double>(static_cast<std::size_t>(coords[0])))
      throw io::FormatError("a table-space point is one nonnegative integer");
    Point p(static_cast<std::size_t>(coords[0]));
    space.check_point(p);
    return p;
  }
  Point p(std::move(coords));
  space.check_point(p);
  return p;
}

// Multifunction documents may be bare, or wrapped by select / solve / fixture output.
GridMultifunction load_trajectory(const json& j) {
  for (const char* key : {"trajectory", "selector", "multifunction"})
    if (j.is_object() && j.contains(key)) return io::multifunction_from_json(j[key]);
  return io::multifunction_from_json(j);
}

// ---------------------------------------------------------------------------

struct PairArgs {
  std::string a, b, space;
};

void add_pair(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("A", args.a, "first set (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("B", args.b, "second set (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--space", args.space,
                  "space for bare point arrays: euclidean:n, l1seq:n or a JSON file (default euclidean)");
}

std::pair<CompactSet, CompactSet> load_pair(const PairArgs& args) {
  SpacePtr space = args.space.empty() ? nullptr : io::parse_space_spec(args.space);
  auto a = load_set(args.a, space);
  auto b = load_set(args.b, space ? space : a.space_ptr());
  require_same_space(a, b);
  return {std::move(a), std::move(b)};
}

struct VariationArgs {
  std::string file;
  std::vector<double> range;
  std::size_t modulus = 0;
  std::string format = "json";
  std::string out;
};

int cmd_variation(const VariationArgs& args, std::ostream& out) {
  auto f = load_trajectory(io::read_json_file(args.file));
  if (!args.range.empty()) {
    const auto r = f.range(args.range[0], args.range[1]);
    if (r.count() == 0) throw DomainError("range contains no grid nodes");
    f = f.restrict(r);
  }
  auto report = variation_profile(f);
  if (args.modulus > 0) report.modulus = modulus_sequence(f, args.modulus);
  emit(args.format == "csv" ? io::variation_csv(report) : dump(io::to_json(report)), args.out, out);
  return ok;
}

struct SelectArgs {
  std::string file, seed, direction = "right", single, out;
  double t0 = 0.0;
  bool strict = false;
};

int cmd_select(const SelectArgs& args, std::ostream& out) {
  auto f = load_trajectory(io::read_json_file(args.file));
  const auto dir = parse_direction(args.direction);
  json doc;
  SelectorCertificate cert;
  if (!args.single.empty()) {
    auto res = select_single_valued(f, args.t0, parse_point(args.single, f.space()), dir);
    json path = json::array();
    for (const auto& p : res.path) path.push_back(io::to_json(p));
    doc = {{"selector", io::to_json(path_as_multifunction(f, res.path))},
           {"path", std::move(path)},
           {"certificate", io::to_json(res.certificate)}};
    cert = std::move(res.certificate);
  } else {
    if (args.seed.empty()) throw io::FormatError("select needs --seed or --single");
    auto res = select_bv(f, args.t0, load_set(args.seed, f.space_ptr()), dir);
    doc = {{"selector", io::to_json(res.selector)}, {"certificate", io::to_json(res.certificate)}};
    cert = std::move(res.certificate);
  }
  emit(dump(doc), args.out, out);
  if (args.strict && !cert.all_pass) throw Exit{certificate_failed};
  return ok;
}

struct SolveArgs {
  std::string file, out;
  std::optional<double> tol, quant;
  std::optional<std::size_t> max_iter, cap;
  std::size_t validate = 0;
  bool serial = false, strict = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  auto doc = io::read_json_file(args.file);
  auto p = io::problem_from_json(doc.is_object() && doc.contains("problem") ? doc["problem"] : doc);
  if (args.tol) p.tol = *args.tol;
  if (args.quant) p.quantization = *args.quant;
  if (args.max_iter) p.max_iter = *args.max_iter;
  if (args.cap) p.cardinality_cap = *args.cap;
  p.check();

  auto sol = solve_inclusion(p, args.serial ? Execution::serial : Execution::parallel);
  json j = io::to_json(sol);
  if (args.validate > 0) j["validation"] = io::to_json(validate_problem(p, args.validate));

  if (args.out.empty()) {
    out << dump(j);
  } else {
    io::write_text_file(args.out + ".json", dump(j));
    io::write_text_file(args.out + ".iterations.csv", io::iteration_csv(sol));
    io::write_text_file(args.out + ".points.csv", io::points_csv(sol.trajectory));
    out << "iterations " << sol.iterations << "\nconverged " << (sol.converged ? "true" : "false")
        << "\nresidual " << io::format_double(sol.residual) << '\n';
  }
  if (!sol.converged) {
    err << "no convergence after " << sol.iterations << " iterations (last step "
        << io::format_double(sol.step_history.empty() ? 0.0 : sol.step_history.back()) << ")\n";
    throw Exit{not_converged};
  }
  if (args.strict && !(sol.variation_check.pass && sol.initial_check.pass)) throw Exit{certificate_failed};
  return ok;
}

struct FixtureArgs {
  std::string name, out, out_dir;
  std::vector<std::string> params;
};

int cmd_fixture_emit(const FixtureArgs& args, std::ostream& out) {
  std::map<std::string, std::string> params;
  for (const auto& kv : args.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw io::FormatError("fixture parameters are key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const auto fx = fixtures::make(args.name, params);
  emit(dump(io::to_json(fx)), args.out, out);
  if (!args.out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(args.out_dir);
    const fs::path dir(args.out_dir);
    if (fx.multifunction) io::write_text_file((dir / "multifunction.json").string(), dump(io::to_json(*fx.multifunction)));
    if (fx.problem) io::write_text_file((dir / "problem.json").string(), dump(io::to_json(*fx.problem)));
    for (const auto& [name, s] : fx.sets)
      io::write_text_file((dir / (name + ".json")).string(), dump(io::set_document(s)));
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"setvar: excess, variation and selector computations on finite grids"};
  app.name(args.empty() ? "setvar" : args[0]);
  app.require_subcommand(1);

  PairArgs excess_args, hausdorff_args;
  auto* c_excess = app.add_subcommand("excess", "print e(A,B) and e(B,A)");
  add_pair(c_excess, excess_args);
  auto* c_hausdorff = app.add_subcommand("hausdorff", "print d_H(A,B)");
  add_pair(c_hausdorff, hausdorff_args);

  VariationArgs var;
  auto* c_var = app.add_subcommand("variation", "variation report of a multifunction");
  c_var->add_option("F", var.file, "multifunction JSON")->required()->check(CLI::ExistingFile);
  c_var->add_option("--range", var.range, "restrict to nodes in [lo, hi]")->expected(2);
  c_var->add_option("--modulus", var.modulus, "report nu_1 .. nu_k");
  c_var->add_option("--format", var.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  c_var->add_option("--out", var.out, "write to file instead of stdout");

  SelectArgs sel;
  auto* c_sel = app.add_subcommand("select", "bounded-variation selector with certificate");
  c_sel->add_option("F", sel.file, "multifunction JSON")->required()->check(CLI::ExistingFile);
  c_sel->add_option("--t0", sel.t0, "seed node")->required();
  c_sel->add_option("--seed", sel.seed, "seed set X0 (JSON)")->check(CLI::ExistingFile);
  c_sel->add_option("--direction", sel.direction, "right, left or two_sided");
  c_sel->add_option("--single", sel.single, "single-valued selector from point x0 (comma separated, or an index)");
  c_sel->add_option("--out", sel.out, "write to file instead of stdout");
  c_sel->add_flag("--strict", sel.strict, "exit 3 when any certificate inequality fails");

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve-inclusion", "contraction iteration for X(t) in F(t, X(t))");
  c_solve->add_option("problem", solve.file, "problem JSON (or fixture JSON with a problem)")
      ->required()
      ->check(CLI::ExistingFile);
  c_solve->add_option("--tol", solve.tol, "stop when sup_t d_H(X_n, X_{n-1}) <= tol (default 1e-6)");
  c_solve->add_option("--max-iter", solve.max_iter, "iteration cap (default 100)");
  c_solve->add_option("--quant", solve.quant, "lattice pitch for map outputs (default 1e-6)");
  c_solve->add_option("--cap", solve.cap, "per-node cardinality cap before coarsening (default 4096)");
  c_solve->add_option("--validate", solve.validate, "also sample-check the hypotheses with N samples");
  c_solve->add_option("--out", solve.out, "write PREFIX.json, PREFIX.iterations.csv, PREFIX.points.csv");
  c_solve->add_flag("--serial", solve.serial, "evaluate nodes serially");
  c_solve->add_flag("--strict", solve.strict, "exit 3 when a solution bound fails");

  auto* c_fix = app.add_subcommand("fixtures", "built-in example instances");
  c_fix->require_subcommand(1);
  c_fix->add_subcommand("list", "list fixture names");
  FixtureArgs fix;
  auto* c_emit = c_fix->add_subcommand("emit", "write a fixture with its expected values");
  c_emit->add_option("name", fix.name, "fixture name")->required();
  c_emit->add_option("params", fix.params, "key=value parameters");
  c_emit->add_option("--out", fix.out, "write to file instead of stdout");
  c_emit->add_option("--out-dir", fix.out_dir, "also write each piece as its own JSON file");

  std::string plot_file, plot_out;
  auto* c_plot = app.add_subcommand("plot-data", "per-node point CSV of a trajectory");
  c_plot->add_option("trajectory", plot_file, "multifunction, selector or solution JSON")
      ->required()
      ->check(CLI::ExistingFile);
  c_plot->add_option("--out", plot_out, "write to file instead of stdout");

  std::vector<const char*> argv;
  std::string name = app.get_name();
  argv.push_back(name.c_str());
  for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*c_excess) {
      auto [a, b] = load_pair(excess_args);
      out << "e(A,B) = " << io::format_double(excess(a, b)) << "\ne(B,A) = " << io::format_double(excess(b, a))
          << '\n';
      return ok;
    }
    if (*c_hausdorff) {
      auto [a, b] = load_pair(hausdorff_args);
      out << "d_H(A,B) = " << io::format_double(hausdorff(a, b)) << '\n';
      return ok;
    }
    if (*c_var) return cmd_variation(var, out);
    if (*c_sel) return cmd_select(sel, out);
    if (*c_solve) return cmd_solve(solve, out, err);
    if (*c_fix) {
      if (*c_emit) return cmd_fixture_emit(fix, out);
      for (const auto& n : fixtures::names()) out << n << '\n';
      return ok;
    }
    if (*c_plot) {
      emit(io::points_csv(load_trajectory(io::read_json_file(plot_file))), plot_out, out);
      return ok;
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const io::json::exception& e) {
    err << "error: malformed document: " << e.what() << '\n';
    return bad_input;
  }
  return usage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace setvar::cli
