// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chowkit/errors.hpp"
#include "chowkit/io.hpp"

namespace chowkit::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::optional<int> cap;
  std::optional<int> depth;
  std::optional<double> epsilon;
  std::optional<int> budget;
  std::optional<double> tol;
};

// Output sink: the --output file, or `out` when none was given.
class Artifact {
 public:
  Artifact(const Options& o, std::ostream& out, std::ostream& err) : opts_(o), out_(out), err_(err) {}

  void write(const std::string& text) const {
    if (opts_.output.empty()) {
      out_ << text;
      return;
    }
    write_file(opts_.output, text);
  }

  void write_json(const Json& j) const { write(j.dump(2) + "\n"); }

  // Secondary artifact next to --output: <stem>.<suffix>.
  void write_sibling(const std::string& suffix, const std::string& text) const {
    if (opts_.output.empty()) return;
    fs::path p(opts_.output);
    write_file((p.parent_path() / (p.stem().string() + "." + suffix)).string(), text);
  }

  // One-line summary: stdout when the artifact went to a file, else stderr.
  void summary(const std::string& line) const { (opts_.output.empty() ? err_ : out_) << line << "\n"; }

 private:
  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("failed writing '" + path + "'");
  }

  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("input lacks '") + key + "'");
  return j[key];
}

// Inline point arrays, or a string naming a CSV file relative to the input.
PointSet load_points(const Json& j, const Options& o) {
  if (j.is_string()) {
    fs::path p(j.get<std::string>());
    if (p.is_relative()) p = fs::path(o.input).parent_path() / p;
    std::ifstream f(p);
    if (!f) throw IoError("cannot open point file '" + p.string() + "'");
    return io::read_points_csv(f);
  }
  return io::points_from_json(j);
}

ConvexBody load_body(const Json& j, bool symmetric_hint) {
  ConvexBody b = io::convex_body_from_json(j);
  return symmetric_hint ? symmetrize(b) : b;
}

IntegratorOptions integrator(const Options& o) {
  IntegratorOptions opts;
  if (o.tol) opts.tolerance = *o.tol;
  return opts;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int cmd_bracket(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  const TrigPoly v = io::trig_poly_from_json(need(in, "v"));
  const TrigPoly w = io::trig_poly_from_json(need(in, "w"));
  const TrigPoly b = bracket(v, w);
  Json j = Json::object();
  j["v"] = io::to_json(v);
  j["w"] = io::to_json(w);
  j["bracket"] = io::to_json(b);
  j["description"] = describe(b);
  a.write_json(j);
  a.summary("bracket: " + describe(b));
  return 0;
}

int cmd_closure(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  const int depth = o.depth.value_or(8);
  if (in.is_object() && in.contains("point")) {
    const EuclideanFamily fam = io::euclidean_family_from_json(in);
    const Point x = io::point_from_json(in["point"]);
    const std::size_t rank = lie_rank_at_point(fam, std::span<const double>(x), depth);
    const EuclideanClosure cl = euclidean_closure(fam, depth);
    Json j = Json::object();
    j["depth"] = depth;
    j["point"] = x;
    j["rank_at_point"] = rank;
    j["dimension"] = fam.members.front().field.dim();
    Json gen = Json::array();
    for (const auto& g : cl.generated) gen.push_back({{"label", g.label}, {"field", io::to_json(g.field)}});
    j["generated"] = std::move(gen);
    a.write_json(j);
    a.summary("closure: Lie rank " + std::to_string(rank) + " of " + std::to_string(fam.members.front().field.dim()) +
              " at the given point");
    return 0;
  }
  const CircleFamily fam = io::circle_family_from_json(in);
  int cap = 0;
  for (const auto& m : fam.members) cap = std::max(cap, m.field.effective_mode());
  if (o.cap) cap = *o.cap;
  const ClosureReport r = closure(fam, depth, cap);
  a.write_json(io::to_json(r));
  a.summary("closure: rank " + std::to_string(r.rank) + ", depth used " + std::to_string(r.depth_used) +
            ", spans modes 0.." + std::to_string(cap) + ": " + (r.spanning ? "true" : "false"));
  return 0;
}

int cmd_flow(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  const CircleFamily fam = in.contains("family") ? io::circle_family_from_json(in["family"]) : standard_circle_family();
  FlowWord word;
  if (in.contains("word")) {
    word = io::flow_word_from_json(in["word"], fam);
  } else {
    word.steps.push_back({"", io::trig_poly_from_json(need(in, "field")), need(in, "t").get<double>()});
  }
  const int grid = in.contains("grid") ? in["grid"].get<int>() : CircleDiffeo::kDefaultGrid;
  const CircleDiffeo start = in.contains("initial") ? io::diffeo_from_json(in["initial"], fam) : CircleDiffeo::identity(grid);
  const CircleDiffeo end = apply_word(word, start, integrator(o));
  std::ostringstream csv;
  io::write_diffeo_csv(csv, end);
  a.write(csv.str());
  a.summary("flow: " + std::to_string(word.size()) + " steps, distance from start " +
            io::format_double(diffeo_distance(end, start)));
  return 0;
}

int cmd_residual(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  const TrigPoly x = io::trig_poly_from_json(need(in, "X"));
  const TrigPoly y = io::trig_poly_from_json(need(in, "Y"));
  const double theta = need(in, "theta").get<double>();
  std::vector<double> ts;
  if (need(in, "t").is_array()) {
    ts = in["t"].get<std::vector<double>>();
  } else {
    ts.push_back(in["t"].get<double>());
  }
  const double target = evaluate(bracket(x, y), theta);
  Json rows = Json::array();
  std::vector<double> errs, pos_t;
  for (double t : ts) {
    const double r = commutator_flow_residual(x, y, theta, t, integrator(o));
    rows.push_back({{"t", t}, {"residual", r}, {"error", std::abs(r - target)}});
    if (std::abs(r - target) > 0) {
      errs.push_back(std::abs(r - target));
      pos_t.push_back(std::abs(t));
    }
  }
  Json j = Json::object();
  j["theta"] = theta;
  j["bracket_value"] = target;
  j["rows"] = std::move(rows);
  j["loglog_slope"] = errs.size() >= 2 ? Json(loglog_slope(pos_t, errs)) : Json(nullptr);
  a.write_json(j);
  a.summary("residual: bracket value " + io::format_double(target) + ", " + std::to_string(ts.size()) + " step sizes");
  return 0;
}

int cmd_steer(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  SteeringProblem p = io::steering_problem_from_json(in);
  if (o.epsilon) p.epsilon = *o.epsilon;
  if (o.budget) p.budget = *o.budget;
  if (o.depth) p.primitive_depth = *o.depth;
  if (o.tol) p.integrator.tolerance = *o.tol;
  const SteeringResult r = steer(p);
  Json j = io::to_json(r);
  j["family"] = io::to_json(p.family);
  j["epsilon"] = p.epsilon;
  j["budget"] = p.budget;
  a.write_json(j);
  std::ostringstream csv;
  io::write_trajectory_csv(csv, r);
  a.write_sibling("trajectory.csv", csv.str());
  a.summary("steer: " + std::string(to_string(r.status)) + ", error " + io::format_double(r.achieved_error) +
            ", word length " + std::to_string(r.word.size()));
  return 0;
}

int cmd_minkowski(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  const ConvexBody body = load_body(need(in, "body"), in.value("symmetrize", false));
  const PointSet pts = load_points(need(in, "points"), o);
  Json vals = Json::array();
  for (const auto& x : pts) vals.push_back(minkowski(body, x));
  Json j = Json::object();
  j["body"] = io::to_json(body);
  j["points"] = io::points_to_json(pts);
  j["values"] = std::move(vals);
  a.write_json(j);
  a.summary("minkowski: " + std::to_string(pts.size()) + " values");
  return 0;
}

int cmd_separate(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  const PointSet pa = load_points(need(in, "A"), o);
  SeparationCertificate c;
  if (in.contains("B_body")) {
    c = separate(pa, io::convex_body_from_json(in["B_body"]));
  } else {
    c = separate(pa, load_points(need(in, "B"), o));
  }
  a.write_json(io::to_json(c));
  a.summary("separate: alpha " + io::format_double(c.alpha) + " < beta " + io::format_double(c.beta));
  return 0;
}

int cmd_cone(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  const ConvexBody body = load_body(need(in, "body"), in.value("symmetrize", true));
  const PointSet b = load_points(need(in, "B"), o);
  const ConeResult r =
      cone_extremal_point(b, io::point_from_json(need(in, "a1")), io::point_from_json(need(in, "x0")), body);
  a.write_json(io::to_json(r));
  std::ostringstream pt;
  for (std::size_t i = 0; i < r.a_star.size(); ++i) pt << (i ? ", " : "") << io::format_double(r.a_star[i]);
  a.summary("cone: a* = (" + pt.str() + ") after " + std::to_string(r.iterates.size() - 1) + " moves");
  return 0;
}

int cmd_mackey(const Options& o, const Artifact& a) {
  const Json in = read_json(o.input);
  const ConvexBody body = load_body(need(in, "body"), false);
  const MackeyReport r = mackey_cauchy_diagnostic(load_points(need(in, "prefix"), o), body);
  a.write_json(io::to_json(r));
  a.summary(std::string("mackey: Cauchy prefix ") + (r.is_cauchy_prefix ? "true" : "false"));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chowkit: bracket generation, circle flows, steering and convex analysis", "chowkit"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, std::function<int(const Options&, const Artifact&)>> commands{
      {"bracket", cmd_bracket},     {"closure", cmd_closure},   {"flow", cmd_flow},
      {"residual", cmd_residual},   {"steer", cmd_steer},       {"minkowski", cmd_minkowski},
      {"separate", cmd_separate},   {"cone", cmd_cone},         {"mackey", cmd_mackey}};
  const std::map<std::string, std::string> help{
      {"bracket", "Lie bracket of two trig fields {v, w}"},
      {"closure", "iterated-bracket closure of a field family"},
      {"flow", "apply a flow word to a circle diffeomorphism (CSV out)"},
      {"residual", "commutator-flow residual against the bracket"},
      {"steer", "steer toward a target diffeomorphism"},
      {"minkowski", "Minkowski functional of points"},
      {"separate", "separating functional for disjoint sets"},
      {"cone", "cone extremal point of a finite set"},
      {"mackey", "Mackey-Cauchy diagnostic of a sequence prefix"}};
  for (const auto& [name, fn] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--input,-i", o.input, "input JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--output,-o", o.output, "output file (stdout when omitted)");
    if (name == "closure") {
      sub->add_option("--cap", o.cap, "highest Fourier mode kept")->check(CLI::Range(0, 64));
      sub->add_option("--depth", o.depth, "bracket rounds (default 8)")->check(CLI::Range(1, 32));
    }
    if (name == "steer") {
      sub->add_option("--depth", o.depth, "primitive bracket depth")->check(CLI::Range(1, 32));
      sub->add_option("--epsilon", o.epsilon, "steering target distance")->check(CLI::PositiveNumber);
      sub->add_option("--budget", o.budget, "maximum word length")->check(CLI::Range(0, 1000000));
    }
    if (name == "flow" || name == "residual" || name == "steer") {
      sub->add_option("--tol", o.tol, "integrator tolerance")->check(CLI::Range(1e-15, 1e-3));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "chowkit: " << e.what() << "\n";
    return 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const Artifact artifact(o, out, err);
  try {
    return commands.at(name)(o, artifact);
  } catch (const DomainError& e) {
    err << "chowkit " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "chowkit " << name << ": parse error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    err << "chowkit " << name << ": " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "chowkit " << name << ": parse error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace chowkit::cli
