// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "chowkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "chowkit/errors.hpp"

namespace chowkit::io {

namespace {

const Json& req(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for ") + what + ": " + e.what());
  }
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
  return j.get<double>();
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
  return j.get<int>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("expected an array for ") + what);
  return j;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::vector<double> doubles(const Json& j, const char* what) {
  std::vector<double> out;
  for (const auto& x : as_array(j, what)) out.push_back(as_double(x, what));
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return rational_from_double(j.get<double>());
  throw ParseError("expected a rational (\"p/q\" string or number)");
}

Json to_json(const TrigPoly& v) {
  Json j = Json::object();
  j["c0"] = to_json(v.c0());
  j["cos"] = Json::array();
  j["sin"] = Json::array();
  for (const auto& c : v.cos_coeffs()) j["cos"].push_back(to_json(c));
  for (const auto& c : v.sin_coeffs()) j["sin"].push_back(to_json(c));
  return j;
}

TrigPoly trig_poly_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("trig polynomial must be an object");
  Rational c0 = j.contains("c0") ? rational_from_json(j["c0"]) : Rational(0);
  std::vector<Rational> cs, ss;
  if (j.contains("cos")) {
    for (const auto& c : as_array(j["cos"], "cos")) cs.push_back(rational_from_json(c));
  }
  if (j.contains("sin")) {
    for (const auto& c : as_array(j["sin"], "sin")) ss.push_back(rational_from_json(c));
  }
  cs.resize(std::max(cs.size(), ss.size()));
  ss.resize(cs.size());
  return TrigPoly(std::move(c0), std::move(cs), std::move(ss));
}

Json to_json(const CircleFamily& family) {
  Json j = Json::array();
  for (const auto& m : family.members) j.push_back({{"label", m.label}, {"field", to_json(m.field)}});
  return j;
}

CircleFamily circle_family_from_json(const Json& j) {
  const Json& list = j.is_object() ? req(j, "fields") : j;
  CircleFamily f;
  for (const auto& m : as_array(list, "family")) {
    f.add(as<std::string>(req(m, "label"), "label"), trig_poly_from_json(req(m, "field")));
  }
  return f;
}

Json to_json(const Polynomial& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({{"exponents", e}, {"coeff", to_json(c)}});
  return j;
}

Polynomial polynomial_from_json(const Json& j, int dim) {
  Polynomial p(dim);
  for (const auto& t : as_array(j, "polynomial")) {
    auto e = as<Exponents>(req(t, "exponents"), "exponents");
    if (static_cast<int>(e.size()) != dim) throw ParseError("monomial exponent length differs from dimension");
    for (int x : e) {
      if (x < 0) throw ParseError("negative exponent");
    }
    p.add_term(e, rational_from_json(req(t, "coeff")));
  }
  return p;
}

Json to_json(const PolyField& f) {
  Json comps = Json::array();
  for (const auto& p : f.components()) comps.push_back(to_json(p));
  return {{"components", comps}};
}

PolyField poly_field_from_json(const Json& j) {
  const auto& comps = as_array(req(j, "components"), "components");
  const int dim = static_cast<int>(comps.size());
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(polynomial_from_json(c, dim));
  return PolyField(std::move(ps));
}

Json to_json(const EuclideanFamily& family) {
  Json j = Json::array();
  for (const auto& m : family.members) j.push_back({{"label", m.label}, {"field", to_json(m.field)}});
  return j;
}

EuclideanFamily euclidean_family_from_json(const Json& j) {
  const Json& list = j.is_object() ? req(j, "fields") : j;
  EuclideanFamily f;
  for (const auto& m : as_array(list, "family")) {
    f.add(as<std::string>(req(m, "label"), "label"), poly_field_from_json(req(m, "field")));
  }
  return f;
}

Json to_json(const ClosureReport& r) {
  Json j = Json::object();
  j["max_depth"] = r.max_depth;
  j["max_mode_cap"] = r.max_mode_cap;
  j["depth_used"] = r.depth_used;
  j["fixed_point"] = r.fixed_point;
  j["rank"] = r.rank;
  j["discarded_over_cap"] = r.discarded_over_cap;
  j["spanned_modes"] = r.spanned_modes;
  j["spanning"] = r.spanning;
  j["scope"] = "spanning refers to the truncation to modes 0..max_mode_cap";
  Json gen = Json::array();
  for (const auto& g : r.generated) {
    Json e = Json::object();
    e["label"] = g.label;
    e["height"] = g.height;
    e["letters"] = g.letters;
    e["parents"] = g.parents ? Json::array({g.parents->first, g.parents->second}) : Json(nullptr);
    e["field"] = to_json(g.field);
    gen.push_back(std::move(e));
  }
  j["generated"] = std::move(gen);
  return j;
}

ClosureReport closure_report_from_json(const Json& j) {
  ClosureReport r;
  r.max_depth = as_int(req(j, "max_depth"), "max_depth");
  r.max_mode_cap = as_int(req(j, "max_mode_cap"), "max_mode_cap");
  r.depth_used = as_int(req(j, "depth_used"), "depth_used");
  r.fixed_point = as<bool>(req(j, "fixed_point"), "fixed_point");
  r.rank = as<std::size_t>(req(j, "rank"), "rank");
  r.discarded_over_cap = as<std::size_t>(req(j, "discarded_over_cap"), "discarded_over_cap");
  r.spanned_modes = as<std::vector<int>>(req(j, "spanned_modes"), "spanned_modes");
  r.spanning = as<bool>(req(j, "spanning"), "spanning");
  for (const auto& e : as_array(req(j, "generated"), "generated")) {
    GeneratedField<TrigPoly> g;
    g.label = as<std::string>(req(e, "label"), "label");
    g.height = as_int(req(e, "height"), "height");
    g.letters = as_int(req(e, "letters"), "letters");
    if (const auto& p = req(e, "parents"); !p.is_null()) {
      auto ij = as<std::vector<std::size_t>>(p, "parents");
      if (ij.size() != 2) throw ParseError("parents must have two entries");
      g.parents = std::pair{ij[0], ij[1]};
    }
    g.field = trig_poly_from_json(req(e, "field"));
    r.generated.push_back(std::move(g));
  }
  return r;
}

Json to_json(const FlowWord& word) {
  Json j = Json::array();
  for (const auto& s : word.steps) {
    Json e = Json::object();
    e["field"] = s.label.empty() ? to_json(s.field) : Json(s.label);
    e["t"] = finite_or_null(s.duration);
    j.push_back(std::move(e));
  }
  return j;
}

FlowWord flow_word_from_json(const Json& j, const CircleFamily& family) {
  FlowWord w;
  for (const auto& e : as_array(j, "flow word")) {
    FlowStep s;
    const auto& f = req(e, "field");
    if (f.is_string()) {
      s.label = f.get<std::string>();
      auto it = std::find_if(family.members.begin(), family.members.end(),
                             [&](const auto& m) { return m.label == s.label; });
      if (it == family.members.end()) throw ParseError("flow word names unknown field '" + s.label + "'");
      s.field = it->field;
    } else {
      s.field = trig_poly_from_json(f);
    }
    s.duration = as_double(req(e, "t"), "t");
    w.steps.push_back(std::move(s));
  }
  return w;
}

void write_diffeo_csv(std::ostream& out, const CircleDiffeo& phi) {
  out << "theta,lift\n";
  for (int i = 0; i < phi.grid_size(); ++i) {
    out << format_double(phi.node(i)) << ',' << format_double(phi.lift()[static_cast<std::size_t>(i)]) << '\n';
  }
}

CircleDiffeo read_diffeo_csv(std::istream& in) {
  std::string line;
  std::vector<double> lift;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("diffeo CSV rows need two columns");
    try {
      std::size_t used = 0;
      const std::string cell = line.substr(comma + 1);
      const double v = std::stod(cell, &used);
      if (used != cell.size()) throw std::invalid_argument("trailing text");
      lift.push_back(v);
    } catch (const std::logic_error&) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw ParseError("malformed diffeo CSV row '" + line + "'");
    }
    first = false;
  }
  return CircleDiffeo(std::move(lift));
}

Json diffeo_to_json(const CircleDiffeo& phi) {
  Json lift = Json::array();
  for (double x : phi.lift()) lift.push_back(x);
  return {{"lift", lift}};
}

CircleDiffeo diffeo_from_json(const Json& j, const CircleFamily& family) {
  if (!j.is_object()) throw ParseError("diffeomorphism must be an object");
  const int grid = j.contains("grid") ? as_int(j["grid"], "grid") : CircleDiffeo::kDefaultGrid;
  if (j.contains("lift")) return CircleDiffeo(doubles(j["lift"], "lift"));
  if (j.contains("rotation")) return CircleDiffeo::rotation(as_double(j["rotation"], "rotation"), grid);
  if (j.contains("word")) return apply_word(flow_word_from_json(j["word"], family), CircleDiffeo::identity(grid));
  if (j.contains("identity")) return CircleDiffeo::identity(grid);
  throw ParseError("diffeomorphism needs one of 'lift', 'rotation', 'word', 'identity'");
}

Json to_json(const SteeringProblem& p) {
  Json j = Json::object();
  j["family"] = to_json(p.family);
  j["target"] = diffeo_to_json(p.target);
  if (p.start) j["start"] = diffeo_to_json(*p.start);
  j["epsilon"] = p.epsilon;
  j["budget"] = p.budget;
  j["primitive_depth"] = p.primitive_depth;
  j["tolerance"] = p.integrator.tolerance;
  return j;
}

SteeringProblem steering_problem_from_json(const Json& j) {
  SteeringProblem p;
  if (j.contains("family")) p.family = circle_family_from_json(j["family"]);
  p.family.validate();
  p.target = diffeo_from_json(req(j, "target"), p.family);
  if (j.contains("start")) p.start = diffeo_from_json(j["start"], p.family);
  if (j.contains("epsilon")) p.epsilon = as_double(j["epsilon"], "epsilon");
  if (j.contains("budget")) p.budget = as_int(j["budget"], "budget");
  if (j.contains("primitive_depth")) p.primitive_depth = as_int(j["primitive_depth"], "primitive_depth");
  if (j.contains("tolerance")) p.integrator.tolerance = as_double(j["tolerance"], "tolerance");
  return p;
}

Json to_json(const SteeringResult& r) {
  Json j = Json::object();
  j["status"] = std::string(to_string(r.status));
  j["converged"] = r.converged;
  j["achieved_error"] = r.achieved_error;
  j["iterations"] = r.iterations;
  j["word_length"] = r.word.size();
  j["word"] = to_json(r.word);
  Json traj = Json::array();
  for (double x : r.trajectory) traj.push_back(x);
  j["trajectory"] = std::move(traj);
  return j;
}

SteeringResult steering_result_from_json(const Json& j, const CircleFamily& family) {
  SteeringResult r;
  r.status = parse_steering_status(as<std::string>(req(j, "status"), "status"));
  r.converged = as<bool>(req(j, "converged"), "converged");
  r.achieved_error = as_double(req(j, "achieved_error"), "achieved_error");
  r.iterations = as_int(req(j, "iterations"), "iterations");
  r.word = flow_word_from_json(req(j, "word"), family);
  r.trajectory = doubles(req(j, "trajectory"), "trajectory");
  return r;
}

void write_trajectory_csv(std::ostream& out, const SteeringResult& r) {
  out << "step,distance\n";
  for (std::size_t i = 0; i < r.trajectory.size(); ++i) out << i << ',' << format_double(r.trajectory[i]) << '\n';
}

Json to_json(const ConvexBody& body) {
  Json j = Json::object();
  j["dim"] = body.dim();
  j["halfspaces"] = points_to_json(body.normals());
  j["vertices"] = points_to_json(body.vertices());
  return j;
}

ConvexBody convex_body_from_json(const Json& j) {
  const int dim = as_int(req(j, "dim"), "dim");
  PointSet normals = points_from_json(req(j, "halfspaces"));
  std::optional<PointSet> vertices;
  if (j.contains("vertices") && !j["vertices"].is_null()) vertices = points_from_json(j["vertices"]);
  return ConvexBody(dim, std::move(normals), std::move(vertices));
}

Json points_to_json(const PointSet& pts) {
  Json j = Json::array();
  for (const auto& p : pts) j.push_back(p);
  return j;
}

Point point_from_json(const Json& j) { return doubles(j, "point"); }

PointSet points_from_json(const Json& j) {
  PointSet out;
  for (const auto& p : as_array(j, "point list")) out.push_back(point_from_json(p));
  return out;
}

PointSet read_points_csv(std::istream& in) {
  PointSet out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Point p;
    std::stringstream row(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        p.push_back(std::stod(cell, &used));
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) numeric = false;
      } catch (const std::logic_error&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw ParseError("malformed point CSV row '" + line + "'");
    }
    first = false;
    if (!out.empty() && p.size() != out.front().size()) throw ParseError("point CSV rows differ in length");
    out.push_back(std::move(p));
  }
  return out;
}

void write_points_csv(std::ostream& out, const PointSet& pts) {
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << format_double(p[i]);
    out << '\n';
  }
}

Json to_json(const SeparationCertificate& c) {
  Json j = Json::object();
  j["ell"] = c.ell;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["nearest_a"] = c.nearest_a;
  j["nearest_b"] = c.nearest_b;
  j["distance"] = c.distance;
  return j;
}

SeparationCertificate separation_from_json(const Json& j) {
  SeparationCertificate c;
  c.ell = point_from_json(req(j, "ell"));
  c.alpha = as_double(req(j, "alpha"), "alpha");
  c.beta = as_double(req(j, "beta"), "beta");
  c.nearest_a = point_from_json(req(j, "nearest_a"));
  c.nearest_b = point_from_json(req(j, "nearest_b"));
  c.distance = as_double(req(j, "distance"), "distance");
  return c;
}

Json to_json(const ConeResult& r) {
  Json j = Json::object();
  j["a_star"] = r.a_star;
  j["axis"] = r.axis;
  j["ell"] = r.ell;
  j["alpha"] = r.alpha;
  j["base"] = {{"a1", r.base.a1}, {"x0", r.base.x0}, {"radius", r.base.radius}};
  j["level"] = r.level;
  j["b1"] = r.b1;
  Json u = Json::object();
  u["epsilon"] = r.u_epsilon;
  u["center"] = r.u_center;
  u["radius"] = r.u_radius;
  u["ball"] = r.u_ball ? Json{{"center", r.u_ball->center}, {"radius", r.u_ball->radius}} : Json(nullptr);
  j["neighborhood"] = std::move(u);
  Json its = Json::array();
  for (const auto& it : r.iterates) its.push_back({{"point", it.point}, {"diameter", it.diameter}});
  j["iterates"] = std::move(its);
  return j;
}

ConeResult cone_result_from_json(const Json& j) {
  ConeResult r;
  r.a_star = point_from_json(req(j, "a_star"));
  r.axis = point_from_json(req(j, "axis"));
  r.ell = point_from_json(req(j, "ell"));
  r.alpha = as_double(req(j, "alpha"), "alpha");
  const auto& base = req(j, "base");
  r.base = {point_from_json(req(base, "a1")), point_from_json(req(base, "x0")),
            as_double(req(base, "radius"), "radius")};
  r.level = as_double(req(j, "level"), "level");
  r.b1 = as<std::vector<std::size_t>>(req(j, "b1"), "b1");
  const auto& u = req(j, "neighborhood");
  r.u_epsilon = as_double(req(u, "epsilon"), "epsilon");
  r.u_center = point_from_json(req(u, "center"));
  r.u_radius = as_double(req(u, "radius"), "radius");
  if (const auto& ball = req(u, "ball"); !ball.is_null()) {
    r.u_ball = GaugeBall{point_from_json(req(ball, "center")), as_double(req(ball, "radius"), "radius")};
  }
  for (const auto& it : as_array(req(j, "iterates"), "iterates")) {
    r.iterates.push_back({point_from_json(req(it, "point")), as_double(req(it, "diameter"), "diameter")});
  }
  return r;
}

Json to_json(const MackeyReport& r) {
  Json j = Json::object();
  j["is_cauchy_prefix"] = r.is_cauchy_prefix;
  j["tail_max"] = r.tail_max;
  j["fitted_rate"] = r.fitted_rate ? Json(*r.fitted_rate) : Json(nullptr);
  j["mu"] = r.mu;
  return j;
}

MackeyReport mackey_report_from_json(const Json& j) {
  MackeyReport r;
  r.is_cauchy_prefix = as<bool>(req(j, "is_cauchy_prefix"), "is_cauchy_prefix");
  r.tail_max = doubles(req(j, "tail_max"), "tail_max");
  if (const auto& f = req(j, "fitted_rate"); !f.is_null()) r.fitted_rate = as_double(f, "fitted_rate");
  for (const auto& row : as_array(req(j, "mu"), "mu")) r.mu.push_back(doubles(row, "mu"));
  return r;
}

}  // namespace chowkit::io
