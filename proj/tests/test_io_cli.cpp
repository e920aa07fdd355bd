// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "chowkit/errors.hpp"
#include "chowkit/io.hpp"
#include "cli.hpp"

using namespace chowkit;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("chowkit_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

fs::path data(const std::string& name) { return fs::path(CHOWKIT_DATA_DIR) / name; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

io::Json json_file(const fs::path& p) { return io::Json::parse(slurp(p)); }

}  // namespace

TEST_CASE("trig polynomial and family round trip") {
  const TrigPoly v(Rational(1, 3), {Rational(-2), Rational(0)}, {Rational(5, 7), Rational(1, 2)});
  CHECK(io::trig_poly_from_json(io::to_json(v)) == v);
  CHECK(io::to_json(v)["c0"] == "1/3");
  const CircleFamily f = standard_circle_family();
  const CircleFamily g = io::circle_family_from_json(io::to_json(f));
  REQUIRE(g.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(g.members[i].label == f.members[i].label);
    CHECK(g.members[i].field == f.members[i].field);
  }
  CHECK_THROWS_AS(io::trig_poly_from_json(io::Json::parse(R"({"cos": ["1/0"]})")), ParseError);
  CHECK_THROWS_AS(io::trig_poly_from_json(io::Json::parse(R"([1, 2])")), ParseError);
}

TEST_CASE("closure report round trip") {
  const ClosureReport r = closure(standard_circle_family(), 3, 5);
  const io::Json j = io::to_json(r);
  CHECK(io::to_json(io::closure_report_from_json(j)) == j);
}

TEST_CASE("polynomial family round trip") {
  const io::Json in = json_file(data("heisenberg.json"));
  const EuclideanFamily f = io::euclidean_family_from_json(in);
  const EuclideanFamily g = io::euclidean_family_from_json(io::to_json(f));
  REQUIRE(g.size() == 2);
  CHECK(g.members[1].field == f.members[1].field);
}

TEST_CASE("flow word and diffeo round trip") {
  const CircleFamily fam = standard_circle_family();
  FlowWord w{{{"sin1", TrigPoly::sin_mode(1), 0.25}, {"", TrigPoly::cos_mode(3, Rational(1, 2)), -0.1}}};
  const FlowWord back = io::flow_word_from_json(io::to_json(w), fam);
  REQUIRE(back.size() == 2);
  CHECK(back.steps[0].field == w.steps[0].field);
  CHECK(back.steps[1].field == w.steps[1].field);
  CHECK(back.steps[1].duration == -0.1);

  const CircleDiffeo phi = apply_word(w, CircleDiffeo::identity(64));
  std::stringstream csv;
  io::write_diffeo_csv(csv, phi);
  CHECK(io::read_diffeo_csv(csv).lift() == phi.lift());
  CHECK(io::diffeo_from_json(io::diffeo_to_json(phi), fam).lift() == phi.lift());
  CHECK_THROWS_AS(io::flow_word_from_json(io::Json::parse(R"([{"field": "nope", "t": 1}])"), fam), ParseError);
}

TEST_CASE("steering problem and result round trip") {
  SteeringProblem p;
  p.target = CircleDiffeo::rotation(0.3);
  const SteeringProblem q = io::steering_problem_from_json(io::to_json(p));
  CHECK(q.target.lift() == p.target.lift());
  CHECK(q.epsilon == p.epsilon);
  const SteeringResult r = steer(p);
  const io::Json j = io::to_json(r);
  const SteeringResult r2 = io::steering_result_from_json(j, p.family);
  CHECK(io::to_json(r2) == j);
}

TEST_CASE("convex values round trip") {
  const ConvexBody b = ConvexBody::box({1.0, 2.0});
  CHECK(io::to_json(io::convex_body_from_json(io::to_json(b))) == io::to_json(b));
  const SeparationCertificate c = separate(PointSet{{3, 0}}, b);
  CHECK(io::to_json(io::separation_from_json(io::to_json(c))) == io::to_json(c));
  const ConeResult cr = cone_extremal_point(PointSet{{0, 0}, {0, 0.5}}, {0, 0}, {0, 1}, b);
  CHECK(io::to_json(io::cone_result_from_json(io::to_json(cr))) == io::to_json(cr));
  const MackeyReport m = mackey_cauchy_diagnostic(PointSet{{1, 0}, {0.5, 0}, {0.25, 0}}, b);
  CHECK(io::to_json(io::mackey_report_from_json(io::to_json(m))) == io::to_json(m));
  std::stringstream pts("x,y\n1,2\n3.5,-4\n");
  CHECK(io::read_points_csv(pts) == PointSet{{1, 2}, {3.5, -4}});
}

TEST_CASE("cli closure reports spanning for the standard family") {
  const fs::path out = scratch() / "closure.json";
  const Run r = run({"closure", "--input", data("standard_family.json").string(), "--output", out.string(), "--cap", "3",
                     "--depth", "2"});
  CHECK(r.status == 0);
  const io::Json j = json_file(out);
  CHECK(j["spanning"] == true);
  CHECK(j["rank"] == 7);
  CHECK(r.out.find("true") != std::string::npos);
  CHECK(io::to_json(io::closure_report_from_json(j)) == j);
}

TEST_CASE("cli flow with the zero field returns the input lift") {
  const fs::path in = write("zero.json", R"({"field": {"c0": "0/1"}, "t": 2.5, "grid": 32})");
  const fs::path out = scratch() / "zero.csv";
  REQUIRE(run({"flow", "-i", in.string(), "-o", out.string()}).status == 0);
  std::ifstream f(out);
  CHECK(io::read_diffeo_csv(f).lift() == CircleDiffeo::identity(32).lift());
}

TEST_CASE("cli steer reaches the rotation target and is deterministic") {
  const fs::path out1 = scratch() / "steer1.json", out2 = scratch() / "steer2.json";
  const auto args = [&](const fs::path& o) {
    return std::vector<std::string>{"steer", "-i", data("steer_rotation.json").string(), "-o", o.string(),
                                    "--epsilon", "0.01"};
  };
  REQUIRE(run(args(out1)).status == 0);
  REQUIRE(run(args(out2)).status == 0);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(fs::exists(scratch() / "steer1.trajectory.csv"));
  CHECK(slurp(scratch() / "steer1.trajectory.csv") == slurp(scratch() / "steer2.trajectory.csv"));

  const io::Json j = json_file(out1);
  const CircleFamily fam = io::circle_family_from_json(j["family"]);
  const SteeringResult r = io::steering_result_from_json(j, fam);
  CHECK(r.achieved_error <= 1e-2);
  const double recomputed = diffeo_distance(apply_word(r.word, CircleDiffeo::identity()), CircleDiffeo::rotation(0.3));
  CHECK(recomputed == r.achieved_error);
}

TEST_CASE("cli artifacts re-parse and repeat byte for byte") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"bracket", "bracket_cos1_cos2.json"}, {"residual", "residual_cos_sin2.json"}, {"minkowski", "box.json"},
      {"separate", "separate_box.json"},     {"cone", "cone_cloud.json"},           {"mackey", "mackey_geometric.json"},
      {"flow", "flow_sin.json"},             {"closure", "heisenberg.json"}};
  for (const auto& [cmd, file] : cases) {
    INFO(cmd);
    const fs::path a = scratch() / (cmd + "_a.out"), b = scratch() / (cmd + "_b.out");
    REQUIRE(run({cmd, "-i", data(file).string(), "-o", a.string()}).status == 0);
    REQUIRE(run({cmd, "-i", data(file).string(), "-o", b.string()}).status == 0);
    CHECK(slurp(a) == slurp(b));
    if (cmd == "flow") continue;
    const io::Json j = json_file(a);
    if (cmd == "bracket") CHECK(io::to_json(io::trig_poly_from_json(j["bracket"])) == j["bracket"]);
    if (cmd == "separate") CHECK(io::to_json(io::separation_from_json(j)) == j);
    if (cmd == "cone") CHECK(io::to_json(io::cone_result_from_json(j)) == j);
    if (cmd == "mackey") CHECK(io::to_json(io::mackey_report_from_json(j)) == j);
  }
  std::ifstream f(scratch() / "flow_a.out");
  CHECK(io::read_diffeo_csv(f).grid_size() == 256);
}

TEST_CASE("cli exit statuses") {
  const fs::path inside = write("inside.json", R"({"A": [[0, 0]], "B_body": {"dim": 2, "halfspaces": [[1,0],[-1,0],[0,1],[0,-1]]}})");
  CHECK(run({"separate", "-i", inside.string()}).status == 2);
  const fs::path ngen = write("ngen.json", R"({"family": [{"label": "c2", "field": {"cos": ["0", "1"]}},
      {"label": "s2", "field": {"sin": ["0", "1"]}}], "target": {"word": [{"field": {"sin": ["1"]}, "t": 0.3}]}})");
  const Run r = run({"steer", "-i", ngen.string()});
  CHECK(r.status == 2);
  CHECK(r.err.find("mode 1") != std::string::npos);
  const fs::path bad = write("bad.json", "{not json");
  CHECK(run({"bracket", "-i", bad.string()}).status == 1);
  CHECK(run({"bracket", "-i", (scratch() / "missing.json").string()}).status == 1);
  CHECK(run({"steer", "-i", data("steer_rotation.json").string(), "--epsilon", "-1"}).status == 1);
  CHECK(run({"nonsense"}).status == 1);
  const fs::path lacks = write("lacks.json", R"({"v": {"cos": ["1"]}})");
  CHECK(run({"bracket", "-i", lacks.string()}).status == 1);
}
