// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "chowkit/closure.hpp"
#include "chowkit/convex.hpp"
#include "chowkit/flows.hpp"
#include "chowkit/steering.hpp"

/// JSON and CSV forms of every value the CLI reads or writes. Readers throw
/// ParseError on malformed input; writers are deterministic (doubles use
/// shortest round-trip form, rationals "p/q").
namespace chowkit::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"c0": "p/q", "cos": [...], "sin": [...]}
Json to_json(const TrigPoly& v);
TrigPoly trig_poly_from_json(const Json& j);

/// [{"label": ..., "field": TrigPoly}, ...]
Json to_json(const CircleFamily& family);
CircleFamily circle_family_from_json(const Json& j);

/// Polynomial: [{"exponents": [..], "coeff": "p/q"}, ...];
/// PolyField: {"components": [Polynomial, ...]}.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int dim);
Json to_json(const PolyField& f);
PolyField poly_field_from_json(const Json& j);
Json to_json(const EuclideanFamily& family);
EuclideanFamily euclidean_family_from_json(const Json& j);

Json to_json(const ClosureReport& report);
ClosureReport closure_report_from_json(const Json& j);

/// [{"field": label | TrigPoly, "t": duration}, ...]. Labels are resolved
/// against `family`; steps without a label are written inline.
Json to_json(const FlowWord& word);
FlowWord flow_word_from_json(const Json& j, const CircleFamily& family);

/// CSV with header "theta,lift" and one row per grid node.
void write_diffeo_csv(std::ostream& out, const CircleDiffeo& phi);
CircleDiffeo read_diffeo_csv(std::istream& in);

/// Target forms accepted: {"lift": [...]}, {"rotation": a, "grid": m},
/// {"word": FlowWord, "grid": m}. Written as {"lift": [...]}.
Json diffeo_to_json(const CircleDiffeo& phi);
CircleDiffeo diffeo_from_json(const Json& j, const CircleFamily& family);

Json to_json(const SteeringProblem& p);
SteeringProblem steering_problem_from_json(const Json& j);
Json to_json(const SteeringResult& r);
SteeringResult steering_result_from_json(const Json& j, const CircleFamily& family);
/// CSV "step,distance", one row per trajectory entry.
void write_trajectory_csv(std::ostream& out, const SteeringResult& r);

/// {"dim": n, "halfspaces": [[...], ...], "vertices": [[...], ...]}
Json to_json(const ConvexBody& body);
ConvexBody convex_body_from_json(const Json& j);

Json points_to_json(const PointSet& pts);
PointSet points_from_json(const Json& j);
Point point_from_json(const Json& j);
/// One point per row, comma separated; a non-numeric first row is a header.
PointSet read_points_csv(std::istream& in);
void write_points_csv(std::ostream& out, const PointSet& pts);

Json to_json(const SeparationCertificate& c);
SeparationCertificate separation_from_json(const Json& j);
Json to_json(const ConeResult& r);
ConeResult cone_result_from_json(const Json& j);
Json to_json(const MackeyReport& r);
MackeyReport mackey_report_from_json(const Json& j);

/// %.17g
std::string format_double(double x);

}  // namespace chowkit::io
