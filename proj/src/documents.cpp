#include "hmeb/documents.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hmeb {

using Json = nlohmann::ordered_json;

double round_significant(double x) {
  if (!std::isfinite(x) || x == 0) return x == 0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

Json point_json(const Point2d& p) {
  return Json::array({round_significant(p.x()), round_significant(p.y())});
}

Json points_json(const std::vector<Point2d>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

Point2d parse_point(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DocumentError(field, field + ": expected an [x, y] pair of numbers");
  const Point2d p(j[0].get<double>(), j[1].get<double>());
  if (!is_finite(p)) throw DocumentError(field, field + ": coordinates must be finite");
  return p;
}

std::vector<Point2d> parse_points(const Json& doc, const std::string& field) {
  if (!doc.contains(field)) throw DocumentError(field, field + ": missing");
  const Json& arr = doc.at(field);
  if (!arr.is_array()) throw DocumentError(field, field + ": expected a list of [x, y] pairs");
  std::vector<Point2d> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(parse_point(arr[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("document", std::string("document: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("document", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

InstanceDocument parse_instance_document(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw DocumentError("document", "document: expected an object");

  InstanceDocument out;
  out.polygon = parse_points(doc, "polygon");
  out.points = doc.contains("points") ? parse_points(doc, "points") : std::vector<Point2d>{};
  if (doc.contains("metric")) {
    if (!doc["metric"].is_string() || !parse_metric(doc["metric"].get<std::string>()))
      throw DocumentError("metric",
                          "metric: expected one of funk, reverse_funk, hilbert, thompson");
    out.metric = doc["metric"].get<std::string>();
  }
  if (doc.contains("tolerance") && !doc["tolerance"].is_null()) {
    const Json& t = doc["tolerance"];
    if (!t.is_number() || !(t.get<double>() > 0) || !std::isfinite(t.get<double>()))
      throw DocumentError("tolerance", "tolerance: expected a positive real");
    out.tolerance = t.get<double>();
  }
  if (doc.contains("seed") && !doc["seed"].is_null()) {
    const Json& s = doc["seed"];
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0))
      throw DocumentError("seed", "seed: expected a non-negative integer");
    out.seed = s.get<std::uint64_t>();
  }
  return out;
}

InstanceDocument load_instance_document(const std::filesystem::path& path) {
  return parse_instance_document(read_file(path));
}

std::string serialize_instance_document(const InstanceDocument& doc) {
  Json j;
  j["polygon"] = points_json(doc.polygon);
  j["points"] = points_json(doc.points);
  j["metric"] = doc.metric;
  if (doc.tolerance) j["tolerance"] = *doc.tolerance;
  j["seed"] = doc.seed;
  return j.dump(2) + "\n";
}

MebInstance make_instance(const InstanceDocument& doc) {
  SolverTolerances tol;
  if (doc.tolerance) tol.radius = *doc.tolerance;
  const auto kind = parse_metric(doc.metric);
  if (!kind) throw DocumentError("metric", "metric: unknown metric " + doc.metric);
  return MebInstance(Polygon(doc.polygon), doc.points, *kind, doc.seed, tol);
}

ResultDocument make_result_document(const MebInstance& instance, const MebResult& result) {
  ResultDocument doc;
  doc.radius = result.value.radius;
  doc.center = result.value.center;
  for (std::size_t i : result.basis.support) doc.basis.push_back(instance.source_index(i));
  std::sort(doc.basis.begin(), doc.basis.end());
  doc.ball = result.ball.outline();
  doc.solver = result.solver == SolverKind::LpType ? "lp_type" : "bisection";
  doc.stats = result.stats;
  return doc;
}

std::string serialize_result_document(const ResultDocument& doc) {
  Json j;
  j["radius"] = round_significant(doc.radius);
  j["center"] = point_json(doc.center);
  j["basis"] = doc.basis;
  j["ball"] = points_json(doc.ball);
  j["solver"] = doc.solver;
  j["stats"] = {{"violation_tests", doc.stats.violation_tests},
                {"basis_computations", doc.stats.basis_computations},
                {"bisection_iterations", doc.stats.bisection_iterations}};
  return j.dump(2) + "\n";
}

ResultDocument parse_result_document(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw DocumentError("document", "document: expected an object");
  ResultDocument doc;
  try {
    doc.radius = j.at("radius").get<double>();
    doc.center = parse_point(j.at("center"), "center");
    doc.basis = j.at("basis").get<std::vector<std::size_t>>();
    doc.ball = parse_points(j, "ball");
    doc.solver = j.at("solver").get<std::string>();
    const Json& s = j.at("stats");
    doc.stats.violation_tests = s.at("violation_tests").get<std::size_t>();
    doc.stats.basis_computations = s.at("basis_computations").get<std::size_t>();
    doc.stats.bisection_iterations = s.at("bisection_iterations").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError("result", std::string("result: ") + e.what());
  }
  return doc;
}

std::vector<std::string> validate_result(const MebInstance& instance,
                                         const ResultDocument& doc) {
  std::vector<std::string> issues;
  if (!(doc.radius >= 0)) issues.push_back("negative radius");
  if (doc.solver != "lp_type" && doc.solver != "bisection")
    issues.push_back("unknown solver " + doc.solver);
  if (doc.ball.size() >= 3) {
    try {
      Polygon shape(doc.ball);
      if (shape.size() != doc.ball.size()) issues.push_back("ball outline has collinear vertices");
    } catch (const GeometryError& e) {
      issues.push_back(std::string("ball outline not convex: ") + e.what());
    }
  } else if (doc.ball.size() != 1) {
    issues.push_back("ball outline must be a polygon or a single point");
  }
  if (!is_interior(instance.omega(), doc.center)) {
    issues.push_back("center not interior");
    return issues;
  }
  const double slack = instance.tolerances().dist;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const double d = instance.distance_from(doc.center, i);
    if (d > doc.radius + slack)
      issues.push_back("point " + std::to_string(instance.source_index(i)) + " outside ball");
  }
  for (std::size_t b : doc.basis) {
    std::size_t found = instance.size();
    for (std::size_t i = 0; i < instance.size(); ++i)
      if (instance.source_index(i) == b) found = i;
    if (found == instance.size()) {
      issues.push_back("basis index " + std::to_string(b) + " out of range");
      continue;
    }
    if (std::abs(instance.distance_from(doc.center, found) - doc.radius) > slack)
      issues.push_back("basis point " + std::to_string(b) + " not on the ball boundary");
  }
  if (doc.basis.size() > 3) issues.push_back("basis larger than 3");
  return issues;
}

std::string serialize_ball(const Ball& ball) {
  Json j;
  j["metric"] = std::string(metric_name(ball.kind));
  j["center"] = point_json(ball.center);
  j["radius"] = round_significant(ball.radius);
  j["ball"] = points_json(ball.outline());
  return j.dump(2) + "\n";
}

}  // namespace hmeb
