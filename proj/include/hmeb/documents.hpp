#pragma once

// Instance and result documents: JSON objects with [x, y] pairs, numbers
// written with 12 significant digits.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hmeb/meb_solver.hpp"

namespace hmeb {

/// A malformed document; field() names the offending entry.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string field, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct InstanceDocument {
  std::vector<Point2d> polygon;
  std::vector<Point2d> points;
  std::string metric = "hilbert";
  std::optional<double> tolerance;  // overrides the radius tolerance
  std::uint64_t seed = 0;
};

InstanceDocument parse_instance_document(std::string_view text);
InstanceDocument load_instance_document(const std::filesystem::path& path);
std::string serialize_instance_document(const InstanceDocument& doc);

/// Builds the solver instance; geometry errors propagate as GeometryError.
MebInstance make_instance(const InstanceDocument& doc);

struct ResultDocument {
  double radius = 0;
  Point2d center = Point2d::Zero();
  std::vector<std::size_t> basis;  // indices into the document's point list
  std::vector<Point2d> ball;
  std::string solver;
  SolverStats stats;
};

ResultDocument make_result_document(const MebInstance& instance, const MebResult& result);
std::string serialize_result_document(const ResultDocument& doc);
ResultDocument parse_result_document(std::string_view text);

/// Checks a (possibly re-parsed) result against its instance: non-negative
/// radius, convex ball outline, every point enclosed within the distance
/// slack, basis indices in range. Returns one message per violation.
std::vector<std::string> validate_result(const MebInstance& instance,
                                         const ResultDocument& doc);

/// x rounded to 12 significant digits.
double round_significant(double x);

/// Ball outline as a JSON fragment {"metric", "center", "radius", "ball"}.
std::string serialize_ball(const Ball& ball);

}  // namespace hmeb
