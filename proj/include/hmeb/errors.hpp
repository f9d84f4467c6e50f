#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hmeb {

enum class ErrorCode {
  NotInterior,
  NotConvex,
  Degenerate,
  CoincidentPoints,
  EmptyRegion,
  Unreachable,
  EmptyInstance,
  NoFeasibleBasis,
};

/// Machine-readable snake_case name, used in CLI error lines.
constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInterior: return "not_interior";
    case ErrorCode::NotConvex: return "not_convex";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::CoincidentPoints: return "coincident_points";
    case ErrorCode::EmptyRegion: return "empty_region";
    case ErrorCode::Unreachable: return "unreachable";
    case ErrorCode::EmptyInstance: return "empty_instance";
    case ErrorCode::NoFeasibleBasis: return "no_feasible_basis";
  }
  return "unknown";
}

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hmeb
