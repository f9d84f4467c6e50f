#pragma once

namespace hmeb {

// Geometric predicates compare against kGeomEps scaled by input magnitude.
// Distances are compared with the looser kDistEps because the logarithms
// amplify positional error near the boundary.
inline constexpr double kGeomEps = 1e-9;
inline constexpr double kDistEps = 1e-7;
inline constexpr double kRadiusEps = 1e-10;
inline constexpr int kMaxBisectionIterations = 200;

}  // namespace hmeb
