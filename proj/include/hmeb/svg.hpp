#pragma once

#include <span>
#include <string>

#include "hmeb/meb_solver.hpp"

namespace hmeb {

/// SVG 1.1 drawing of the domain (black), the points (black dots), and the
/// balls colored by metric: Hilbert red, Funk blue, reverse Funk green,
/// Thompson purple. Hilbert balls also get thin spokes through their
/// centers. The domain's bounding box fills an 800x800 viewport with a 5%
/// margin and the y axis pointing up.
std::string render_svg(const Polygon& omega, std::span<const Point2d> points,
                       std::span<const Ball> balls);

}  // namespace hmeb
