#include "hmeb/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string_view>

namespace hmeb {

namespace {

constexpr double kViewport = 800;
constexpr double kMargin = 0.05 * kViewport;

std::string_view ball_color(MetricKind kind) {
  switch (kind) {
    case MetricKind::Hilbert: return "red";
    case MetricKind::Funk: return "blue";
    case MetricKind::ReverseFunk: return "green";
    case MetricKind::Thompson: return "purple";
  }
  return "gray";
}

class Canvas {
 public:
  explicit Canvas(const Polygon& omega) {
    lo_ = hi_ = omega[0];
    for (const auto& v : omega.vertices()) {
      lo_ = lo_.cwiseMin(v);
      hi_ = hi_.cwiseMax(v);
    }
    const Point2d extent = hi_ - lo_;
    scale_ = (kViewport - 2 * kMargin) / std::max(extent.x(), extent.y());
    // Center the shorter side.
    pad_ = Point2d(kViewport - 2 * kMargin - extent.x() * scale_,
                   kViewport - 2 * kMargin - extent.y() * scale_) / 2;
  }

  Point2d map(const Point2d& p) const {
    return {kMargin + pad_.x() + (p.x() - lo_.x()) * scale_,
            kViewport - (kMargin + pad_.y() + (p.y() - lo_.y()) * scale_)};
  }

  void path(std::span<const Point2d> pts, std::string_view stroke, double width) {
    out_ += "  <path d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point2d q = map(pts[i]);
      out_ += (i == 0 ? "M" : " L") + num(q.x()) + " " + num(q.y());
    }
    out_ += " Z\" fill=\"none\" stroke=\"" + std::string(stroke) +
            "\" stroke-width=\"" + num(width) + "\"/>\n";
  }

  void line(const Point2d& a, const Point2d& b, std::string_view stroke, double width) {
    const Point2d p = map(a), q = map(b);
    out_ += "  <line x1=\"" + num(p.x()) + "\" y1=\"" + num(p.y()) + "\" x2=\"" +
            num(q.x()) + "\" y2=\"" + num(q.y()) + "\" stroke=\"" + std::string(stroke) +
            "\" stroke-width=\"" + num(width) + "\"/>\n";
  }

  void dot(const Point2d& a, std::string_view fill) {
    const Point2d p = map(a);
    out_ += "  <circle cx=\"" + num(p.x()) + "\" cy=\"" + num(p.y()) +
            "\" r=\"3\" fill=\"" + std::string(fill) + "\"/>\n";
  }

  std::string finish() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
           "height=\"800\" viewBox=\"0 0 800 800\">\n" +
           out_ + "</svg>\n";
  }

 private:
  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }

  Point2d lo_, hi_, pad_;
  double scale_ = 1;
  std::string out_;
};

}  // namespace

std::string render_svg(const Polygon& omega, std::span<const Point2d> points,
                       std::span<const Ball> balls) {
  Canvas canvas(omega);
  canvas.path(omega.vertices(), "black", 2);
  for (const auto& b : balls) {
    if (b.kind == MetricKind::Hilbert)
      for (const auto& s : spokes(omega, b.center))
        canvas.line(s.vertex_end, s.opposite_end, "gray", 0.5);
    if (b.shape) canvas.path(b.shape->vertices(), ball_color(b.kind), 1.5);
    canvas.dot(b.center, ball_color(b.kind));
  }
  for (const auto& p : points) canvas.dot(p, "black");
  return canvas.finish();
}

}  // namespace hmeb
