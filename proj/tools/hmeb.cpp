// hmeb: distances, balls and minimum enclosing balls in the Funk, reverse
// Funk, Hilbert and Thompson geometries of a convex polygon.
//
// Exit codes: 0 ok, 2 malformed document, 3 geometric precondition, 4 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hmeb/bench.hpp"
#include "hmeb/documents.hpp"
#include "hmeb/svg.hpp"

namespace {

enum ExitCode { kOk = 0, kParse = 2, kGeometry = 3, kUsage = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int fail(int code, std::string_view tag, std::string_view detail) {
  std::string line(detail);
  for (char& c : line)
    if (c == '\n' || c == '\r') c = ' ';
  std::cerr << "error: " << tag << ": " << line << "\n";
  return code;
}

hmeb::Point2d parse_xy(const std::string& text, const char* flag) {
  std::istringstream in(text);
  double x = 0, y = 0;
  char comma = 0;
  if (!(in >> x >> comma >> y) || comma != ',' || !(in >> std::ws).eof())
    throw UsageError(std::string(flag) + " expects x,y");
  return {x, y};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw UsageError("cannot write " + path);
}

struct Options {
  std::string input;
  std::string metric;
  std::string solver;
  std::string svg;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::string p, q, center;
  double radius = 0;
};

hmeb::InstanceDocument load(const Options& opt) {
  auto doc = hmeb::load_instance_document(opt.input);
  if (!opt.metric.empty()) {
    if (!hmeb::parse_metric(opt.metric)) throw UsageError("unknown metric " + opt.metric);
    doc.metric = opt.metric;
  }
  if (opt.seed) doc.seed = *opt.seed;
  if (opt.tolerance) doc.tolerance = *opt.tolerance;
  return doc;
}

int cmd_distance(const Options& opt) {
  const auto doc = load(opt);
  const hmeb::Polygon omega(doc.polygon);
  const double d = hmeb::distance(omega, *hmeb::parse_metric(doc.metric),
                                  parse_xy(opt.p, "--p"), parse_xy(opt.q, "--q"));
  std::printf("%.12f\n", d);
  return kOk;
}

int cmd_ball(const Options& opt) {
  const auto doc = load(opt);
  if (!(opt.radius >= 0)) throw UsageError("--radius must be >= 0");
  const hmeb::Polygon omega(doc.polygon);
  const auto b = hmeb::ball(omega, *hmeb::parse_metric(doc.metric),
                            parse_xy(opt.center, "--center"), opt.radius);
  std::cout << hmeb::serialize_ball(b);
  if (!opt.svg.empty()) write_file(opt.svg, hmeb::render_svg(omega, {}, std::span(&b, 1)));
  return kOk;
}

int cmd_meb(const Options& opt) {
  const auto doc = load(opt);
  const auto instance = hmeb::make_instance(doc);
  std::string solver = opt.solver;
  if (solver.empty())
    solver = instance.kind() == hmeb::MetricKind::Hilbert ? "lp_type" : "bisection";
  if (solver != "lp_type" && solver != "bisection")
    throw UsageError("--solver must be lp_type or bisection");
  if (solver == "lp_type" && instance.kind() != hmeb::MetricKind::Hilbert)
    throw UsageError("the lp_type solver requires the hilbert metric");

  const auto result =
      solver == "lp_type" ? hmeb::lp_type_solve(instance) : hmeb::min_ball_bisection(instance);
  std::cout << hmeb::serialize_result_document(hmeb::make_result_document(instance, result));
  if (!opt.svg.empty())
    write_file(opt.svg, hmeb::render_svg(instance.omega(), instance.points(),
                                         std::span(&result.ball, 1)));
  return kOk;
}

int cmd_bench(const Options& opt) {
  hmeb::BenchConfig cfg;
  if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) throw hmeb::DocumentError("config", "cannot read " + opt.input);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = hmeb::parse_bench_config(ss.str());
  }
  if (opt.seed) cfg.seed = *opt.seed;
  std::cout << hmeb::bench_csv(hmeb::run_bench(cfg));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balls and minimum enclosing balls in polygonal Hilbert geometries"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input", opt.input, "Instance document (JSON)");
    if (input_required) in->required();
    sub->add_option("--metric", opt.metric, "funk, reverse_funk, hilbert or thompson");
    sub->add_option("--seed", opt.seed, "Random seed");
  };

  auto* distance = app.add_subcommand("distance", "Distance between two points");
  add_common(distance, true);
  distance->add_option("--p", opt.p, "First point x,y")->required();
  distance->add_option("--q", opt.q, "Second point x,y")->required();

  auto* ball = app.add_subcommand("ball", "Realize a closed ball");
  add_common(ball, true);
  ball->add_option("--center", opt.center, "Center x,y")->required();
  ball->add_option("--radius", opt.radius, "Radius")->required();
  ball->add_option("--svg", opt.svg, "Write an SVG drawing");

  auto* meb = app.add_subcommand("meb", "Minimum enclosing ball of the instance points");
  add_common(meb, true);
  meb->add_option("--solver", opt.solver, "lp_type (hilbert only) or bisection");
  meb->add_option("--tolerance", opt.tolerance, "Radius tolerance of the bisection");
  meb->add_option("--svg", opt.svg, "Write an SVG drawing");

  auto* bench = app.add_subcommand("bench", "LP-type solver primitive counts, CSV");
  add_common(bench, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kUsage, "usage", e.what());
  }

  try {
    if (*distance) return cmd_distance(opt);
    if (*ball) return cmd_ball(opt);
    if (*meb) return cmd_meb(opt);
    if (*bench) return cmd_bench(opt);
  } catch (const hmeb::DocumentError& e) {
    return fail(kParse, "parse", e.what());
  } catch (const hmeb::GeometryError& e) {
    return fail(kGeometry, hmeb::error_code_name(e.code()), e.what());
  } catch (const UsageError& e) {
    return fail(kUsage, "usage", e.what());
  }
  return kUsage;
}
