#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "inscribe/degree.hpp"
#include "inscribe/errors.hpp"

namespace inscribe::cli {

using nlohmann::json;

namespace {

double parse_number(const std::string& s, std::size_t begin, std::size_t end, std::size_t offset) {
  double v = 0.0;
  const char* first = s.data() + begin;
  const char* last = s.data() + end;
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || first == last) {
    throw ParseError("expected a decimal number in '" + s + "'", offset + begin);
  }
  if (ptr != last) {
    throw ParseError("unexpected character in '" + s + "'",
                     offset + static_cast<std::size_t>(ptr - s.data()));
  }
  if (!std::isfinite(v)) throw ParseError("number is not finite in '" + s + "'", offset + begin);
  return v;
}

// Comma separated numbers of s[begin, end).
std::vector<double> parse_list(const std::string& s, std::size_t begin, std::size_t offset = 0) {
  std::vector<double> out;
  std::size_t pos = begin;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::size_t stop = comma == std::string::npos ? s.size() : comma;
    out.push_back(parse_number(s, pos, stop, offset));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

json triangle_json(const Triangle& t) {
  return json::array({point_json(t.z0), point_json(t.z1), point_json(t.z2)});
}

json solution_json(const Solution& s) {
  return {{"t", {s.p[0], s.p[1], s.p[2]}},
          {"residual", s.residual},
          {"vertices", triangle_json(s.vertices)},
          {"regular", s.regular},
          {"sigma_min", s.sigma_min},
          {"newton_iters", s.newton_iters}};
}

double min_over(const std::vector<double>& v) {
  return v.empty() ? std::numeric_limits<double>::infinity() : *std::min_element(v.begin(), v.end());
}

void emit(const json& j, const std::string& json_path, std::ostream& out) {
  if (json_path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(json_path);
  if (!f) throw InvalidParameter("cannot write " + json_path);
  f << j.dump(2) << "\n";
}

}  // namespace

Triangle leftward_isosceles(double apex_deg) {
  if (!(apex_deg > 0.0 && apex_deg < 180.0)) {
    throw InvalidParameter("apex angle must lie strictly between 0 and 180 degrees");
  }
  const double half = std::tan(apex_deg * std::numbers::pi / 360.0);
  return Triangle{0.0, {1.0, half}, {1.0, -half}};
}

Triangle parse_triangle(const std::string& spec) {
  if (spec == "equilateral") return Triangle{0.0, 1.0, {0.5, std::sqrt(3.0) / 2.0}};
  if (spec == "right-isosceles") return Triangle{0.0, 1.0, {0.0, 1.0}};
  const std::string obtuse = "obtuse-isosceles:";
  if (starts_with(spec, obtuse)) {
    const double angle = parse_number(spec, obtuse.size(), spec.size(), 0);
    if (!(angle > 90.0 && angle < 180.0)) {
      throw ParseError("obtuse apex angle must lie in (90, 180)", obtuse.size());
    }
    return leftward_isosceles(angle);
  }

  std::vector<Point> pts;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    if (std::isspace(static_cast<unsigned char>(spec[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < spec.size() && !std::isspace(static_cast<unsigned char>(spec[end]))) ++end;
    const std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos || comma >= end) {
      throw ParseError("vertex must be written x,y", pos);
    }
    if (pts.size() == 3) throw ParseError("more than three vertices", pos);
    pts.emplace_back(parse_number(spec, pos, comma, 0), parse_number(spec, comma + 1, end, 0));
    pos = end;
  }
  if (pts.size() != 3) throw ParseError("expected three vertices 'x0,y0 x1,y1 x2,y2'", spec.size());
  return Triangle{pts[0], pts[1], pts[2]};
}

Curve parse_curve(const std::string& spec) {
  if (spec == "circle") return make_circle();
  if (spec == "lemniscate") return make_half_lemniscate();
  if (starts_with(spec, "ellipse:")) {
    const auto v = parse_list(spec, 8);
    if (v.size() != 2) throw ParseError("ellipse takes a,b", 8);
    return make_ellipse(v[0], v[1]);
  }
  if (starts_with(spec, "star:")) {
    const auto v = parse_list(spec, 5);
    if (v.size() != 2) throw ParseError("star takes eps,k", 5);
    if (v[1] != std::floor(v[1])) throw ParseError("star k must be an integer", 5);
    return make_star(v[0], static_cast<int>(v[1]));
  }
  if (starts_with(spec, "spline:")) {
    const std::string path = spec.substr(7);
    if (path.empty()) throw ParseError("spline needs a point file path", 7);
    return make_spline(read_point_file(path));
  }
  throw ParseError("unknown curve '" + spec + "'", 0);
}

const std::array<std::array<int, 3>, 6>& labelings() {
  static const std::array<std::array<int, 3>, 6> all{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return all;
}

Triangle relabel(const Triangle& t, const std::array<int, 3>& order) {
  return Triangle{t[order[0]], t[order[1]], t[order[2]]};
}

json point_json(Point p) { return json::array({p.real(), p.imag()}); }

json shape_json(const Shape& s) {
  return json::array({s.w1().real(), s.w1().imag(), s.w2().real(), s.w2().imag()});
}

json hopf_json(const HopfCoord& h) {
  if (h.is_infinite()) return "inf";
  return point_json(h.value());
}

json cmd_shape(const Triangle& t, double tol) {
  const Shape s = shape_of(t);
  const ShapeClass cls = classify(s, tol);
  return {{"shape", shape_json(s)},
          {"hopf", hopf_json(hopf(s))},
          {"classes", cls.names()},
          {"orientation", cls.orientation},
          {"tol", tol}};
}

SolveOutput cmd_solve(const Curve& c, const Triangle& target, const SolverConfig& cfg,
                      bool all_labelings) {
  const Shape base = shape_of(target);
  SolveOutput out;
  json runs = json::array();
  std::vector<double> minima;
  const std::size_t count = all_labelings ? labelings().size() : 1;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& order = labelings()[i];
    const Shape s = shape_of(relabel(target, order));
    const SolveReport rep = solve(c, s, cfg);
    json sols = json::array();
    for (const Solution& sol : rep.solutions) {
      sols.push_back(solution_json(sol));
      out.solutions.push_back(sol);
    }
    minima.push_back(rep.min_residual);
    out.found = out.found || rep.status == SolveStatus::found;
    runs.push_back({{"labeling", order},
                    {"shape", shape_json(s)},
                    {"status", to_string(rep.status)},
                    {"min_scan_residual", rep.min_scan_residual},
                    {"min_residual", rep.min_residual},
                    {"scan_minima_examined", rep.scan_minima_examined},
                    {"solutions", sols}});
  }
  const bool flat = classify(base, 1e-12).has(Locus::flat);
  out.json = {{"curve", c.name()},
              {"c1", c.is_c1()},
              {"target", {{"triangle", triangle_json(target)},
                          {"shape", shape_json(base)},
                          {"hopf", hopf_json(hopf(base))}}},
              {"grid", cfg.grid_n},
              {"residual_accept", cfg.residual_accept},
              {"status", out.found ? "found" : (flat ? "degenerate_target" : "not_found")},
              {"min_residual", min_over(minima)},
              {"labelings", runs}};
  return out;
}

json cmd_degree(const Curve& c, const SolverConfig& cfg) {
  const BidegreeReport rep = bidegree(c, cfg);
  json probes = json::array();
  for (const Shape& p : rep.probes) {
    probes.push_back({{"shape", shape_json(p)},
                      {"hopf", hopf_json(hopf(p))},
                      {"orientation", classify(p, 1e-12).orientation}});
  }
  return {{"curve", c.name()},
          {"minus", rep.d_minus},
          {"plus", rep.d_plus},
          {"probes", probes},
          {"counts", rep.preimage_counts},
          {"all_regular", rep.all_regular},
          {"grid", rep.grid_n}};
}

json cmd_counterexample(int grid_n) {
  const Curve lem = make_half_lemniscate();
  const Curve circle = make_circle();
  SolverConfig cfg;
  cfg.grid_n = grid_n;

  auto lemniscate_run = [&](double apex) {
    const Triangle t = leftward_isosceles(apex);
    std::vector<double> minima;
    bool found = false;
    for (const auto& order : labelings()) {
      const SolveReport rep = solve(lem, shape_of(relabel(t, order)), cfg);
      minima.push_back(rep.min_residual);
      found = found || rep.status == SolveStatus::found;
    }
    return std::pair{min_over(minima), found};
  };

  json rows = json::array();
  for (int apex = 95; apex <= 175; apex += 10) {
    const Triangle t = leftward_isosceles(apex);
    const auto [lem_min, lem_found] = lemniscate_run(apex);
    const ParamTriple p = circle_oracle(t);
    const double circle_residual = shape_distance(F(circle, p), shape_of(t));
    rows.push_back({{"apex_deg", apex},
                    {"triangle", triangle_json(t)},
                    {"lemniscate_min_residual", lem_min},
                    {"lemniscate_status", lem_found ? "found" : "not_found"},
                    {"circle_t", {p[0], p[1], p[2]}},
                    {"circle_residual", circle_residual}});
  }
  const auto [acute_min, acute_found] = lemniscate_run(60.0);
  return {{"curve", lem.name()},
          {"grid", grid_n},
          {"labelings", 6},
          {"obtuse", rows},
          {"acute_reference", {{"apex_deg", 60},
                               {"lemniscate_min_residual", acute_min},
                               {"lemniscate_status", acute_found ? "found" : "not_found"}}}};
}

std::string render_svg(const Curve& c, const std::vector<Solution>& solutions,
                       const Triangle& target) {
  constexpr int kSamples = 512;
  std::vector<Point> pts(kSamples);
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (int i = 0; i < kSamples; ++i) {
    pts[static_cast<std::size_t>(i)] = c.value(static_cast<double>(i) / kSamples);
    const Point p = pts[static_cast<std::size_t>(i)];
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double margin = 0.1 * span;
  const double size = 600.0;
  const double scale = size / (span + 2 * margin);
  auto map = [&](Point p) {
    return Point((p.real() - xmin + margin) * scale, (ymax + margin - p.imag()) * scale);
  };
  const double width = (xmax - xmin + 2 * margin) * scale;
  const double height = (ymax - ymin + 2 * margin) * scale;

  std::ostringstream svg;
  svg.precision(6);
  svg << std::fixed;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <path d=\"";
  for (int i = 0; i < kSamples; ++i) {
    const Point q = map(pts[static_cast<std::size_t>(i)]);
    svg << (i == 0 ? "M " : " L ") << q.real() << " " << q.imag();
  }
  svg << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (const Solution& s : solutions) {
    svg << "  <polygon points=\"";
    for (int k = 0; k < 3; ++k) {
      const Point q = map(s.vertices[k]);
      svg << (k ? " " : "") << q.real() << "," << q.imag();
    }
    svg << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.2\"/>\n";
  }

  // Target inset in the top-left corner, scaled into an 80 px box.
  const double tx0 = std::min({target.z0.real(), target.z1.real(), target.z2.real()});
  const double tx1 = std::max({target.z0.real(), target.z1.real(), target.z2.real()});
  const double ty0 = std::min({target.z0.imag(), target.z1.imag(), target.z2.imag()});
  const double ty1 = std::max({target.z0.imag(), target.z1.imag(), target.z2.imag()});
  const double tspan = std::max({tx1 - tx0, ty1 - ty0, 1e-12});
  const double box = 80.0;
  svg << "  <polyline points=\"";
  for (int k = 0; k <= 3; ++k) {
    const Point v = target[k % 3];
    svg << (k ? " " : "") << 10.0 + (v.real() - tx0) / tspan * box << ","
        << 10.0 + (ty1 - v.imag()) / tspan * box;
  }
  svg << "\" fill=\"none\" stroke=\"#2c3e50\" stroke-width=\"1\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inscribe triangles in closed C1 curves"};
  app.require_subcommand(1);

  std::string triangle_spec, curve_spec = "circle", json_path, svg_path;
  double tol = 1e-6;
  double accept = SolverConfig{}.residual_accept;
  int grid = 64;
  bool all = false;

  auto* shape_cmd = app.add_subcommand("shape", "Shape, Hopf coordinate and loci of a triangle");
  shape_cmd->add_option("triangle,--triangle", triangle_spec, "x0,y0 x1,y1 x2,y2 or a preset")->required();
  shape_cmd->add_option("--tol", tol, "classification tolerance")->capture_default_str();
  shape_cmd->add_option("--json", json_path, "write JSON here instead of stdout");

  auto* solve_cmd = app.add_subcommand("solve", "Inscribe a triangle in a curve");
  solve_cmd->add_option("--curve", curve_spec, "curve spec")->capture_default_str();
  solve_cmd->add_option("--triangle", triangle_spec, "x0,y0 x1,y1 x2,y2 or a preset")->required();
  solve_cmd->add_option("--grid", grid, "lattice points per axis")->capture_default_str();
  solve_cmd->add_option("--tol", accept, "accepted shape distance")->capture_default_str();
  solve_cmd->add_flag("--all-labelings", all, "solve all six vertex orderings");
  solve_cmd->add_option("--svg", svg_path, "write an SVG figure");
  solve_cmd->add_option("--json", json_path, "write JSON here instead of stdout");

  auto* degree_cmd = app.add_subcommand("degree", "Mod-2 bidegree of the configuration map");
  degree_cmd->add_option("--curve", curve_spec, "curve spec")->capture_default_str();
  degree_cmd->add_option("--grid", grid, "lattice points per axis")->capture_default_str();
  degree_cmd->add_option("--json", json_path, "write JSON here instead of stdout");

  int counter_grid = 96;
  auto* counter_cmd =
      app.add_subcommand("counterexample", "Obtuse isosceles sweep on the half-lemniscate");
  counter_cmd->add_option("--grid", counter_grid, "lattice points per axis")->capture_default_str();
  counter_cmd->add_option("--json", json_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (shape_cmd->parsed()) {
      emit(cmd_shape(parse_triangle(triangle_spec), tol), json_path, out);
      return kOk;
    }
    SolverConfig cfg;
    cfg.grid_n = grid;
    cfg.residual_accept = accept;
    if (solve_cmd->parsed()) {
      const Curve c = parse_curve(curve_spec);
      const Triangle t = parse_triangle(triangle_spec);
      const SolveOutput res = cmd_solve(c, t, cfg, all);
      emit(res.json, json_path, out);
      if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw InvalidParameter("cannot write " + svg_path);
        f << render_svg(c, res.solutions, t);
      }
      const bool flat = classify(shape_of(t), 1e-12).has(Locus::flat);
      if (!res.found && c.is_c1() && !flat) return kNotFound;
      return kOk;
    }
    if (degree_cmd->parsed()) {
      emit(cmd_degree(parse_curve(curve_spec), cfg), json_path, out);
      return kOk;
    }
    if (counter_cmd->parsed()) {
      emit(cmd_counterexample(counter_grid), json_path, out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kParse;
  } catch (const EmbeddingFailure& e) {
    err << "validation failed: " << e.what() << "\n";
    return kValidation;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kValidation;
  } catch (const ConfigError& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kValidation;
  } catch (const NotC1& e) {
    err << "validation failed: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace inscribe::cli
