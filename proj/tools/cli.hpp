#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "inscribe/curves.hpp"
#include "inscribe/shape_space.hpp"
#include "inscribe/solver.hpp"

namespace inscribe::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kValidation = 2,
  kNotFound = 3,
  kParse = 4,
};

// "x0,y0 x1,y1 x2,y2" or a preset: equilateral, right-isosceles,
// obtuse-isosceles:ANGLE_DEG. Throws ParseError with the offending position.
Triangle parse_triangle(const std::string& spec);

// circle | ellipse:a,b | star:eps,k | spline:PATH | lemniscate
Curve parse_curve(const std::string& spec);

// Isosceles triangle with apex C = 0 on the left of a vertical base at x = 1:
// (C, A, B) = (0, 1 + i tan(angle/2), 1 - i tan(angle/2)).
Triangle leftward_isosceles(double apex_deg);

// The six vertex orderings, identity first.
const std::array<std::array<int, 3>, 6>& labelings();
Triangle relabel(const Triangle& t, const std::array<int, 3>& order);

nlohmann::json shape_json(const Shape& s);
nlohmann::json hopf_json(const HopfCoord& h);
nlohmann::json point_json(Point p);

nlohmann::json cmd_shape(const Triangle& t, double tol);

struct SolveOutput {
  nlohmann::json json;
  std::vector<Solution> solutions;  // across all labelings run
  bool found = false;
};
SolveOutput cmd_solve(const Curve& c, const Triangle& target, const SolverConfig& cfg,
                      bool all_labelings);

nlohmann::json cmd_degree(const Curve& c, const SolverConfig& cfg);

nlohmann::json cmd_counterexample(int grid_n);

// Curve as one <path> (512 samples), one <polygon> per solution and the target
// as a closed <polyline> inset.
std::string render_svg(const Curve& c, const std::vector<Solution>& solutions,
                       const Triangle& target);

// Full command-line entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace inscribe::cli
