#pragma once

#include <array>

#include "inscribe/curves.hpp"
#include "inscribe/shape_space.hpp"
#include "inscribe/solver.hpp"

namespace inscribe {

// Preimage count of a probe shape, with its parity.
struct LocalDegree {
  int count = 0;
  int degree = 0;  // count mod 2
  Shape probe = Shape::from_pair(1.0, 0.0);  // the probe actually used (after perturbation)
  int perturbations = 0;
  bool all_regular = true;
};

// Counts accepted preimages of `probe` under F. When a preimage tests critical,
// or the count changes under a 1e-4 probe perturbation, the probe is nudged within
// its orientation side and the count repeated (at most 5 retries).
// Throws FlatTarget for flat probes and RegularityFailure when retries run out.
LocalDegree local_degree(const Curve& c, const Shape& probe, const SolverConfig& cfg = {});

struct BidegreeReport {
  int d_minus = 0;
  int d_plus = 0;
  std::array<Shape, 2> probes{Shape::from_pair(1.0, 0.0), Shape::from_pair(1.0, 0.0)};
  std::array<int, 2> preimage_counts{};
  bool all_regular = true;
  int grid_n = 0;
};

// Probes default to the two equilateral shapes: hopf e^{+i pi/3} (clockwise,
// orientation -1) and e^{-i pi/3} (counter-clockwise, orientation +1).
BidegreeReport bidegree(const Curve& c, const SolverConfig& cfg = {});
BidegreeReport bidegree(const Curve& c, const Shape& minus_probe, const Shape& plus_probe,
                        const SolverConfig& cfg = {});

// Equilateral shape with the given orientation (+1 or -1).
Shape equilateral_shape(int orientation);

}  // namespace inscribe
