#pragma once

// Lower bound on the shape distance from the 120-degree leftward isosceles
// triangle to any triangle inscribed in the half-lemniscate, over all six vertex
// labelings. Taken below the brute-force estimate (128^3 lattice followed by
// compass search, about 0.0916); solver_test re-derives that estimate.
inline constexpr double kLemniscateFloor = 0.09;
