#pragma once

#include <span>
#include <vector>

#include "bvf/grid.hpp"

namespace bvf {

/// Sum of |f(x_{i+1}) - f(x_i)|, the variation of the sampled function over
/// the grid partition. Complex samples use the complex modulus.
double total_variation(const SampledFunction& f);

/// Central differences in the interior, first-order one-sided at the ends.
/// Jumps show up as O(1/h) spikes next to the jump.
SampledFunction derivative(const SampledFunction& f);

/// (1/|t|) * integral of |f(u) - f(x)| over the window between x and x+t,
/// composite trapezoid on the linear interpolant (window ends interpolated).
double lebesgue_point_defect(const SampledFunction& f, double x, double t);

/// Composite trapezoid weights for a grid (h/2 at the ends, h inside).
std::vector<double> trapezoid_weights(const Grid& grid);

double trapezoid(const Grid& grid, std::span<const double> values);
double integral(const SampledFunction& f);
double l1_norm(const SampledFunction& f);

}  // namespace bvf
