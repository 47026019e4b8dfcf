#pragma once

#include <span>
#include <vector>

namespace zslab {

// Ordinary least squares y ~ slope*x + intercept with coefficient of
// determination. r2 is 1 for a perfect fit and 0 when the fit explains
// nothing; degenerate inputs (fewer than 2 points, zero variance in x)
// yield r2 = 0.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

// Median by partial sort; the argument is consumed as scratch space.
double median(std::vector<float>& values);

}  // namespace zslab
