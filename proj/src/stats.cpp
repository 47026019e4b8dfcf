#include "zslab/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace zslab {

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_linear: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) return {};

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) return {};

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // Residual sum of squares folded into r2 = 1 - SS_res/SS_tot.
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - (syy - fit.slope * sxy) / syy;
  return fit;
}

double median(std::vector<float>& values) {
  if (values.empty()) throw std::invalid_argument("median: empty input");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  double m = values[mid];
  if (values.size() % 2 == 0) {
    const auto lower = std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    m = (m + *lower) / 2.0;
  }
  return m;
}

}  // namespace zslab
