#include "zslab/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zslab {

void LearnerState::validate() const {
  if (n() < 2) throw std::invalid_argument("LearnerState: need at least two actions");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw std::invalid_argument("LearnerState: eta must be positive");
  for (double v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument("LearnerState: payoff vector must be finite");
  }
}

std::vector<int> support_set(std::span<const double> y, double eta) {
  const int n = static_cast<int>(y.size());
  if (n < 2) throw std::invalid_argument("support_set: need at least two actions");
  if (!(eta > 0.0)) throw std::invalid_argument("support_set: eta must be positive");

  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  double sum = std::accumulate(y.begin(), y.end(), 0.0);

  while (s.size() > 1) {
    // Only the minimum-payoff coordinate can be assigned negative mass.
    auto lowest = std::min_element(s.begin(), s.end(),
                                   [&y](int i, int j) { return y[i] < y[j]; });
    const double mean = sum / static_cast<double>(s.size());
    const double mass = eta * (y[*lowest] - mean) + 1.0 / static_cast<double>(s.size());
    if (mass >= 0.0) break;
    sum -= y[*lowest];
    s.erase(lowest);
  }
  return s;
}

std::vector<double> gd_strategy(std::span<const double> y, double eta) {
  const std::vector<int> s = support_set(y, eta);
  std::vector<double> x(y.size(), 0.0);
  if (s.size() == 1) {
    x[s[0]] = 1.0;
    return x;
  }
  double sum = 0.0;
  for (int i : s) sum += y[i];
  const double mean = sum / static_cast<double>(s.size());
  const double base = 1.0 / static_cast<double>(s.size());
  for (int i : s) x[i] = eta * (y[i] - mean) + base;
  return x;
}

Vec2 gd_strategy2(const Vec2& y, double eta) {
  const double mean = (y[0] + y[1]) / 2.0;
  const double x0 = eta * (y[0] - mean) + 0.5;
  const double x1 = eta * (y[1] - mean) + 0.5;
  if (x0 < 0.0) return {0.0, 1.0};
  if (x1 < 0.0) return {1.0, 0.0};
  return {x0, x1};
}

}  // namespace zslab
