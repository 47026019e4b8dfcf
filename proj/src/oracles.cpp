#include "zslab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace zslab::oracles {

std::vector<double> project_to_simplex(std::vector<double> v) {
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double running = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    running += sorted[i];
    const double candidate = (running - 1.0) / static_cast<double>(i + 1);
    if (candidate < sorted[i]) theta = candidate;
  }
  for (double& x : v) x = std::max(0.0, x - theta);
  return v;
}

std::vector<double> qp_strategy(std::span<const double> y, double eta, int iterations) {
  const std::size_t n = y.size();
  if (n < 2) throw std::invalid_argument("qp_strategy: need at least two actions");
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  // Gradient of the objective is y - x/eta; a step of eta/2 contracts the
  // distance to the maximizer by exactly 1/2: x' = P(x/2 + (eta/2) y).
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 0.5 * x[i] + 0.5 * eta * y[i];
    x = project_to_simplex(std::move(v));
  }
  return x;
}

std::vector<int> best_support(std::span<const double> y, double eta) {
  const int n = static_cast<int>(y.size());
  if (n < 2 || n > 20) throw std::invalid_argument("best_support: supported for 2..20 actions");

  std::vector<int> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    double sum = 0.0;
    int size = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sum += y[i];
        ++size;
      }
    }
    const double mean = sum / size;
    double value = 0.0;
    bool feasible = true;
    for (int i = 0; i < n && feasible; ++i) {
      if (!(mask & (1u << i))) continue;
      const double m = eta * (y[i] - mean) + 1.0 / size;
      if (m < 0.0) feasible = false;
      value += y[i] * m - m * m / (2.0 * eta);
    }
    if (!feasible) continue;
    if (value > best_value ||
        (value == best_value && size > static_cast<int>(best.size()))) {
      best_value = value;
      best.clear();
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) best.push_back(i);
      }
    }
  }
  return best;
}

}  // namespace zslab::oracles
