#include "zslab/pennies.hpp"

#include <cmath>

namespace zslab::pennies {

TriangularIndex triangular_index(std::uint64_t t) {
  std::uint64_t n = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(t) + 1.0) - 1.0) / 2.0);
  while (n > 0 && n * (n + 1) / 2 > t) --n;
  while ((n + 1) * (n + 2) / 2 <= t) ++n;
  return {n, t - n * (n + 1) / 2};
}

PayoffPair exact_payoff_vectors(std::uint64_t t) {
  const auto [n, k] = triangular_index(t);
  const std::int64_t sk = static_cast<std::int64_t>(k);
  const std::int64_t sm = static_cast<std::int64_t>(n - k);  // countdown within the block
  const std::array<std::int64_t, 2> up{1 + sk, -sk};         // climbing leg
  const std::array<std::int64_t, 2> down{1 + sm, -sm};       // descending leg
  const std::array<std::int64_t, 2> up2{-sk, 1 + sk};        // same legs, other action
  const std::array<std::int64_t, 2> down2{-sm, 1 + sm};

  switch (n % 4) {
    case 0: return {up, down};
    case 1: return {down, up2};
    case 2: return {up2, down2};
    default: return {down2, up};
  }
}

std::int64_t exact_cumulative_utility(std::uint64_t t) {
  const auto [n, k] = triangular_index(t);
  const std::int64_t sn = static_cast<std::int64_t>(n);
  const std::int64_t sk = static_cast<std::int64_t>(k);
  return n % 2 == 0 ? 1 - sn / 2 + sk : (sn - 1) / 2 - sk;
}

std::int64_t exact_regret(std::uint64_t t) {
  const auto [n, k] = triangular_index(t);
  const std::int64_t sn = static_cast<std::int64_t>(n);
  switch (n % 4) {
    case 0: return sn / 2;
    case 1: return k < n ? (sn - 1) / 2 : (sn + 3) / 2;
    case 2: return sn / 2 + 1;
    default: return (sn + 1) / 2;
  }
}

}  // namespace zslab::pennies
