#include "zslab/game.hpp"

#include <algorithm>
#include <cmath>

namespace zslab {

namespace {

// Relative tolerance for "is this quantity zero" questions on matrix entries.
constexpr double kRelEps = 1e-12;

double zero_scale(const PayoffMatrix2x2& m) { return std::max(1.0, m.max_abs()); }

}  // namespace

double PayoffMatrix2x2::max_abs() const {
  return std::max(std::max(std::fabs(a), std::fabs(b)), std::max(std::fabs(c), std::fabs(d)));
}

NashPoint nash_equilibrium(const PayoffMatrix2x2& m) {
  const double denom = m.denom();
  if (!std::isfinite(denom) || std::fabs(denom) <= kRelEps * zero_scale(m)) {
    throw DegenerateGameError("nash_equilibrium: a + d - b - c is zero; no unique mixed equilibrium");
  }
  // Indifference conditions; second components chosen so the sums are exactly 1.
  const double x21 = (m.d - m.b) / denom;
  const double x11 = (m.d - m.c) / denom;
  return NashPoint{{x11, 1.0 - x11}, {x21, 1.0 - x21}};
}

AssumptionReport check_assumptions(const PayoffMatrix2x2& m) {
  AssumptionReport report;
  const double scale = zero_scale(m);
  auto add = [&report](std::string name, bool pass, double value) {
    report.checks.push_back({std::move(name), pass, value});
  };

  const bool finite = std::isfinite(m.a) && std::isfinite(m.b) && std::isfinite(m.c) && std::isfinite(m.d);
  add("entries finite", finite, m.max_abs());

  const double denom = m.denom();
  const bool nondegenerate = finite && std::fabs(denom) > kRelEps * scale;
  add("a+d-b-c nonzero", nondegenerate, denom);
  add("a != b", finite && std::fabs(m.a - m.b) > kRelEps * scale, m.a - m.b);
  add("a != c", finite && std::fabs(m.a - m.c) > kRelEps * scale, m.a - m.c);
  add("d != b", finite && std::fabs(m.d - m.b) > kRelEps * scale, m.d - m.b);
  add("d != c", finite && std::fabs(m.d - m.c) > kRelEps * scale, m.d - m.c);

  if (nondegenerate) {
    const NashPoint ne = nash_equilibrium(m);
    add("row strategy fully mixed", ne.x1[0] > 0.0 && ne.x1[0] < 1.0, ne.x1[0]);
    add("column strategy fully mixed", ne.x2[0] > 0.0 && ne.x2[0] < 1.0, ne.x2[0]);
  } else {
    add("row strategy fully mixed", false, 0.0);
    add("column strategy fully mixed", false, 0.0);
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const AssumptionCheck& c) { return c.pass; });
  return report;
}

PayoffMatrix2x2 apply_transforms(const PayoffMatrix2x2& original, double shift,
                                 bool players_swapped, bool columns_relabeled) {
  PayoffMatrix2x2 m{original.a + shift, original.b + shift, original.c + shift, original.d + shift};
  if (players_swapped) {
    // The column player of -A^T plays the row player's part; entry-wise this
    // negates and swaps the off-diagonal.
    m = PayoffMatrix2x2{-m.a, -m.c, -m.b, -m.d};
  }
  if (columns_relabeled) {
    m = PayoffMatrix2x2{m.b, m.a, m.d, m.c};
  }
  return m;
}

NormalizedGame normalize(const PayoffMatrix2x2& m) {
  const AssumptionReport report = check_assumptions(m);
  if (!report.all_pass) {
    std::string failed;
    for (const AssumptionCheck& c : report.checks) {
      if (!c.pass) {
        if (!failed.empty()) failed += ", ";
        failed += c.name;
      }
    }
    throw AssumptionError("normalize: game violates assumptions: " + failed);
  }

  NormalizedGame g;
  g.original = m;
  // Make the game singular: det(A + s.J) = det(A) + s*(a+d-b-c).
  g.shift = -m.det() / m.denom();

  PayoffMatrix2x2 n = apply_transforms(m, g.shift, false, false);
  if (n.a <= 0.0) {
    g.players_swapped = true;
    n = apply_transforms(m, g.shift, true, false);
  }
  if (n.denom() < 0.0) {
    g.columns_relabeled = true;
    n = apply_transforms(m, g.shift, g.players_swapped, true);
  }
  g.matrix = n;

  const double scale = zero_scale(n);
  const bool ok = std::fabs(n.det()) <= kRelEps * scale * scale &&
                  n.a > std::max(0.0, std::max(n.b, n.c)) &&
                  n.d > std::max(0.0, std::max(n.b, n.c)) && n.denom() > 0.0;
  if (!ok) {
    throw AssumptionError("normalize: canonical form checks failed after transforms");
  }
  return g;
}

PayoffMatrix2x2 matching_pennies() { return PayoffMatrix2x2{1.0, -1.0, -1.0, 1.0}; }

}  // namespace zslab
