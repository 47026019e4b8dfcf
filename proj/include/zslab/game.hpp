#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace zslab {

using Vec2 = std::array<double, 2>;

inline double dot(const Vec2& u, const Vec2& v) { return u[0] * v[0] + u[1] * v[1]; }

struct GameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nash computation requires a + d - b - c != 0 (unique mixed equilibrium).
struct DegenerateGameError : GameError {
  using GameError::GameError;
};

// normalize() requires an interior equilibrium and pairwise-distinct column entries.
struct AssumptionError : GameError {
  using GameError::GameError;
};

// Row player's payoff matrix [[a, b], [c, d]] in a zero-sum game: the row
// player receives x1.A x2, the column player -x1.A x2.
struct PayoffMatrix2x2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double det() const { return a * d - b * c; }
  double denom() const { return a + d - b - c; }
  double max_abs() const;

  // Per-action payoff vector A x2 for the row player.
  Vec2 row_payoffs(const Vec2& x2) const {
    return {a * x2[0] + b * x2[1], c * x2[0] + d * x2[1]};
  }
  // Per-action loss vector A^T x1 for the column player (their payoff is its negation).
  Vec2 col_payoffs(const Vec2& x1) const {
    return {a * x1[0] + c * x1[1], b * x1[0] + d * x1[1]};
  }

  bool operator==(const PayoffMatrix2x2&) const = default;
};

struct NashPoint {
  Vec2 x1;  // row player's mixed strategy
  Vec2 x2;  // column player's mixed strategy
};

struct AssumptionCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;  // the quantity the check looked at (gap, probability, ...)
};

struct AssumptionReport {
  std::vector<AssumptionCheck> checks;
  bool all_pass = false;
};

// A game brought to the canonical form used by the dual-space analysis:
// det(matrix) == 0, matrix.a and matrix.d > max{0, b, c}, a + d - b - c > 0.
struct NormalizedGame {
  PayoffMatrix2x2 matrix;
  PayoffMatrix2x2 original;
  double shift = 0.0;            // constant added to every entry
  bool players_swapped = false;  // matrix is -original^T (plus shift)
  bool columns_relabeled = false;
};

// Unique interior equilibrium of a 2x2 game with a + d - b - c != 0.
// Throws DegenerateGameError otherwise. Components of each strategy sum to 1 exactly.
NashPoint nash_equilibrium(const PayoffMatrix2x2& m);

// Checks the preconditions of normalize(): non-degenerate, pairwise-distinct
// comparisons a!=b, a!=c, d!=b, d!=c, and a fully mixed equilibrium.
AssumptionReport check_assumptions(const PayoffMatrix2x2& m);

// Shift + optional player swap + optional column relabel bringing the game to
// canonical form. Throws AssumptionError when check_assumptions fails.
NormalizedGame normalize(const PayoffMatrix2x2& m);

// Replays the recorded transforms; normalize(g.original) round-trips through this.
PayoffMatrix2x2 apply_transforms(const PayoffMatrix2x2& original, double shift,
                                 bool players_swapped, bool columns_relabeled);

// The [[1,-1],[-1,1]] game, already in canonical form.
PayoffMatrix2x2 matching_pennies();

}  // namespace zslab
