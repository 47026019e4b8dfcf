#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zslab/dual.hpp"
#include "zslab/sim.hpp"

namespace zslab {

// The four boundary regions the dual point rotates through clockwise
// (Z0 top, Z1 right, Z2 bottom, Z3 left), plus the open unit square where
// both players are fully mixed. Comparisons are exact; boundary values like
// z = (1, 0) belong to exactly one region.
enum class Region { Z0, Z1, Z2, Z3, Interior };

Region classify(const ZPoint& z);
const char* region_name(Region r);
int region_index(Region r);  // 0..3 for Z0..Z3, -1 for Interior

// Region-change indices of a z series: entry is the first index >= start
// classified Z0, each later break is the first index whose region differs
// from the previous index's, sentinel is one past the series end. Empty when
// the series never reaches Z0 at or after start.
struct BreakPoints {
  std::uint64_t entry = 0;
  std::vector<std::uint64_t> t;       // t[0] == entry
  std::vector<Region> regions;        // region of the span starting at t[j]
  std::uint64_t sentinel = 0;
};

std::optional<BreakPoints> break_points(std::span<const ZPoint> z, std::uint64_t start);

// Per-partition summary: span [t_start, t_start + length), energy at entry,
// energy step to the next partition (NaN for the final, horizon-truncated
// one), number of indices t in the span with x^t != x^{t+1}, and whether the
// region index jumped by two instead of one.
struct PartitionRow {
  std::uint64_t index = 0;
  std::uint64_t t_start = 0;
  std::uint64_t length = 0;
  Region region = Region::Interior;
  double r_start = 0.0;
  double delta_r = 0.0;
  std::uint64_t strategy_changes = 0;
  bool skipped = false;
};

std::vector<PartitionRow> partition_stats(const Trajectory& traj, const BreakPoints& bp);

// Streaming equivalent of break_points + partition_stats for horizons too long
// to store. Feed every index in order; an Interior observation discards all
// accumulated rows and re-arms (the entry point must lie beyond the last fully
// mixed index). finalize() closes the open row at the sentinel.
class PartitionTracker {
 public:
  void observe(std::uint64_t t, const ZPoint& z, const Vec2& x1, const Vec2& x2, double energy);
  void finalize();

  bool entered() const { return entered_; }
  std::uint64_t entry() const { return entry_; }
  std::uint64_t boundary() const { return boundary_; }  // one past the last Interior index
  const std::vector<PartitionRow>& rows() const { return rows_; }
  // Closed partitions so far (rows() also includes the final open one after finalize()).
  std::uint64_t closed_count() const { return closed_; }

 private:
  void reset(std::uint64_t t);
  void open_row(std::uint64_t t, Region r, double energy);

  std::vector<PartitionRow> rows_;
  PartitionRow open_;
  bool tracking_ = false;
  bool entered_ = false;
  bool finalized_ = false;
  std::uint64_t entry_ = 0;
  std::uint64_t boundary_ = 0;
  std::uint64_t closed_ = 0;
  std::uint64_t next_t_ = 0;
  std::uint64_t last_t_ = 0;
  bool have_x_ = false;
  Vec2 prev_x1_{0.0, 0.0}, prev_x2_{0.0, 0.0};
};

// Largest per-partition strategy-change count (the run's kappa); 0 for no rows.
std::uint64_t max_strategy_changes(std::span<const PartitionRow> rows);

}  // namespace zslab
