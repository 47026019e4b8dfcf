#include "zslab/partition.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zslab {

Region classify(const ZPoint& z) {
  if (z.z1 < 1.0 && z.z2 >= 1.0) return Region::Z0;
  if (z.z1 >= 1.0 && z.z2 > 0.0) return Region::Z1;
  if (z.z1 > 0.0 && z.z2 <= 0.0) return Region::Z2;
  if (z.z1 <= 0.0 && z.z2 < 1.0) return Region::Z3;
  return Region::Interior;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Z0: return "Z0";
    case Region::Z1: return "Z1";
    case Region::Z2: return "Z2";
    case Region::Z3: return "Z3";
    case Region::Interior: return "Interior";
  }
  return "?";
}

int region_index(Region r) {
  return r == Region::Interior ? -1 : static_cast<int>(r);
}

std::optional<BreakPoints> break_points(std::span<const ZPoint> z, std::uint64_t start) {
  BreakPoints bp;
  std::uint64_t t = start;
  for (; t < z.size(); ++t) {
    if (classify(z[t]) == Region::Z0) break;
  }
  if (t >= z.size()) return std::nullopt;

  bp.entry = t;
  bp.t.push_back(t);
  bp.regions.push_back(Region::Z0);
  Region current = Region::Z0;
  for (++t; t < z.size(); ++t) {
    const Region r = classify(z[t]);
    if (r != current) {
      bp.t.push_back(t);
      bp.regions.push_back(r);
      current = r;
    }
  }
  bp.sentinel = z.size();
  return bp;
}

namespace {

bool skip_from(Region prev, Region next) {
  const int a = region_index(prev);
  const int b = region_index(next);
  if (a < 0 || b < 0) return false;
  return (b - a + 4) % 4 == 2;
}

}  // namespace

std::vector<PartitionRow> partition_stats(const Trajectory& traj, const BreakPoints& bp) {
  const PiecewiseEnergy pe = energy_coefficients(traj.game.matrix, traj.eta);
  std::vector<PartitionRow> rows;
  rows.reserve(bp.t.size());

  for (std::size_t j = 0; j < bp.t.size(); ++j) {
    PartitionRow row;
    row.index = j;
    row.t_start = bp.t[j];
    const std::uint64_t t_end = j + 1 < bp.t.size() ? bp.t[j + 1] : bp.sentinel;
    row.length = t_end - row.t_start;
    row.region = bp.regions[j];
    row.r_start = total_energy(pe, traj.z_at(row.t_start));
    row.delta_r = j + 1 < bp.t.size()
                      ? total_energy(pe, traj.z_at(bp.t[j + 1])) - row.r_start
                      : std::numeric_limits<double>::quiet_NaN();
    row.skipped = j > 0 && skip_from(bp.regions[j - 1], bp.regions[j]);

    std::uint64_t changes = 0;
    for (std::uint64_t t = row.t_start; t < t_end && t + 1 < traj.size(); ++t) {
      if (traj.x11[t] != traj.x11[t + 1] || traj.x21[t] != traj.x21[t + 1]) ++changes;
    }
    row.strategy_changes = changes;
    rows.push_back(row);
  }
  return rows;
}

void PartitionTracker::reset(std::uint64_t t) {
  rows_.clear();
  tracking_ = false;
  entered_ = false;
  closed_ = 0;
  boundary_ = t + 1;
}

void PartitionTracker::open_row(std::uint64_t t, Region r, double energy) {
  open_ = PartitionRow{};
  open_.index = closed_;
  open_.t_start = t;
  open_.region = r;
  open_.r_start = energy;
  open_.delta_r = std::numeric_limits<double>::quiet_NaN();
}

void PartitionTracker::observe(std::uint64_t t, const ZPoint& z, const Vec2& x1, const Vec2& x2,
                               double energy) {
  if (finalized_) throw std::logic_error("PartitionTracker: observe after finalize");
  if (t != next_t_) throw std::logic_error("PartitionTracker: indices must be consecutive from 0");
  ++next_t_;
  last_t_ = t;

  // A strategy change on the step into t belongs to the partition holding t-1.
  if (tracking_ && have_x_ && (x1[0] != prev_x1_[0] || x1[1] != prev_x1_[1] ||
                               x2[0] != prev_x2_[0] || x2[1] != prev_x2_[1])) {
    ++open_.strategy_changes;
  }
  prev_x1_ = x1;
  prev_x2_ = x2;
  have_x_ = true;

  const Region r = classify(z);
  if (r == Region::Interior) {
    reset(t);
    return;
  }
  if (!tracking_) {
    if (r == Region::Z0) {
      tracking_ = true;
      entered_ = true;
      entry_ = t;
      open_row(t, r, energy);
    }
    return;
  }
  if (r != open_.region) {
    PartitionRow closed = open_;
    closed.length = t - closed.t_start;
    closed.delta_r = energy - closed.r_start;
    rows_.push_back(closed);
    ++closed_;
    const Region prev = closed.region;
    open_row(t, r, energy);
    open_.skipped = skip_from(prev, r);
  }
}

void PartitionTracker::finalize() {
  if (finalized_) return;
  finalized_ = true;
  if (tracking_) {
    open_.length = (last_t_ + 1) - open_.t_start;
    rows_.push_back(open_);
  }
}

std::uint64_t max_strategy_changes(std::span<const PartitionRow> rows) {
  std::uint64_t k = 0;
  for (const PartitionRow& row : rows) k = std::max(k, row.strategy_changes);
  return k;
}

}  // namespace zslab
