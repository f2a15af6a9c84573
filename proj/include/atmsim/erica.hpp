#ifndef ATMSIM_ERICA_HPP
#define ATMSIM_ERICA_HPP

#include <cstdint>
#include <map>
#include <set>

#include "atmsim/cell.hpp"
#include "atmsim/time.hpp"

namespace atmsim {

struct EricaConfig {
  double target_utilization = 0.90;
  SimTime avg_interval_time = time_from_ms(1);
  std::uint32_t avg_interval_cells = 100;
  double link_rate_bps = 155.52e6;
};

// Per-port explicit-rate allocation state. The port measures offered load
// and active VCs over averaging intervals; an interval ends when the time
// budget elapses or the cell budget fills, whichever happens first. Each
// interval yields per-VC allocations max(fair share, CCR / load factor)
// that are stamped onto backward RM cells.
class EricaState {
 public:
  explicit EricaState(const EricaConfig& cfg);

  // Every cell offered to the port, beginning an interval lazily.
  void on_input(const Cell& cell);

  bool cell_budget_filled() const {
    return input_cells_ >= cfg_.avg_interval_cells;
  }

  // Closes the current interval at `now` and recomputes allocations.
  // Intervals with no input keep the previous allocations.
  void end_interval(SimTime now);

  // Rate to stamp for this VC: its allocation, or the current fair share
  // when no allocation has been computed yet.
  double allocation_for(std::uint32_t vc_id) const;

  double target_rate() const { return target_rate_; }
  double link_cell_rate() const { return link_rate_; }
  double load_factor() const { return z_; }
  double fair_share() const { return fair_share_; }
  std::uint64_t intervals_completed() const { return intervals_; }

 private:
  EricaConfig cfg_;
  double link_rate_;    // cells/s
  double target_rate_;  // cells/s
  double fair_share_;
  double z_ = 0.0;

  std::uint64_t input_cells_ = 0;
  SimTime interval_start_ = 0;
  std::set<std::uint32_t> active_;
  std::map<std::uint32_t, double> last_ccr_;  // from forward RM cells
  std::map<std::uint32_t, double> alloc_;
  std::uint64_t intervals_ = 0;
};

}  // namespace atmsim

#endif
