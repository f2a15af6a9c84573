#include "atmsim/erica.hpp"

#include <algorithm>

namespace atmsim {

EricaState::EricaState(const EricaConfig& cfg)
    : cfg_(cfg),
      link_rate_(link_cell_rate(cfg.link_rate_bps)),
      target_rate_(cfg.target_utilization * link_rate_),
      fair_share_(target_rate_) {}

void EricaState::on_input(const Cell& cell) {
  ++input_cells_;
  active_.insert(cell.vc_id);
  if (cell.is_forward_rm()) {
    last_ccr_[cell.vc_id] = cell.rm.ccr;
  }
}

void EricaState::end_interval(SimTime now) {
  ++intervals_;
  const SimTime elapsed = std::max<SimTime>(now - interval_start_, 1);
  if (!active_.empty()) {
    const double input_rate =
        static_cast<double>(input_cells_) / time_to_s(elapsed);
    z_ = input_rate / target_rate_;
    fair_share_ = target_rate_ / static_cast<double>(active_.size());
    for (std::uint32_t vc : active_) {
      double share = fair_share_;
      if (auto it = last_ccr_.find(vc); it != last_ccr_.end() && z_ > 0.0) {
        share = std::max(share, it->second / z_);
      }
      alloc_[vc] = share;
    }
  }
  input_cells_ = 0;
  active_.clear();
  interval_start_ = now;
}

double EricaState::allocation_for(std::uint32_t vc_id) const {
  if (auto it = alloc_.find(vc_id); it != alloc_.end()) return it->second;
  return fair_share_;
}

}  // namespace atmsim
