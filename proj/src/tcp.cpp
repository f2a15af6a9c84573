#include "atmsim/tcp.hpp"

#include <algorithm>
#include <stdexcept>

#include "atmsim/kernel.hpp"

namespace atmsim {

SimTime retransmit_timer_value(const TcpConfig& cfg) {
  const SimTime g = cfg.timer_granularity;
  if (g == 0) return cfg.rto_base;
  return ((cfg.rto_base + g - 1) / g) * g;
}

TcpSender::TcpSender(const TcpConfig& cfg)
    : w_rcvr_(cfg.rcvr_window_segments()) {
  // Unconstrained first slow start: threshold at the receiver window.
  ssthresh_ = static_cast<double>(w_rcvr_);
}

std::uint32_t TcpSender::effective_window() const {
  const double w = std::min(cwnd_, static_cast<double>(w_rcvr_));
  return static_cast<std::uint32_t>(w);  // floor; cwnd >= 1 always
}

std::vector<std::uint32_t> TcpSender::admit_window() {
  std::vector<std::uint32_t> out;
  while (snd_nxt_ - snd_una_ < effective_window()) {
    out.push_back(snd_nxt_++);
  }
  return out;
}

std::vector<std::uint32_t> TcpSender::on_ack(std::uint32_t ack_index) {
  if (ack_index > snd_nxt_) {
    throw SimError("ack for never-sent data: ack=" + std::to_string(ack_index) +
                   " snd_nxt=" + std::to_string(snd_nxt_));
  }
  if (ack_index <= snd_una_) return {};  // duplicate or stale
  for (std::uint32_t i = snd_una_; i < ack_index; ++i) {
    if (cwnd_ < ssthresh_) {
      cwnd_ += 1.0;  // exponential increase phase
    } else {
      cwnd_ += 1.0 / cwnd_;  // linear increase phase
    }
  }
  snd_una_ = ack_index;
  return admit_window();
}

std::vector<std::uint32_t> TcpSender::on_timeout() {
  if (!has_outstanding()) return {};  // stale timer
  ++timeouts_;
  ssthresh_ = std::max(2.0, std::min(cwnd_ / 2.0, static_cast<double>(w_rcvr_)));
  cwnd_ = 1.0;
  snd_nxt_ = snd_una_;  // go-back-N: restart from the lost segment
  return admit_window();
}

TcpReceiver::RxResult TcpReceiver::on_data_segment(std::uint32_t seg_index,
                                                   std::uint32_t payload_len) {
  std::uint64_t delivered = 0;
  if (seg_index < next_expected_ || store_.contains(seg_index)) {
    ++duplicates_discarded_;
  } else if (seg_index == next_expected_) {
    ++next_expected_;
    delivered += payload_len;
    for (auto it = store_.begin();
         it != store_.end() && it->first == next_expected_;
         it = store_.erase(it)) {
      delivered += it->second;
      ++next_expected_;
    }
  } else {
    store_.emplace(seg_index, payload_len);
  }
  delivered_bytes_ += delivered;
  return RxResult{next_expected_, delivered};
}

}  // namespace atmsim
