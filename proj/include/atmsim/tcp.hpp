#ifndef ATMSIM_TCP_HPP
#define ATMSIM_TCP_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "atmsim/time.hpp"

namespace atmsim {

struct TcpConfig {
  std::uint32_t mss = 512;               // bytes per segment
  std::uint64_t maxwin_bytes = 65536;    // caps W_rcvr * mss
  SimTime rto_base = time_from_ms(500);  // fixed per run; no RTT estimator
  SimTime timer_granularity = time_from_ms(100);

  std::uint32_t rcvr_window_segments() const {
    return static_cast<std::uint32_t>(maxwin_bytes / mss);
  }
};

// Retransmission timeout rounded up to a whole number of granularity ticks.
SimTime retransmit_timer_value(const TcpConfig& cfg);

// Sender-side congestion state: slow start, congestion avoidance and
// timeout-driven go-back-N. The application is an infinite file transfer,
// so every admitted index is immediately transmittable.
class TcpSender {
 public:
  explicit TcpSender(const TcpConfig& cfg);

  // New cumulative ack. Returns the segment indices newly admitted by
  // min(cwnd, W_rcvr). Acks at or below snd_una are duplicates and change
  // nothing; an ack beyond snd_nxt is a protocol fault.
  std::vector<std::uint32_t> on_ack(std::uint32_t ack_index);

  // Retransmit timer fired. Halves ssthresh, resets cwnd to one segment and
  // rewinds transmission to the first unacked segment (go-back-N). Returns
  // the indices to (re)send; empty if no data was outstanding (stale timer).
  std::vector<std::uint32_t> on_timeout();

  // Admit whatever the current window allows (used at connection start).
  std::vector<std::uint32_t> admit_window();

  double cwnd() const { return cwnd_; }
  double ssthresh() const { return ssthresh_; }
  std::uint32_t rcvr_window() const { return w_rcvr_; }
  std::uint32_t snd_una() const { return snd_una_; }
  std::uint32_t snd_nxt() const { return snd_nxt_; }
  bool has_outstanding() const { return snd_una_ < snd_nxt_; }
  std::uint64_t timeouts() const { return timeouts_; }

 private:
  std::uint32_t effective_window() const;

  double cwnd_ = 1.0;
  double ssthresh_;
  std::uint32_t w_rcvr_;
  std::uint32_t snd_una_ = 0;
  std::uint32_t snd_nxt_ = 0;
  std::uint64_t timeouts_ = 0;
};

// Receiver side: strictly in-order delivery, out-of-order buffering and
// duplicate discard. Emits one cumulative ack per data segment.
class TcpReceiver {
 public:
  struct RxResult {
    std::uint32_t ack_index;        // next expected segment
    std::uint64_t delivered_bytes;  // newly delivered, in order
  };

  RxResult on_data_segment(std::uint32_t seg_index, std::uint32_t payload_len);

  std::uint32_t next_expected() const { return next_expected_; }
  std::uint64_t delivered_bytes() const { return delivered_bytes_; }
  std::uint64_t duplicates_discarded() const { return duplicates_discarded_; }
  std::size_t stored_segments() const { return store_.size(); }

 private:
  std::uint32_t next_expected_ = 0;
  std::map<std::uint32_t, std::uint32_t> store_;  // index -> payload bytes
  std::uint64_t delivered_bytes_ = 0;
  std::uint64_t duplicates_discarded_ = 0;
};

}  // namespace atmsim

#endif
