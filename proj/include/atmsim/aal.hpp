#ifndef ATMSIM_AAL_HPP
#define ATMSIM_AAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "atmsim/cell.hpp"

namespace atmsim {

// AAL5-style framing: packet = payload + 40-byte TCP/IP header + 8-byte
// trailer, padded to a whole number of 48-byte cell payloads.
constexpr unsigned kAalTrailerBytes = 8;

constexpr std::uint32_t cells_for_payload(std::uint32_t payload_bytes) {
  const std::uint32_t total =
      payload_bytes + TcpSegment::kHeaderBytes + kAalTrailerBytes;
  return (total + kCellPayloadBytes - 1) / kCellPayloadBytes;
}

constexpr std::uint32_t wire_bytes_for_payload(std::uint32_t payload_bytes) {
  return cells_for_payload(payload_bytes) * kCellBytes;
}

// One cell of the given packet. `index` must be < cells_for_payload(...).
Cell make_data_cell(std::uint32_t vc_id, std::uint32_t packet_id,
                    const TcpSegment& seg, std::uint32_t index);

std::vector<Cell> segment_packet(std::uint32_t vc_id, std::uint32_t packet_id,
                                 const TcpSegment& seg);

// Per-VC reassembly. Cells of one VC arrive in emission order (FIFO paths),
// so a single in-progress packet suffices. A gap marks the packet corrupted;
// it is never delivered and the TCP timeout path recovers.
class Reassembler {
 public:
  std::optional<TcpSegment> on_cell(const Cell& cell);

  std::uint64_t packets_delivered() const { return packets_delivered_; }
  std::uint64_t packets_dropped() const { return packets_dropped_; }
  std::uint64_t cells_consumed() const { return cells_consumed_; }

 private:
  void finish_current(bool delivered);

  bool in_progress_ = false;
  std::uint32_t packet_id_ = 0;
  std::uint32_t expected_index_ = 0;
  bool corrupted_ = false;
  TcpSegment seg_{};

  std::uint64_t packets_delivered_ = 0;
  std::uint64_t packets_dropped_ = 0;
  std::uint64_t cells_consumed_ = 0;
};

}  // namespace atmsim

#endif
