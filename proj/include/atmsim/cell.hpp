#ifndef ATMSIM_CELL_HPP
#define ATMSIM_CELL_HPP

#include <cstdint>

namespace atmsim {

enum class CellKind : std::uint8_t { data, rm };
enum class RmDirection : std::uint8_t { forward, backward };

// TCP segment descriptor. Payloads are not byte-accurate; only lengths and
// identities travel with the cells.
struct TcpSegment {
  std::uint32_t conn_id = 0;
  std::uint32_t seg_index = 0;   // sequence number in MSS units
  std::uint16_t payload_len = 0; // bytes; 0 for a pure ack
  bool is_ack = false;
  std::uint32_t ack_index = 0;   // next expected segment (cumulative)

  static constexpr unsigned kHeaderBytes = 40;  // TCP/IP header
};

// Resource management cell body. Rates are in cells/s.
struct RmPayload {
  double er = 0.0;   // explicit rate; switches may only lower it
  double ccr = 0.0;  // source ACR stamped at emission
  RmDirection direction = RmDirection::forward;
};

struct Cell {
  std::uint32_t vc_id = 0;
  CellKind kind = CellKind::data;
  std::uint32_t packet_id = 0;
  std::uint16_t cell_index = 0;  // position within the packet
  bool last_cell = false;
  TcpSegment seg;  // valid when kind == data
  RmPayload rm;    // valid when kind == rm

  bool is_backward_rm() const {
    return kind == CellKind::rm && rm.direction == RmDirection::backward;
  }
  bool is_forward_rm() const {
    return kind == CellKind::rm && rm.direction == RmDirection::forward;
  }
};

}  // namespace atmsim

#endif
