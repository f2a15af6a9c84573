#include "atmsim/aal.hpp"

namespace atmsim {

Cell make_data_cell(std::uint32_t vc_id, std::uint32_t packet_id,
                    const TcpSegment& seg, std::uint32_t index) {
  const std::uint32_t count = cells_for_payload(seg.payload_len);
  Cell c;
  c.vc_id = vc_id;
  c.kind = CellKind::data;
  c.packet_id = packet_id;
  c.cell_index = static_cast<std::uint16_t>(index);
  c.last_cell = (index + 1 == count);
  c.seg = seg;
  return c;
}

std::vector<Cell> segment_packet(std::uint32_t vc_id, std::uint32_t packet_id,
                                 const TcpSegment& seg) {
  const std::uint32_t count = cells_for_payload(seg.payload_len);
  std::vector<Cell> cells;
  cells.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    cells.push_back(make_data_cell(vc_id, packet_id, seg, i));
  }
  return cells;
}

void Reassembler::finish_current(bool delivered) {
  if (!in_progress_) return;
  in_progress_ = false;
  if (delivered) {
    ++packets_delivered_;
  } else {
    ++packets_dropped_;
  }
}

std::optional<TcpSegment> Reassembler::on_cell(const Cell& cell) {
  ++cells_consumed_;
  if (in_progress_ && cell.packet_id != packet_id_) {
    // A new packet started before the previous one completed: the tail of
    // the old packet was lost somewhere.
    finish_current(false);
  }
  if (!in_progress_) {
    in_progress_ = true;
    packet_id_ = cell.packet_id;
    expected_index_ = 0;
    corrupted_ = false;
    seg_ = cell.seg;
  }
  if (corrupted_) {
    if (cell.last_cell) finish_current(false);
    return std::nullopt;
  }
  if (cell.cell_index != expected_index_) {
    corrupted_ = true;
    if (cell.last_cell) finish_current(false);
    return std::nullopt;
  }
  ++expected_index_;
  if (!cell.last_cell) return std::nullopt;

  TcpSegment seg = seg_;
  finish_current(true);
  return seg;
}

}  // namespace atmsim
