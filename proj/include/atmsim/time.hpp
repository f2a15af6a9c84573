#ifndef ATMSIM_TIME_HPP
#define ATMSIM_TIME_HPP

#include <cmath>
#include <cstdint>

namespace atmsim {

// Simulation time in integer nanoseconds.
using SimTime = std::uint64_t;

constexpr SimTime kTicksPerSec = 1'000'000'000ull;

constexpr SimTime time_from_ns(std::uint64_t ns) { return ns; }
constexpr SimTime time_from_us(std::uint64_t us) { return us * 1'000ull; }
constexpr SimTime time_from_ms(std::uint64_t ms) { return ms * 1'000'000ull; }

inline SimTime time_from_s(double s) {
  return static_cast<SimTime>(std::llround(s * 1e9));
}

constexpr double time_to_s(SimTime t) { return static_cast<double>(t) * 1e-9; }

// ATM constants: every cell is 53 bytes on the wire, 48 of them payload.
constexpr unsigned kCellBytes = 53;
constexpr unsigned kCellPayloadBytes = 48;
constexpr unsigned kCellBits = kCellBytes * 8;  // 424

// Cells per second carried by a link of the given bit rate.
constexpr double link_cell_rate(double rate_bps) { return rate_bps / kCellBits; }

// Serialization time of one cell, rounded to whole ticks. At 155.52 Mbps
// this is 2726 ns (exact value 2726.337 ns).
inline SimTime cell_time(double rate_bps) {
  return static_cast<SimTime>(std::llround(kCellBits * 1e9 / rate_bps));
}

// Pacing gap between consecutive cells at `rate` cells/s, in whole ticks.
inline SimTime pacing_gap(double rate_cps) {
  return static_cast<SimTime>(std::llround(1e9 / rate_cps));
}

}  // namespace atmsim

#endif
