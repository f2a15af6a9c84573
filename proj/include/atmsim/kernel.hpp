#ifndef ATMSIM_KERNEL_HPP
#define ATMSIM_KERNEL_HPP

#include <cstdint>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "atmsim/cell.hpp"
#include "atmsim/time.hpp"

namespace atmsim {

class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

// Non-cell event bodies: service ticks, interval boundaries, timers.
struct TimerTag {
  int kind = 0;
  std::uint64_t arg = 0;
};

using EventPayload = std::variant<Cell, TimerTag>;

class EventQueue;

class EventTarget {
 public:
  virtual ~EventTarget() = default;
  virtual void on_event(const EventPayload& payload) = 0;
  virtual std::string_view target_name() const = 0;
};

// Handle for cancelling a pending event. 0 is never a valid handle.
using EventHandle = std::uint64_t;

struct RunOutcome {
  SimTime clock = 0;
  std::uint64_t events_processed = 0;
};

// Deterministic single-threaded event queue. Events fire in strict
// (fire_at, insertion seq) order; ties break FIFO.
class EventQueue {
 public:
  explicit EventQueue(std::uint64_t seed = 0) : rng_(seed) {}

  SimTime now() const { return now_; }

  // Pre: at >= now(). Scheduling in the past is a programming error and
  // aborts the run.
  EventHandle schedule(SimTime at, EventTarget* target, EventPayload payload);

  // Pre: the event is still pending. Cancelled events never fire.
  void cancel(EventHandle handle);

  // Processes every event with fire_at <= horizon (inclusive), then advances
  // the clock to the horizon. A fault inside a handler aborts the run with
  // the target name and time attached.
  RunOutcome run_until(SimTime horizon);

  bool empty() const { return heap_.size() == cancelled_.size(); }

  std::uint64_t events_scheduled() const { return scheduled_; }
  std::uint64_t events_fired() const { return fired_; }
  std::uint64_t events_cancelled() const { return cancelled_count_; }
  std::uint64_t events_pending() const {
    return scheduled_ - fired_ - cancelled_count_;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  struct Entry {
    SimTime at;
    std::uint64_t seq;
    EventTarget* target;
    EventPayload payload;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  SimTime now_ = 0;
  std::uint64_t next_seq_ = 1;
  std::uint64_t scheduled_ = 0;
  std::uint64_t fired_ = 0;
  std::uint64_t cancelled_count_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  std::unordered_set<std::uint64_t> cancelled_;
  std::mt19937_64 rng_;
};

}  // namespace atmsim

#endif
