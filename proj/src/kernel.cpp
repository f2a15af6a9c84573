#include "atmsim/kernel.hpp"

namespace atmsim {

EventHandle EventQueue::schedule(SimTime at, EventTarget* target,
                                 EventPayload payload) {
  if (at < now_) {
    throw SimError("schedule in the past: t=" + std::to_string(at) +
                   " < clock=" + std::to_string(now_) + " (target " +
                   std::string(target->target_name()) + ")");
  }
  const std::uint64_t seq = next_seq_++;
  heap_.push(Entry{at, seq, target, std::move(payload)});
  ++scheduled_;
  return seq;
}

void EventQueue::cancel(EventHandle handle) {
  cancelled_.insert(handle);
  ++cancelled_count_;
}

RunOutcome EventQueue::run_until(SimTime horizon) {
  std::uint64_t processed = 0;
  while (!heap_.empty() && heap_.top().at <= horizon) {
    Entry ev = heap_.top();
    heap_.pop();
    if (auto it = cancelled_.find(ev.seq); it != cancelled_.end()) {
      cancelled_.erase(it);
      continue;
    }
    now_ = ev.at;
    ++fired_;
    ++processed;
    try {
      ev.target->on_event(ev.payload);
    } catch (const SimError&) {
      throw;
    } catch (const std::exception& e) {
      throw SimError("fault in " + std::string(ev.target->target_name()) +
                     " at t=" + std::to_string(ev.at) + "ns: " + e.what());
    }
  }
  now_ = horizon;
  return RunOutcome{now_, processed};
}

}  // namespace atmsim
