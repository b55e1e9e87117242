#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hotspot {

/*
 * FIFO of (tag, value) items with amortized O(1) insert, remove-oldest and
 * exact min/max of the current contents. Two stacks; every stack entry
 * carries the running extrema of everything at or below it, so the queue
 * extrema are read off the two stack tops. Each item crosses from the
 * inbox to the outbox at most once.
 */
class SlidingExtremaQueue {
 public:
  struct Item {
    std::uint64_t tag = 0;
    double value = 0.0;
  };

  struct Counters {
    std::uint64_t pushes = 0;
    std::uint64_t pops = 0;
    std::uint64_t moves = 0;  // items transferred between the stacks
  };

  // Tags must be strictly increasing across pushes.
  void push(std::uint64_t tag, double value) {
    assert(empty() || tag > newest_tag());
    double mn = value, mx = value;
    if (!in_.empty()) {
      mn = std::min(mn, in_.back().run_min);
      mx = std::max(mx, in_.back().run_max);
    }
    in_.push_back(Entry{Item{tag, value}, mn, mx});
    ++counters_.pushes;
  }

  Item pop_oldest() {
    require_nonempty();
    if (out_.empty()) drain_inbox();
    Item oldest = out_.back().item;
    out_.pop_back();
    ++counters_.pops;
    return oldest;
  }

  Item oldest() const {
    require_nonempty();
    return out_.empty() ? in_.front().item : out_.back().item;
  }

  double min() const {
    require_nonempty();
    if (in_.empty()) return out_.back().run_min;
    if (out_.empty()) return in_.back().run_min;
    return std::min(in_.back().run_min, out_.back().run_min);
  }

  double max() const {
    require_nonempty();
    if (in_.empty()) return out_.back().run_max;
    if (out_.empty()) return in_.back().run_max;
    return std::max(in_.back().run_max, out_.back().run_max);
  }

  std::size_t size() const { return in_.size() + out_.size(); }
  bool empty() const { return in_.empty() && out_.empty(); }
  const Counters& counters() const { return counters_; }

 private:
  struct Entry {
    Item item;
    double run_min;
    double run_max;
  };

  std::uint64_t newest_tag() const {
    return in_.empty() ? out_.front().item.tag : in_.back().item.tag;
  }

  void require_nonempty() const {
    if (empty()) throw std::out_of_range("sliding extrema queue is empty");
  }

  void drain_inbox() {
    for (std::size_t i = in_.size(); i-- > 0;) {
      double mn = in_[i].item.value, mx = in_[i].item.value;
      if (!out_.empty()) {
        mn = std::min(mn, out_.back().run_min);
        mx = std::max(mx, out_.back().run_max);
      }
      out_.push_back(Entry{in_[i].item, mn, mx});
      ++counters_.moves;
    }
    in_.clear();
  }

  std::vector<Entry> in_;
  std::vector<Entry> out_;  // back() is the oldest queue item
  Counters counters_;
};

}  // namespace hotspot
