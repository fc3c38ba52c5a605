#pragma once

#include <cassert>
#include <vector>

#include "mincut/types.hpp"

namespace mincut {

/// Addressable binary max-heap over node ids with increase-key. Ties in the
/// key break toward the lower id so traversals stay deterministic.
class MaxNodeHeap {
 public:
  explicit MaxNodeHeap(NodeID capacity) : position_(capacity, kNotInHeap) {}

  bool empty() const { return heap_.empty(); }
  NodeID size() const { return static_cast<NodeID>(heap_.size()); }
  bool contains(NodeID id) const { return position_[id] != kNotInHeap; }
  EdgeWeight key(NodeID id) const { return heap_[position_[id]].key; }

  void push(NodeID id, EdgeWeight key) {
    assert(!contains(id));
    position_[id] = heap_.size();
    heap_.push_back({key, id});
    sift_up(heap_.size() - 1);
  }

  void increase_key(NodeID id, EdgeWeight key) {
    const std::size_t pos = position_[id];
    assert(key >= heap_[pos].key);
    heap_[pos].key = key;
    sift_up(pos);
  }

  std::pair<NodeID, EdgeWeight> pop_max() {
    assert(!heap_.empty());
    const Entry top = heap_.front();
    swap_entries(0, heap_.size() - 1);
    heap_.pop_back();
    position_[top.id] = kNotInHeap;
    if (!heap_.empty()) sift_down(0);
    return {top.id, top.key};
  }

 private:
  struct Entry {
    EdgeWeight key;
    NodeID id;
  };

  static constexpr std::size_t kNotInHeap = static_cast<std::size_t>(-1);

  static bool before(const Entry& a, const Entry& b) {
    return a.key > b.key || (a.key == b.key && a.id < b.id);
  }

  void swap_entries(std::size_t a, std::size_t b) {
    std::swap(heap_[a], heap_[b]);
    position_[heap_[a].id] = a;
    position_[heap_[b].id] = b;
  }

  void sift_up(std::size_t pos) {
    while (pos > 0) {
      const std::size_t parent = (pos - 1) / 2;
      if (!before(heap_[pos], heap_[parent])) break;
      swap_entries(pos, parent);
      pos = parent;
    }
  }

  void sift_down(std::size_t pos) {
    while (true) {
      std::size_t best = pos;
      for (std::size_t child = 2 * pos + 1; child <= 2 * pos + 2 && child < heap_.size(); ++child) {
        if (before(heap_[child], heap_[best])) best = child;
      }
      if (best == pos) break;
      swap_entries(pos, best);
      pos = best;
    }
  }

  std::vector<Entry> heap_;
  std::vector<std::size_t> position_;
};

}  // namespace mincut
