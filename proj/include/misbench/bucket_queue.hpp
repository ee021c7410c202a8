#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "misbench/errors.hpp"
#include "misbench/memory.hpp"
#include "misbench/rng.hpp"

namespace misbench {

// Degree-indexed priority structure behind the near-linear min-degree greedy.
//
// All vertices enter at construction, counting-sorted by key into one flat
// array: bucket k owns the segment [start
// _[k], start_[k+1]) of vert_, and a
// vertex's key is implied by the segment its position falls in. Removed
// vertices accumulate in a graveyard prefix [0, start_[0]). Keys only ever
// decrease: moving a vertex one bucket down is a single swap with its bucket
// front, and erasing cascades that swap through every lower bucket, so total
// bucket traffic is bounded by the sum of keys plus one per vertex.
// min_pointer only moves down on relocation and scans up on pop.
class BucketQueue {
 public:
  // keys[v] is vertex v's initial key; keys[v] <= max_key for all v.
  BucketQueue(std::uint32_t max_key, std::span<const std::uint32_t> keys)
      : vert_(keys.size()), pos_(keys.size()), start_(static_cast<std::size_t>(max_key) + 2, 0), size_(keys.size()) {
    advise_huge_pages(vert_.data(), vert_.size() * sizeof(std::uint32_t));
    advise_huge_pages(pos_.data(), pos_.size() * sizeof(std::uint32_t));
    for (const std::uint32_t k : keys) ++start_[k + 1];
    for (std::size_t k = 1; k < start_.size(); ++k) start_[k] += start_[k - 1];
    std::vector<std::uint32_t> cursor(start_.begin(), start_.end() - 1);
    for (std::uint32_t v = 0; v < keys.size(); ++v) {
      const std::uint32_t p = cursor[keys[v]]++;
      vert_[p] = v;
      pos_[v] = p;
    }
  }

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }
  bool contains(std::uint32_t v) const { return pos_[v] != kDead; }

  void prefetch(std::uint32_t v) const { __builtin_prefetch(&pos_[v]); }

  // Key of a live vertex: the bucket whose segment holds its position.
  std::uint32_t key_of(std::uint32_t v) const {
    const std::uint32_t p = pos_[v];
    std::uint32_t lo = 0, hi = static_cast<std::uint32_t>(start_.size()) - 2;
    while (lo < hi) {
      const std::uint32_t mid = (lo + hi + 1) / 2;
      if (start_[mid] <= p) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  }

  void erase(std::uint32_t v) { cascade(v, key_of(v), 0, true); }

  void decrease_key(std::uint32_t v, std::uint32_t new_key) {
    const std::uint32_t key = key_of(v);
    if (new_key < key) cascade(v, key, new_key + 1, false);
  }

  // One-bucket relocation, the hot path of the min-degree greedy.
  void decrease_by_one(std::uint32_t v) {
    const std::uint32_t key = key_of(v);
    cascade(v, key, key, false);
  }

  // Removes and returns a uniformly random vertex from the lowest non-empty
  // bucket; the random slot pick is the tie-break among minimum-key vertices.
  std::uint32_t pop_random_min(Rng& rng) {
    while (start_[min_pointer_] == start_[min_pointer_ + 1]) ++min_pointer_;
    const std::uint32_t k = static_cast<std::uint32_t>(min_pointer_);
    const std::uint32_t count = start_[k + 1] - start_[k];
    const std::uint32_t v = vert_[start_[k] + static_cast<std::uint32_t>(rng.below(count))];
    cascade(v, k, 0, true);
    return v;
  }

  // Current minimum key; only meaningful when non-empty.
  std::uint32_t min_key() const {
    std::size_t k = min_pointer_;
    while (start_[k] == start_[k + 1]) ++k;
    return static_cast<std::uint32_t>(k);
  }

  // Instrumented audit: checks the partition layout, the position index and
  // the min_pointer lower bound.
  void audit() const {
    if (start_[0] + size_ != vert_.size() || start_.back() != vert_.size()) {
      throw Error(errc::invalid_parameter, "bucket queue audit: segment accounting broken");
    }
    for (std::size_t k = 0; k + 1 < start_.size(); ++k) {
      if (start_[k] > start_[k + 1]) {
        throw Error(errc::invalid_parameter, "bucket queue audit: segment boundaries not monotone");
      }
      if (k < min_pointer_ && start_[k] != start_[k + 1]) {
        throw Error(errc::invalid_parameter, "bucket queue audit: min_pointer above non-empty bucket " + std::to_string(k));
      }
      for (std::uint32_t p = start_[k]; p < start_[k + 1]; ++p) {
        const std::uint32_t v = vert_[p];
        if (pos_[v] != p) {
          throw Error(errc::invalid_parameter, "bucket queue audit: vertex " + std::to_string(v) + " misfiled");
        }
      }
    }
  }

 private:
  static constexpr std::uint32_t kDead = 0xffffffffu;

  // Swap v with the front of each bucket from `key` down to `stop`; with
  // remove=true the vertex falls through bucket 0 into the graveyard.
  void cascade(std::uint32_t v, std::uint32_t key, std::uint32_t stop, bool remove) {
    std::uint32_t p = pos_[v];
    for (std::uint32_t k = key;; --k) {
      const std::uint32_t front = start_[k];
      const std::uint32_t displaced = vert_[front];
      vert_[p] = displaced;
      pos_[displaced] = p;
      vert_[front] = v;
      p = front;
      ++start_[k];
      if (k == stop) break;
    }
    if (remove) {
      pos_[v] = kDead;
      --size_;
    } else {
      pos_[v] = p;
      if (stop > 0 && stop - 1 < min_pointer_) min_pointer_ = stop - 1;
    }
  }

  std::vector<std::uint32_t> vert_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> start_;
  std::size_t size_ = 0;
  std::size_t min_pointer_ = 0;
};

}  // namespace misbench
