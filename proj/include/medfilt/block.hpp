#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "medfilt/core.hpp"

namespace medfilt {

/// Sorted doubly-linked list over one block of k samples, stored as prev/next
/// index arrays of length k+1. Node k is the shared head/tail sentinel and
/// alpha[k] = +INF. The first `small()` listed elements are "small"; the
/// cursor m points at the first large element (or at node k when none).
///
/// Deleting a node leaves its own prev/next entries intact, so the deletion
/// can be undone in O(1) by re-linking through them. Delete/undelete calls
/// must be properly nested (LIFO); release builds do not check this.
///
/// With CountAccesses=true every read or write of an alpha/pi/prev/next cell
/// bumps a counter, which the tests use to pin the per-operation and
/// whole-postprocess work bounds.
template <std::signed_integral T, bool CountAccesses = false>
class Block {
 public:
  Block(std::size_t k, std::size_t h)
      : k_(static_cast<index_t>(k)),
        h_(static_cast<index_t>(h)),
        m_(static_cast<index_t>(k)),
        alpha_(k + 1, Sample<T>::infinity()),
        prev_(k + 1),
        next_(k + 1) {}

  /// Load a block and link the full sorted list; pi must stably sort alpha.
  void construct(std::span<const Sample<T>> alpha,
                 std::span<const index_t> pi) {
    assert(alpha.size() == k_ && pi.size() == k_);
    std::copy(alpha.begin(), alpha.end(), alpha_.begin());
    touch(k_);
    index_t p = k_;
    for (index_t t = 0; t < k_; ++t) {
      const index_t q = pi[t];
      next_[p] = q;
      prev_[q] = p;
      touch(3);
      p = q;
    }
    next_[p] = k_;
    prev_[k_] = p;
    touch(2);
    s_ = h_;
    m_ = pi[h_];
    touch(1);
  }

  /// Delete every element, highest sorted position first. Afterwards the
  /// stale prev/next entries are exactly what undelete(0), undelete(1), ...
  /// needs to rebuild the sorted list one element at a time.
  void unwind() {
    for (index_t i = k_; i-- > 0;) {
      const index_t p = prev_[i], q = next_[i];
      next_[p] = q;
      prev_[q] = p;
      touch(4);
    }
    m_ = k_;
    s_ = 0;
  }

  void del(index_t i) {
    assert(next_[prev_[i]] == i && prev_[next_[i]] == i);
    const index_t p = prev_[i], q = next_[i];
    next_[p] = q;
    prev_[q] = p;
    touch(4);
    if (below_cursor(i)) {
      --s_;
      return;
    }
    if (m_ == i) m_ = q;
    if (s_ > 0) {
      m_ = prev_[m_];
      touch(1);
      --s_;
    }
  }

  void undelete(index_t i) {
    const index_t p = prev_[i], q = next_[i];
    next_[p] = i;
    prev_[q] = i;
    touch(4);
    if (below_cursor(i)) {
      m_ = prev_[m_];
      touch(1);
    }
  }

  void advance() {
    m_ = next_[m_];
    touch(1);
    ++s_;
  }

  std::size_t small() const { return s_; }

  Sample<T> peek() const {
    touch(1);
    return alpha_[m_];
  }

  index_t cursor() const { return m_; }
  std::size_t window_size() const { return k_; }
  std::size_t half() const { return h_; }

  std::uint64_t cell_accesses() const
    requires CountAccesses
  {
    return accesses_;
  }

  // Read-only views for validators and instrumented checks.
  std::span<const Sample<T>> samples() const { return alpha_; }
  std::span<const index_t> prev_links() const { return prev_; }
  std::span<const index_t> next_links() const { return next_; }

 private:
  bool below_cursor(index_t i) const {
    touch(2);
    return indexed_less(alpha_[i], i, alpha_[m_], m_);
  }

  void touch(std::uint64_t cells) const {
    if constexpr (CountAccesses) accesses_ += cells;
  }

  index_t k_;
  index_t h_;
  index_t m_;
  std::size_t s_{0};
  std::vector<Sample<T>> alpha_;
  std::vector<index_t> prev_;
  std::vector<index_t> next_;
  mutable std::uint64_t accesses_{0};
};

}  // namespace medfilt
