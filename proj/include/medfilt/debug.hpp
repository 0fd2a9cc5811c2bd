#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "medfilt/block.hpp"
#include "medfilt/core.hpp"

namespace medfilt::debug {

/// Thrown by the instrumented validators when a structural invariant or the
/// balance invariant (s_A + s_B = h, smalls = h smallest of the window) fails.
class BlockCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Walk a block's list and verify the full structural invariant set:
/// mutually consistent prev/next chains through node k, strictly increasing
/// (value, index) order, s <= list length, and cursor m = p_s (node k when
/// the list has exactly s elements).
template <std::signed_integral T, bool C>
void validate_block(const Block<T, C>& block) {
  const auto alpha = block.samples();
  const auto prev = block.prev_links();
  const auto next = block.next_links();
  const auto k = static_cast<index_t>(block.window_size());

  std::size_t count = 0;
  index_t at_s = k;
  index_t node = next[k];
  index_t last = k;
  while (node != k) {
    if (node > k) throw BlockCheckError("link out of range");
    if (prev[node] != last) throw BlockCheckError("prev/next mismatch");
    if (last != k &&
        !indexed_less(alpha[last], last, alpha[node], node))
      throw BlockCheckError("list not sorted");
    if (count == block.small()) at_s = node;
    ++count;
    if (count > block.window_size()) throw BlockCheckError("list cycle");
    last = node;
    node = next[node];
  }
  if (prev[k] != last) throw BlockCheckError("tail link mismatch");
  if (block.small() > count) throw BlockCheckError("s exceeds list length");
  if (block.cursor() != at_s)
    throw BlockCheckError("cursor does not point at p_s");
}

/// Snapshot of a block's live list for instrumented checks: the listed
/// (sample, global index) pairs in sorted order, of which the first
/// `small_count` form the small set.
template <std::signed_integral T>
struct DebugWindowView {
  std::vector<std::pair<Sample<T>, std::size_t>> listed;
  std::size_t small_count{0};

  std::span<const std::pair<Sample<T>, std::size_t>> small_set() const {
    return {listed.data(), small_count};
  }
};

template <std::signed_integral T, bool C>
DebugWindowView<T> snapshot(const Block<T, C>& block,
                            std::size_t global_offset) {
  DebugWindowView<T> view;
  const auto alpha = block.samples();
  const auto next = block.next_links();
  const auto k = static_cast<index_t>(block.window_size());
  for (index_t node = next[k]; node != k; node = next[node])
    view.listed.emplace_back(alpha[node], global_offset + node);
  view.small_count = block.small();
  return view;
}

/// Balance check run before each emitted median: the two small counts sum to
/// h, and the two small sets jointly hold the h smallest (value, global
/// index) pairs of the live window. The reference h-smallest set is computed
/// independently from the padded input.
template <std::signed_integral T>
class WindowInvariantChecker {
 public:
  WindowInvariantChecker(std::span<const Sample<T>> padded, std::size_t k,
                         std::size_t h)
      : padded_(padded), k_(k), h_(h) {}

  template <bool C>
  void operator()(const Block<T, C>& a, const Block<T, C>& b,
                  std::size_t pair_index, index_t step) {
    if (a.small() + b.small() != h_)
      throw BlockCheckError("small counts do not sum to h at step " +
                            std::to_string(step));

    const std::size_t start = (pair_index - 1) * k_ + step + 1;
    scratch_.clear();
    for (std::size_t g = start; g < start + k_; ++g)
      scratch_.emplace_back(padded_[g], g);
    std::nth_element(scratch_.begin(), scratch_.begin() + h_, scratch_.end(),
                     [](const auto& x, const auto& y) {
                       return indexed_global_less(x, y);
                     });
    expected_.clear();
    for (std::size_t t = 0; t < h_; ++t)
      expected_.push_back(scratch_[t].second);
    std::sort(expected_.begin(), expected_.end());

    actual_.clear();
    collect_small(a, (pair_index - 1) * k_);
    collect_small(b, pair_index * k_);
    std::sort(actual_.begin(), actual_.end());

    if (actual_ != expected_)
      throw BlockCheckError("small sets are not the h smallest at step " +
                            std::to_string(step));
  }

 private:
  static bool indexed_global_less(const std::pair<Sample<T>, std::size_t>& x,
                                  const std::pair<Sample<T>, std::size_t>& y) {
    if (x.first.sentinel != y.first.sentinel) return y.first.sentinel;
    if (x.first.value != y.first.value) return x.first.value < y.first.value;
    return x.second < y.second;
  }

  template <bool C>
  void collect_small(const Block<T, C>& block, std::size_t offset) {
    const auto next = block.next_links();
    const auto k = static_cast<index_t>(block.window_size());
    index_t node = next[k];
    for (std::size_t t = 0; t < block.small(); ++t) {
      if (node == k) throw BlockCheckError("s exceeds list length");
      actual_.push_back(offset + node);
      node = next[node];
    }
  }

  std::span<const Sample<T>> padded_;
  std::size_t k_;
  std::size_t h_;
  std::vector<std::pair<Sample<T>, std::size_t>> scratch_;
  std::vector<std::size_t> expected_;
  std::vector<std::size_t> actual_;
};

}  // namespace medfilt::debug
