#pragma once

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "medfilt/core.hpp"

namespace medfilt {

/// Shared contract of the window-data-structure baselines: hold exactly k
/// values keyed by their circular-buffer slot, report the median, and swap
/// the oldest value for a new one in place.
template <typename W, typename T>
concept SlidingWindow = requires(W w, std::size_t slot, T v) {
  { w.median() } -> std::same_as<T>;
  w.replace(slot, v);
};

namespace detail {

/// Common shape of every filter entry point, used by the verify and bench
/// drivers to dispatch by name.
template <std::signed_integral T>
using FilterFn = std::vector<T> (*)(std::span<const T>, std::size_t);

template <std::signed_integral T, typename W>
  requires SlidingWindow<W, T>
std::vector<T> run_sliding_window(std::span<const T> x, std::size_t k) {
  const WindowSpec spec = make_window_spec(x.size(), k);
  std::vector<T> out;
  if (spec.empty_output()) return out;
  out.reserve(spec.output_size());
  W window(x.first(k));
  out.push_back(window.median());
  for (std::size_t t = k; t < x.size(); ++t) {
    window.replace((t - k) % k, x[t]);
    out.push_back(window.median());
  }
  return out;
}

}  // namespace detail

/// Window kept as one sorted array; each step binary-searches the remove and
/// insert positions and shifts the values in between with one block move.
template <std::signed_integral T>
class MoveWindow {
 public:
  explicit MoveWindow(std::span<const T> first)
      : by_slot_(first.begin(), first.end()),
        sorted_(first.begin(), first.end()),
        h_((first.size() - 1) / 2) {
    std::sort(sorted_.begin(), sorted_.end());
  }

  T median() const { return sorted_[h_]; }

  void replace(std::size_t slot, T value) {
    const T old = by_slot_[slot];
    by_slot_[slot] = value;
    auto del = std::lower_bound(sorted_.begin(), sorted_.end(), old);
    auto ins = std::lower_bound(sorted_.begin(), sorted_.end(), value);
    if (ins > del) {
      std::copy(del + 1, ins, del);
      *(ins - 1) = value;
    } else {
      std::copy_backward(ins, del, del + 1);
      *ins = value;
    }
  }

  void check_consistency() const {
    if (!std::is_sorted(sorted_.begin(), sorted_.end()))
      throw std::logic_error("window array not sorted");
    auto values = by_slot_;
    std::sort(values.begin(), values.end());
    if (values != sorted_) throw std::logic_error("window contents diverged");
  }

 private:
  std::vector<T> by_slot_;
  std::vector<T> sorted_;
  std::size_t h_;
};

/// Window kept as a pair of ordered multisets: the h+1 smallest values below,
/// the h largest above; the median is the maximum of the lower set.
template <std::signed_integral T>
class TreeWindow {
 public:
  explicit TreeWindow(std::span<const T> first)
      : by_slot_(first.begin(), first.end()), h_((first.size() - 1) / 2) {
    std::vector<T> values(first.begin(), first.end());
    std::sort(values.begin(), values.end());
    low_.insert(values.begin(), values.begin() + h_ + 1);
    high_.insert(values.begin() + h_ + 1, values.end());
  }

  T median() const { return *low_.rbegin(); }

  void replace(std::size_t slot, T value) {
    const T old = by_slot_[slot];
    by_slot_[slot] = value;
    if (old <= *low_.rbegin())
      low_.erase(low_.find(old));
    else
      high_.erase(high_.find(old));
    if (low_.empty() || value <= *low_.rbegin())
      low_.insert(value);
    else
      high_.insert(value);
    if (low_.size() > h_ + 1) {
      auto max_low = std::prev(low_.end());
      high_.insert(*max_low);
      low_.erase(max_low);
    } else if (low_.size() < h_ + 1) {
      auto min_high = high_.begin();
      low_.insert(*min_high);
      high_.erase(min_high);
    }
  }

  void check_consistency() const {
    if (low_.size() != h_ + 1 || high_.size() != h_)
      throw std::logic_error("tree window split out of balance");
    if (!high_.empty() && *low_.rbegin() > *high_.begin())
      throw std::logic_error("tree window sets overlap");
    std::multiset<T> all(by_slot_.begin(), by_slot_.end());
    std::multiset<T> split(low_.begin(), low_.end());
    split.insert(high_.begin(), high_.end());
    if (all != split) throw std::logic_error("tree window contents diverged");
  }

 private:
  std::vector<T> by_slot_;
  std::multiset<T> low_;
  std::multiset<T> high_;
  std::size_t h_;
};

/// Double-heap window: max-heap of the h smallest values, min-heap of the
/// h+1 largest. A slot-to-heap-position index lets the oldest element be
/// located by its circular slot, replaced in place, and sifted.
template <std::signed_integral T>
class HeapWindow {
 public:
  explicit HeapWindow(std::span<const T> first)
      : values_(first.begin(), first.end()),
        pos_(first.size()),
        h_((first.size() - 1) / 2) {
    std::vector<std::pair<T, index_t>> order(first.size());
    for (index_t slot = 0; slot < first.size(); ++slot)
      order[slot] = {first[slot], slot};
    std::sort(order.begin(), order.end());
    // A sorted run is already heap-ordered: descending for the max-heap,
    // ascending for the min-heap.
    lo_.resize(h_);
    hi_.resize(h_ + 1);
    for (std::size_t j = 0; j < h_; ++j) place_lo(j, order[h_ - 1 - j].second);
    for (std::size_t j = 0; j <= h_; ++j) place_hi(j, order[h_ + j].second);
  }

  T median() const { return values_[hi_[0]]; }

  void replace(std::size_t slot, T value) {
    values_[slot] = value;
    const std::int32_t p = pos_[slot];
    if (p >= 0) {
      sift_hi(static_cast<std::size_t>(p));
    } else {
      sift_lo(static_cast<std::size_t>(-p - 1));
    }
    if (!lo_.empty() && values_[lo_[0]] > values_[hi_[0]]) {
      std::swap(lo_[0], hi_[0]);
      pos_[lo_[0]] = -1;
      pos_[hi_[0]] = 0;
      sift_lo_down(0);
      sift_hi_down(0);
    }
  }

  void check_consistency() const {
    for (std::size_t j = 1; j < lo_.size(); ++j)
      if (values_[lo_[(j - 1) / 2]] < values_[lo_[j]])
        throw std::logic_error("max-heap order violated");
    for (std::size_t j = 1; j < hi_.size(); ++j)
      if (values_[hi_[(j - 1) / 2]] > values_[hi_[j]])
        throw std::logic_error("min-heap order violated");
    if (!lo_.empty() && values_[lo_[0]] > values_[hi_[0]])
      throw std::logic_error("heaps overlap");
    for (std::size_t j = 0; j < lo_.size(); ++j)
      if (pos_[lo_[j]] != -static_cast<std::int32_t>(j) - 1)
        throw std::logic_error("max-heap position index broken");
    for (std::size_t j = 0; j < hi_.size(); ++j)
      if (pos_[hi_[j]] != static_cast<std::int32_t>(j))
        throw std::logic_error("min-heap position index broken");
  }

 private:
  void place_lo(std::size_t j, index_t slot) {
    lo_[j] = slot;
    pos_[slot] = -static_cast<std::int32_t>(j) - 1;
  }
  void place_hi(std::size_t j, index_t slot) {
    hi_[j] = slot;
    pos_[slot] = static_cast<std::int32_t>(j);
  }

  void sift_hi(std::size_t j) {
    if (j > 0 && values_[hi_[j]] < values_[hi_[(j - 1) / 2]])
      sift_hi_up(j);
    else
      sift_hi_down(j);
  }
  void sift_lo(std::size_t j) {
    if (j > 0 && values_[lo_[j]] > values_[lo_[(j - 1) / 2]])
      sift_lo_up(j);
    else
      sift_lo_down(j);
  }

  void sift_hi_up(std::size_t j) {
    while (j > 0) {
      const std::size_t parent = (j - 1) / 2;
      if (values_[hi_[j]] >= values_[hi_[parent]]) break;
      std::swap(hi_[j], hi_[parent]);
      pos_[hi_[j]] = static_cast<std::int32_t>(j);
      pos_[hi_[parent]] = static_cast<std::int32_t>(parent);
      j = parent;
    }
  }
  void sift_hi_down(std::size_t j) {
    while (true) {
      std::size_t best = j;
      const std::size_t left = 2 * j + 1, right = 2 * j + 2;
      if (left < hi_.size() && values_[hi_[left]] < values_[hi_[best]])
        best = left;
      if (right < hi_.size() && values_[hi_[right]] < values_[hi_[best]])
        best = right;
      if (best == j) break;
      std::swap(hi_[j], hi_[best]);
      pos_[hi_[j]] = static_cast<std::int32_t>(j);
      pos_[hi_[best]] = static_cast<std::int32_t>(best);
      j = best;
    }
  }
  void sift_lo_up(std::size_t j) {
    while (j > 0) {
      const std::size_t parent = (j - 1) / 2;
      if (values_[lo_[j]] <= values_[lo_[parent]]) break;
      std::swap(lo_[j], lo_[parent]);
      pos_[lo_[j]] = -static_cast<std::int32_t>(j) - 1;
      pos_[lo_[parent]] = -static_cast<std::int32_t>(parent) - 1;
      j = parent;
    }
  }
  void sift_lo_down(std::size_t j) {
    while (true) {
      std::size_t best = j;
      const std::size_t left = 2 * j + 1, right = 2 * j + 2;
      if (left < lo_.size() && values_[lo_[left]] > values_[lo_[best]])
        best = left;
      if (right < lo_.size() && values_[lo_[right]] > values_[lo_[best]])
        best = right;
      if (best == j) break;
      std::swap(lo_[j], lo_[best]);
      pos_[lo_[j]] = -static_cast<std::int32_t>(j) - 1;
      pos_[lo_[best]] = -static_cast<std::int32_t>(best) - 1;
      j = best;
    }
  }

  std::vector<T> values_;          // by circular slot
  std::vector<index_t> lo_;        // max-heap of the h smallest (slots)
  std::vector<index_t> hi_;        // min-heap of the h+1 largest (slots)
  std::vector<std::int32_t> pos_;  // slot -> heap position, <0 means lo_
  std::size_t h_;
};

/// Ground-truth oracle: copy and sort every window.
template <std::signed_integral T>
std::vector<T> naive_median_filter(std::span<const T> x, std::size_t k) {
  const WindowSpec spec = make_window_spec(x.size(), k);
  std::vector<T> out;
  if (spec.empty_output()) return out;
  out.reserve(spec.output_size());
  std::vector<T> window(k);
  for (std::size_t i = 0; i + k <= x.size(); ++i) {
    std::copy(x.begin() + i, x.begin() + i + k, window.begin());
    std::sort(window.begin(), window.end());
    out.push_back(window[spec.h]);
  }
  return out;
}

template <std::signed_integral T>
std::vector<T> move_median_filter(std::span<const T> x, std::size_t k) {
  return detail::run_sliding_window<T, MoveWindow<T>>(x, k);
}

template <std::signed_integral T>
std::vector<T> tree_median_filter(std::span<const T> x, std::size_t k) {
  return detail::run_sliding_window<T, TreeWindow<T>>(x, k);
}

template <std::signed_integral T>
std::vector<T> heap_median_filter(std::span<const T> x, std::size_t k) {
  return detail::run_sliding_window<T, HeapWindow<T>>(x, k);
}

}  // namespace medfilt
