#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace medfilt {

/// Index of an element inside one block; value k doubles as the list
/// head/tail sentinel node.
using index_t = std::uint32_t;

/// A signal element: a signed integer value, or the +INF padding sentinel.
/// Sentinels compare above every finite sample; two sentinels compare equal.
template <std::signed_integral T>
struct Sample {
  T value{};
  bool sentinel{false};

  static constexpr Sample infinity() {
    return {std::numeric_limits<T>::max(), true};
  }
  static constexpr Sample finite(T v) { return {v, false}; }

  friend constexpr bool operator==(Sample, Sample) = default;
};

template <std::signed_integral T>
constexpr bool sample_less(Sample<T> a, Sample<T> b) {
  if (a.sentinel != b.sentinel) return b.sentinel;
  return a.value < b.value;
}

/// Total order used inside a block: sample order with ties broken by
/// element index. This is the order the sorting permutation realizes.
template <std::signed_integral T>
constexpr bool indexed_less(Sample<T> a, index_t ia, Sample<T> b, index_t ib) {
  if (a.sentinel != b.sentinel) return b.sentinel;
  if (a.value != b.value) return a.value < b.value;
  return ia < ib;
}

/// Shape parameters of one filtering problem: window size k = 2h+1,
/// half-window h, block count b = ceil(n/k), input length n.
struct WindowSpec {
  std::size_t n{};
  std::size_t k{};
  std::size_t h{};
  std::size_t b{};

  std::size_t padded_size() const { return b * k; }
  std::size_t output_size() const { return n < k ? 0 : n - k + 1; }
  bool empty_output() const { return n < k; }
};

inline WindowSpec make_window_spec(std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("input must not be empty");
  if (k == 0) throw std::invalid_argument("window size must be positive");
  if (k % 2 == 0)
    throw std::invalid_argument(
        "even window size unsupported (window must be k = 2h+1)");
  if (k >= std::numeric_limits<index_t>::max())
    throw std::invalid_argument("window size too large");
  WindowSpec spec;
  spec.n = n;
  spec.k = k;
  spec.h = (k - 1) / 2;
  spec.b = (n + k - 1) / k;
  return spec;
}

/// Sorting permutation of one block: order[t] is the index of the t-th
/// smallest element under the (value, index) order, so equal values keep
/// their original relative order.
using Permutation = std::vector<index_t>;

template <std::signed_integral T>
Permutation stable_sort_permutation(std::span<const Sample<T>> alpha) {
  std::vector<std::pair<Sample<T>, index_t>> pairs(alpha.size());
  for (index_t i = 0; i < alpha.size(); ++i) pairs[i] = {alpha[i], i};
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return indexed_less(a.first, a.second, b.first, b.second);
  });
  Permutation order(alpha.size());
  for (index_t t = 0; t < order.size(); ++t) order[t] = pairs[t].second;
  return order;
}

}  // namespace medfilt
