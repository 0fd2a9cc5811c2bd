#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "medfilt/block.hpp"
#include "medfilt/core.hpp"
#include "medfilt/debug.hpp"

namespace medfilt {

/// Input vector padded with +INF sentinels up to a whole number of blocks.
template <std::signed_integral T>
struct FilterInput {
  WindowSpec spec;
  std::vector<Sample<T>> padded;  // b*k samples, sentinel tail

  std::span<const Sample<T>> original() const {
    return {padded.data(), spec.n};
  }
  std::span<const Sample<T>> block(std::size_t j) const {
    return {padded.data() + j * spec.k, spec.k};
  }
};

template <std::signed_integral T>
FilterInput<T> pad_to_blocks(std::span<const T> x, const WindowSpec& spec) {
  FilterInput<T> input;
  input.spec = spec;
  input.padded.reserve(spec.padded_size());
  for (T v : x) input.padded.push_back(Sample<T>::finite(v));
  input.padded.resize(spec.padded_size(), Sample<T>::infinity());
  return input;
}

/// Sort each block independently, recording the stable sorting permutation.
/// Sentinels only ever pad the tail of the final block, so sorting plain
/// (value, index) pairs realizes the full sample order.
template <std::signed_integral T>
std::vector<Permutation> piecewise_sort(const FilterInput<T>& input) {
  const std::size_t k = input.spec.k;
  std::vector<Permutation> perms(input.spec.b);
  std::vector<std::pair<T, index_t>> pairs(k);
  for (std::size_t j = 0; j < input.spec.b; ++j) {
    const auto block = input.block(j);
    for (index_t i = 0; i < k; ++i) pairs[i] = {block[i].value, i};
    std::sort(pairs.begin(), pairs.end());
    perms[j].resize(k);
    for (index_t t = 0; t < k; ++t) perms[j][t] = pairs[t].second;
  }
  return perms;
}

namespace detail {

struct NoHook {};

/// The postprocessing loop: slide the window across each consecutive block
/// pair (A, B) by deleting from A and undeleting into B, keeping exactly h
/// elements small across the pair, and emitting the first large element.
/// Emits b*k - k + 1 medians; the caller keeps the first n - k + 1.
template <std::signed_integral T, bool Count, typename Hook>
std::uint64_t run_postprocess(const FilterInput<T>& input,
                              std::span<const Permutation> perms,
                              Hook&& hook, std::vector<T>& out) {
  const WindowSpec& w = input.spec;
  const std::size_t keep = w.output_size();
  out.clear();
  out.reserve(keep);

  Block<T, Count> a(w.k, w.h);
  Block<T, Count> b(w.k, w.h);
  std::size_t emitted = 0;
  auto emit = [&](Sample<T> median) {
    if (emitted < keep) out.push_back(median.value);
    ++emitted;
  };

  b.construct(input.block(0), perms[0]);
  emit(b.peek());
  for (std::size_t j = 1; j < w.b; ++j) {
    std::swap(a, b);
    b.construct(input.block(j), perms[j]);
    b.unwind();
    for (index_t i = 0; i < w.k; ++i) {
      a.del(i);
      b.undelete(i);
      if (a.small() + b.small() < w.h) {
        // Peek(A) <= Peek(B): ties go to A, the earlier block.
        if (!sample_less(b.peek(), a.peek()))
          a.advance();
        else
          b.advance();
      }
      if constexpr (!std::is_same_v<std::decay_t<Hook>, NoHook>) hook(a, b, j, i);
      const Sample<T> pa = a.peek();
      const Sample<T> pb = b.peek();
      emit(sample_less(pb, pa) ? pb : pa);
    }
  }

  if constexpr (Count) return a.cell_accesses() + b.cell_accesses();
  return 0;
}

}  // namespace detail

template <std::signed_integral T>
std::vector<T> postprocess(const FilterInput<T>& input,
                           std::span<const Permutation> perms) {
  std::vector<T> out;
  detail::run_postprocess<T, false>(input, perms, detail::NoHook{}, out);
  return out;
}

/// Postprocess with the balance invariant validated before every emitted
/// element; throws debug::BlockCheckError on the first violation.
template <std::signed_integral T>
std::vector<T> postprocess_checked(const FilterInput<T>& input,
                                   std::span<const Permutation> perms) {
  std::vector<T> out;
  debug::WindowInvariantChecker<T> checker(input.padded, input.spec.k,
                                           input.spec.h);
  detail::run_postprocess<T, false>(input, perms, checker, out);
  return out;
}

template <std::signed_integral T>
struct CountedResult {
  std::vector<T> output;
  std::uint64_t cell_accesses{0};
};

/// Postprocess while counting block-structure cell accesses.
template <std::signed_integral T>
CountedResult<T> postprocess_counted(const FilterInput<T>& input,
                                     std::span<const Permutation> perms) {
  CountedResult<T> result;
  result.cell_accesses = detail::run_postprocess<T, true>(
      input, perms, detail::NoHook{}, result.output);
  return result;
}

/// Sliding-window median via piecewise sorting: pad to whole blocks, sort
/// each block, then a linear postprocessing pass over block pairs.
/// Output has max(0, n-k+1) elements; k must be odd.
template <std::signed_integral T>
std::vector<T> median_filter(std::span<const T> x, std::size_t k) {
  const WindowSpec spec = make_window_spec(x.size(), k);
  const FilterInput<T> input = pad_to_blocks(x, spec);
  const std::vector<Permutation> perms = piecewise_sort(input);
  return postprocess(input, perms);
}

template <std::signed_integral T>
std::vector<T> median_filter_checked(std::span<const T> x, std::size_t k) {
  const WindowSpec spec = make_window_spec(x.size(), k);
  const FilterInput<T> input = pad_to_blocks(x, spec);
  const std::vector<Permutation> perms = piecewise_sort(input);
  return postprocess_checked(input, perms);
}

template <std::signed_integral T>
CountedResult<T> median_filter_counted(std::span<const T> x, std::size_t k) {
  const WindowSpec spec = make_window_spec(x.size(), k);
  const FilterInput<T> input = pad_to_blocks(x, spec);
  const std::vector<Permutation> perms = piecewise_sort(input);
  return postprocess_counted(input, perms);
}

/// Sort blocks of h+1 values with one median filter call: surround each
/// block with h below-everything values and h above-everything values, run
/// the filter with k = 2h+1, and read each block's sorted image out of the
/// output. Executable form of the sorting lower bound for median filtering.
template <std::signed_integral T>
std::vector<std::vector<T>> sort_via_median_filter(
    std::span<const std::vector<T>> blocks, std::size_t h) {
  for (const auto& block : blocks)
    if (block.size() != h + 1)
      throw std::invalid_argument("each block must hold h+1 samples");
  if (blocks.empty()) return {};

  const std::size_t k = 2 * h + 1;
  const std::size_t unit = 3 * h + 1;  // h lows + block + h highs
  const T low = std::numeric_limits<T>::min();
  const T high = std::numeric_limits<T>::max();

  std::vector<T> gadget;
  gadget.reserve(blocks.size() * unit);
  for (const auto& block : blocks) {
    gadget.insert(gadget.end(), h, low);
    gadget.insert(gadget.end(), block.begin(), block.end());
    gadget.insert(gadget.end(), h, high);
  }

  const std::vector<T> medians = median_filter<T>(gadget, k);
  std::vector<std::vector<T>> sorted(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const std::size_t start = j * unit;
    sorted[j].assign(medians.begin() + start, medians.begin() + start + h + 1);
  }
  return sorted;
}

}  // namespace medfilt
