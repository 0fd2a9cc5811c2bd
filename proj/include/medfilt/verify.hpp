#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "medfilt/baselines.hpp"
#include "medfilt/filter.hpp"
#include "medfilt/generators.hpp"

namespace medfilt {

struct VerifyMismatch {
  std::string algorithm;
  std::string generator;
  int width{64};
  std::size_t k{0};
  std::size_t position{0};
  std::int64_t expected{0};
  std::int64_t actual{0};
  std::vector<std::int64_t> input;  // greedily shrunk reproducer
};

struct VerifyReport {
  std::size_t exhaustive_cases{0};
  std::size_t random_cases{0};
  std::optional<VerifyMismatch> mismatch;

  bool ok() const { return !mismatch.has_value(); }
};

namespace detail {

/// Deliberately wrong filter used to prove the harness can catch a bad
/// implementation: off by one order statistic whenever the window has more
/// than one element.
template <std::signed_integral T>
std::vector<T> broken_median_filter(std::span<const T> x, std::size_t k) {
  const WindowSpec spec = make_window_spec(x.size(), k);
  std::vector<T> out;
  if (spec.empty_output()) return out;
  std::vector<T> window(k);
  for (std::size_t i = 0; i + k <= x.size(); ++i) {
    std::copy(x.begin() + i, x.begin() + i + k, window.begin());
    std::sort(window.begin(), window.end());
    out.push_back(window[spec.h > 0 ? spec.h - 1 : 0]);
  }
  return out;
}

template <std::signed_integral T>
struct NamedFilter {
  std::string_view name;
  FilterFn<T> run;
};

template <std::signed_integral T>
std::vector<NamedFilter<T>> filter_table(bool include_broken) {
  std::vector<NamedFilter<T>> table = {
      {"sort", &median_filter<T>},
      {"move", &move_median_filter<T>},
      {"tree", &tree_median_filter<T>},
      {"heap", &heap_median_filter<T>},
  };
  if (include_broken) table.push_back({"broken", &broken_median_filter<T>});
  return table;
}

/// Compare every algorithm against the naive oracle on one input; on a
/// mismatch greedily trim the input from both ends while it still fails,
/// then report the shrunk case.
template <std::signed_integral T>
std::optional<VerifyMismatch> check_case(std::span<const T> x, std::size_t k,
                                         std::string_view generator,
                                         bool include_broken) {
  const std::vector<T> expected = naive_median_filter<T>(x, k);
  for (const auto& filter : filter_table<T>(include_broken)) {
    const std::vector<T> actual = filter.run(x, k);
    std::size_t bad = expected.size();
    if (actual.size() != expected.size()) {
      bad = std::min(actual.size(), expected.size());
    } else {
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (actual[i] != expected[i]) {
          bad = i;
          break;
        }
      if (bad == expected.size()) continue;
    }

    std::vector<T> current(x.begin(), x.end());
    auto still_fails = [&](std::span<const T> candidate) {
      return candidate.size() >= k &&
             filter.run(candidate, k) != naive_median_filter<T>(candidate, k);
    };
    bool shrunk = true;
    while (shrunk && current.size() > k) {
      shrunk = false;
      if (still_fails(std::span<const T>(current).subspan(1))) {
        current.erase(current.begin());
        shrunk = true;
      } else if (still_fails(
                     std::span<const T>(current).first(current.size() - 1))) {
        current.pop_back();
        shrunk = true;
      }
    }

    VerifyMismatch mismatch;
    mismatch.algorithm = std::string(filter.name);
    mismatch.generator = std::string(generator);
    mismatch.width = static_cast<int>(sizeof(T) * 8);
    mismatch.k = k;
    mismatch.position = bad;
    if (bad < expected.size()) mismatch.expected = expected[bad];
    if (bad < actual.size()) mismatch.actual = actual[bad];
    mismatch.input.assign(current.begin(), current.end());
    return mismatch;
  }
  return std::nullopt;
}

inline std::optional<VerifyMismatch> check_exhaustive_case(
    std::span<const std::int64_t> x, std::size_t k, bool include_broken) {
  return check_case<std::int64_t>(x, k, "exhaustive", include_broken);
}

}  // namespace detail

/// Run the exhaustive small-case sweep (every vector of length <= n_max over
/// the alphabet {0,1,2}, every odd k) plus `trials` seeded random cases
/// across all generators and both widths, comparing every algorithm against
/// the naive oracle. Stops at the first mismatch.
inline VerifyReport run_verify(std::size_t n_max, std::size_t trials,
                               std::uint64_t seed, bool include_broken = false) {
  VerifyReport report;

  std::vector<std::int64_t> x;
  for (std::size_t n = 1; n <= n_max && report.ok(); ++n) {
    x.assign(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total && report.ok(); ++code) {
      std::size_t rest = code;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<std::int64_t>(rest % 3);
        rest /= 3;
      }
      for (std::size_t k = 1; k <= n; k += 2) {
        ++report.exhaustive_cases;
        report.mismatch = detail::check_exhaustive_case(x, k, include_broken);
        if (!report.ok()) break;
      }
    }
  }

  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < trials && report.ok(); ++t) {
    const GeneratorKind kind = kAllGenerators[rng.below(7)];
    const std::size_t n = 1 + rng.below(500);
    const std::size_t k = 1 + 2 * rng.below((n + 1) / 2);
    const bool wide = rng.below(2) == 1;
    ++report.random_cases;
    if (wide) {
      const auto input = generate<std::int64_t>(kind, n, rng.next());
      report.mismatch = detail::check_case<std::int64_t>(
          input, k, to_string(kind), include_broken);
    } else {
      const auto input = generate<std::int32_t>(kind, n, rng.next());
      report.mismatch = detail::check_case<std::int32_t>(
          input, k, to_string(kind), include_broken);
    }
  }
  return report;
}

}  // namespace medfilt
