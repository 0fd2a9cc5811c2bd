#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "medfilt/baselines.hpp"
#include "medfilt/filter.hpp"
#include "medfilt/generators.hpp"
#include "medfilt/io.hpp"

namespace medfilt {

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,generator,width,n,h,b,repeat,wall_time_s,checksum";

/// One benchmark measurement. repeat = -1 marks the per-cell median summary
/// row.
struct BenchRecord {
  std::string algorithm;
  std::string generator;
  int width{64};
  std::size_t n{0};
  std::size_t h{0};
  std::size_t b{0};
  long repeat{0};
  double wall_time_s{0.0};
  std::uint64_t checksum{0};
};

struct BenchConfig {
  std::uint64_t bh{0};
  std::vector<std::size_t> h_values;
  std::vector<std::string> algorithms{"sort", "heap", "tree", "move", "naive"};
  std::vector<GeneratorKind> generators{kAllGenerators,
                                        kAllGenerators + 7};
  std::vector<int> widths{64};
  std::size_t repeats{5};
  std::uint64_t seed{0};
};

namespace detail {

template <std::signed_integral T>
FilterFn<T> lookup_filter(std::string_view name) {
  if (name == "sort") return &median_filter<T>;
  if (name == "heap") return &heap_median_filter<T>;
  if (name == "tree") return &tree_median_filter<T>;
  if (name == "move") return &move_median_filter<T>;
  if (name == "naive") return &naive_median_filter<T>;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

/// Wall time (monotonic clock) around the filter call only; the checksum of
/// the result doubles as the optimization sink.
template <std::signed_integral T>
std::pair<double, std::uint64_t> time_filter(FilterFn<T> filter,
                                             std::span<const T> x,
                                             std::size_t k) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<T> y = filter(x, k);
  const auto stop = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(stop - start).count();
  return {seconds, fold_checksum<T>(y)};
}

inline double median_time(std::vector<double> times) {
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  if (times.size() % 2 == 1) return times[mid];
  return (times[mid - 1] + times[mid]) / 2.0;
}

template <std::signed_integral T>
void bench_cell(const BenchConfig& config, std::string_view algorithm,
                GeneratorKind kind, std::size_t h,
                std::vector<BenchRecord>& records) {
  if (h > 0 && config.bh < h)
    throw std::invalid_argument("bh must be at least max(h)");
  // Keep b*h ~ bh; h = 0 degenerates to n = b single-element windows.
  const std::size_t b =
      h == 0 ? static_cast<std::size_t>(config.bh)
             : static_cast<std::size_t>((config.bh + h / 2) / h);
  const std::size_t k = 2 * h + 1;
  const std::size_t n = k * b;
  const FilterFn<T> filter = lookup_filter<T>(algorithm);

  BenchRecord base;
  base.algorithm = std::string(algorithm);
  base.generator = std::string(to_string(kind));
  base.width = static_cast<int>(sizeof(T) * 8);
  base.n = n;
  base.h = h;
  base.b = b;

  std::vector<double> times;
  times.reserve(config.repeats);
  for (std::size_t repeat = 0; repeat < config.repeats; ++repeat) {
    const std::vector<T> x = generate<T>(kind, n, config.seed + repeat);
    if (repeat == 0) (void)time_filter<T>(filter, x, k);  // warm-up, discarded
    auto [seconds, checksum] = time_filter<T>(filter, x, k);
    BenchRecord record = base;
    record.repeat = static_cast<long>(repeat);
    record.wall_time_s = seconds;
    record.checksum = checksum;
    records.push_back(record);
    times.push_back(seconds);
  }

  BenchRecord summary = base;
  summary.repeat = -1;
  summary.wall_time_s = median_time(std::move(times));
  summary.checksum = records.back().checksum;
  records.push_back(summary);
}

inline void append_double(std::string& line, double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  line.append(buf, ptr);
}

}  // namespace detail

/// Run the full sweep: every (algorithm, generator, width, h) cell gets
/// `repeats` timed runs after one discarded warm-up, each seeded as
/// seed + repeat, plus a median summary row.
inline std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (int width : config.widths) {
    if (!width_valid(width))
      throw std::invalid_argument("width must be 32 or 64");
    for (const std::string& algorithm : config.algorithms)
      for (GeneratorKind kind : config.generators)
        for (std::size_t h : config.h_values) {
          if (width == 32)
            detail::bench_cell<std::int32_t>(config, algorithm, kind, h,
                                             records);
          else
            detail::bench_cell<std::int64_t>(config, algorithm, kind, h,
                                             records);
        }
  }
  return records;
}

/// CSV with a fixed header, one record per line, decimal dot, no locale
/// dependence. Summary rows carry "median" in the repeat column.
inline void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kBenchCsvHeader << '\n';
  std::string line;
  for (const BenchRecord& r : records) {
    line.clear();
    line += r.algorithm;
    line += ',';
    line += r.generator;
    line += ',';
    line += std::to_string(r.width);
    line += ',';
    line += std::to_string(r.n);
    line += ',';
    line += std::to_string(r.h);
    line += ',';
    line += std::to_string(r.b);
    line += ',';
    line += r.repeat < 0 ? "median" : std::to_string(r.repeat);
    line += ',';
    detail::append_double(line, r.wall_time_s);
    line += ',';
    line += std::to_string(r.checksum);
    line += '\n';
    out << line;
  }
}

}  // namespace medfilt
