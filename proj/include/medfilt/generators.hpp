#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace medfilt {

/// splitmix64 (Steele, Lea, Flood): tiny, fast, identical output on every
/// platform, which keeps seeded runs reproducible across toolchains.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum class GeneratorKind { asc, desc, r_asc, r_desc, r_large, r_small, r_block };

inline constexpr GeneratorKind kAllGenerators[] = {
    GeneratorKind::asc,     GeneratorKind::desc,    GeneratorKind::r_asc,
    GeneratorKind::r_desc,  GeneratorKind::r_large, GeneratorKind::r_small,
    GeneratorKind::r_block,
};

inline std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::asc: return "asc";
    case GeneratorKind::desc: return "desc";
    case GeneratorKind::r_asc: return "r-asc";
    case GeneratorKind::r_desc: return "r-desc";
    case GeneratorKind::r_large: return "r-large";
    case GeneratorKind::r_small: return "r-small";
    case GeneratorKind::r_block: return "r-block";
  }
  return "?";
}

inline GeneratorKind parse_generator_kind(std::string_view name) {
  for (GeneratorKind kind : kAllGenerators)
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

struct GeneratorSpec {
  GeneratorKind kind{GeneratorKind::r_large};
  std::size_t n{0};
  std::uint64_t seed{0};
  int width{64};  // 32 or 64
};

namespace detail {

inline constexpr std::uint64_t kNoise = 10'000;        // small-noise bound
inline constexpr std::uint64_t kBlockBase = 1'000'000; // r-block base bound
inline constexpr std::uint64_t kBlockLen = 1'000;      // r-block segment length

template <std::signed_integral T>
void require_fits(std::uint64_t max_needed, std::size_t n) {
  constexpr auto max = static_cast<std::uint64_t>(std::numeric_limits<T>::max());
  if (n == 0) throw std::invalid_argument("generator requires n >= 1");
  if (max_needed > max)
    throw std::invalid_argument("generator range overflows element width");
}

}  // namespace detail

/// Produce n samples for one generator kind. Deterministic for a fixed
/// (kind, n, seed) and element type.
///
///   asc      x[i] = i
///   desc     x[i] = n - i
///   r-asc    x[i] = i + noise,       0 <= noise < 10^4
///   r-desc   x[i] = n - i + noise,   0 <= noise < 10^4
///   r-large  uniform over the full signed range
///   r-small  uniform in [0, 10^4)
///   r-block  constant per 1000-long segment (base in [0, 10^6)) + noise
template <std::signed_integral T>
std::vector<T> generate(GeneratorKind kind, std::size_t n, std::uint64_t seed) {
  using detail::kNoise;
  std::vector<T> x;
  SplitMix64 rng(seed);
  switch (kind) {
    case GeneratorKind::asc:
      detail::require_fits<T>(n - 1, n);
      x.resize(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<T>(i);
      break;
    case GeneratorKind::desc:
      detail::require_fits<T>(n, n);
      x.resize(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<T>(n - i);
      break;
    case GeneratorKind::r_asc:
      detail::require_fits<T>(n - 1 + kNoise - 1, n);
      x.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        x[i] = static_cast<T>(i + rng.below(kNoise));
      break;
    case GeneratorKind::r_desc:
      detail::require_fits<T>(n + kNoise - 1, n);
      x.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        x[i] = static_cast<T>(n - i + rng.below(kNoise));
      break;
    case GeneratorKind::r_large:
      detail::require_fits<T>(0, n);
      x.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        x[i] = static_cast<T>(static_cast<std::make_unsigned_t<T>>(rng.next()));
      break;
    case GeneratorKind::r_small:
      detail::require_fits<T>(kNoise - 1, n);
      x.resize(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<T>(rng.below(kNoise));
      break;
    case GeneratorKind::r_block: {
      detail::require_fits<T>(detail::kBlockBase + kNoise - 2, n);
      x.resize(n);
      std::uint64_t base = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i % detail::kBlockLen == 0) base = rng.below(detail::kBlockBase);
        x[i] = static_cast<T>(base + rng.below(kNoise));
      }
      break;
    }
  }
  return x;
}

inline bool width_valid(int width) { return width == 32 || width == 64; }

}  // namespace medfilt
