// Command-line front end: filter integer streams, generate benchmark inputs,
// cross-verify the five filter implementations, and run timing sweeps that
// emit CSV. See README.md for format details.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medfilt/medfilt.hpp"

namespace {

bool debug_invariants_enabled() {
  const char* value = std::getenv("MEDFILT_DEBUG_INVARIANTS");
  return value != nullptr && std::string_view(value) == "1";
}

struct StreamIn {
  std::ifstream file;
  std::istream& get(const std::string& path) {
    if (path.empty() || path == "-") return std::cin;
    file.open(path, std::ios::binary);
    if (!file) throw CLI::RuntimeError("cannot open input: " + path, 1);
    return file;
  }
};

struct StreamOut {
  std::ofstream file;
  std::ostream& get(const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw CLI::RuntimeError("cannot open output: " + path, 1);
    return file;
  }
};

template <std::signed_integral T>
std::vector<T> run_algorithm(const std::string& name, std::span<const T> x,
                             std::size_t k, bool checked) {
  if (name == "sort" && checked) return medfilt::median_filter_checked<T>(x, k);
  return medfilt::detail::lookup_filter<T>(name)(x, k);
}

template <std::signed_integral T>
std::vector<T> narrow_values(const std::vector<std::int64_t>& wide) {
  std::vector<T> values;
  values.reserve(wide.size());
  for (std::int64_t v : wide) values.push_back(static_cast<T>(v));
  return values;
}

int cmd_filter(const std::string& in_path, const std::string& out_path,
               std::size_t k, const std::string& algorithm,
               const std::string& format) {
  StreamIn in;
  StreamOut out;
  std::istream& input = in.get(in_path);
  const bool checked = debug_invariants_enabled();

  try {
    if (format == "text") {
      const std::vector<std::int64_t> x = medfilt::read_text(input);
      if (x.empty()) {
        std::cerr << "medfilt: warning: empty input, emitting empty output\n";
        return 0;
      }
      if (x.size() < k)
        std::cerr << "medfilt: warning: input shorter than window (n=" << x.size()
                  << ", k=" << k << "), emitting empty output\n";
      const std::vector<std::int64_t> y =
          run_algorithm<std::int64_t>(algorithm, x, k, checked);
      medfilt::write_text<std::int64_t>(out.get(out_path), y);
    } else {
      const medfilt::BinaryData data = medfilt::read_binary(input);
      if (data.values.empty()) {
        std::cerr << "medfilt: warning: empty input, emitting empty output\n";
        medfilt::BinaryData empty;
        std::ostream& os = out.get(out_path);
        os.put(static_cast<char>(data.width));
        (void)empty;
        return 0;
      }
      if (data.values.size() < k)
        std::cerr << "medfilt: warning: input shorter than window (n="
                  << data.values.size() << ", k=" << k
                  << "), emitting empty output\n";
      std::ostream& os = out.get(out_path);
      if (data.width == 32) {
        const auto x = narrow_values<std::int32_t>(data.values);
        const auto y = run_algorithm<std::int32_t>(algorithm, x, k, checked);
        medfilt::write_binary<std::int32_t>(os, y);
      } else {
        const auto y =
            run_algorithm<std::int64_t>(algorithm, data.values, k, checked);
        medfilt::write_binary<std::int64_t>(os, y);
      }
    }
  } catch (const medfilt::ParseError& e) {
    std::cerr << "medfilt: parse error at line " << e.line() << ": " << e.what()
              << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "medfilt: " << e.what() << '\n';
    return 1;
  } catch (const medfilt::debug::BlockCheckError& e) {
    std::cerr << "medfilt: invariant violation: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cmd_generate(const std::string& kind_name, std::size_t n,
                 std::uint64_t seed, int width, const std::string& format,
                 const std::string& out_path) {
  StreamOut out;
  try {
    const medfilt::GeneratorKind kind =
        medfilt::parse_generator_kind(kind_name);
    if (!medfilt::width_valid(width))
      throw std::invalid_argument("width must be 32 or 64");
    std::ostream& os = out.get(out_path);
    if (width == 32) {
      const auto x = medfilt::generate<std::int32_t>(kind, n, seed);
      if (format == "text")
        medfilt::write_text<std::int32_t>(os, x);
      else
        medfilt::write_binary<std::int32_t>(os, x);
    } else {
      const auto x = medfilt::generate<std::int64_t>(kind, n, seed);
      if (format == "text")
        medfilt::write_text<std::int64_t>(os, x);
      else
        medfilt::write_binary<std::int64_t>(os, x);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "medfilt: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cmd_verify(std::size_t n_max, std::size_t trials, std::uint64_t seed,
               bool inject_fault) {
  const medfilt::VerifyReport report =
      medfilt::run_verify(n_max, trials, seed, inject_fault);
  std::cout << "exhaustive cases: " << report.exhaustive_cases << '\n'
            << "random cases:     " << report.random_cases << '\n';
  if (report.ok()) {
    std::cout << "verify: OK, all implementations agree\n";
    return 0;
  }
  const medfilt::VerifyMismatch& m = *report.mismatch;
  std::cout << "verify: MISMATCH\n"
            << "  algorithm: " << m.algorithm << '\n'
            << "  generator: " << m.generator << '\n'
            << "  width:     " << m.width << '\n'
            << "  k:         " << m.k << '\n'
            << "  position:  " << m.position << '\n'
            << "  expected:  " << m.expected << '\n'
            << "  actual:    " << m.actual << '\n'
            << "  input (" << m.input.size() << " values):";
  for (std::int64_t v : m.input) std::cout << ' ' << v;
  std::cout << '\n';
  return 1;
}

int cmd_bench(const medfilt::BenchConfig& config, const std::string& out_path,
              const std::vector<std::string>& generator_names) {
  StreamOut out;
  try {
    medfilt::BenchConfig resolved = config;
    if (!generator_names.empty()) {
      resolved.generators.clear();
      for (const std::string& name : generator_names)
        resolved.generators.push_back(medfilt::parse_generator_kind(name));
    }
    const std::vector<medfilt::BenchRecord> records =
        medfilt::run_bench(resolved);
    medfilt::write_csv(out.get(out_path), records);
  } catch (const std::invalid_argument& e) {
    std::cerr << "medfilt: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-window median filtering, generators and benchmarks"};
  app.require_subcommand(1);

  // filter
  auto* filter = app.add_subcommand("filter", "median-filter a stream");
  std::size_t filter_k = 0;
  std::string filter_alg = "sort";
  std::string filter_format = "text";
  std::string filter_in, filter_out;
  filter->add_option("--k", filter_k, "window size (odd)")->required();
  filter->add_option("--algorithm", filter_alg)
      ->check(CLI::IsMember({"sort", "heap", "tree", "move", "naive"}));
  filter->add_option("--format", filter_format)
      ->check(CLI::IsMember({"text", "bin"}));
  filter->add_option("--in", filter_in, "input path (default stdin)");
  filter->add_option("--out", filter_out, "output path (default stdout)");

  // generate
  auto* generate = app.add_subcommand("generate", "produce input samples");
  std::string gen_kind;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  int gen_width = 64;
  std::string gen_format = "text";
  std::string gen_out;
  generate->add_option("--kind", gen_kind, "one of asc desc r-asc r-desc r-large r-small r-block")
      ->required();
  generate->add_option("--n", gen_n, "sample count")->required();
  generate->add_option("--seed", gen_seed);
  generate->add_option("--width", gen_width)->check(CLI::IsMember({32, 64}));
  generate->add_option("--format", gen_format)
      ->check(CLI::IsMember({"text", "bin"}));
  generate->add_option("--out", gen_out, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check all algorithms");
  std::size_t verify_n_max = 8;
  std::size_t verify_trials = 1000;
  std::uint64_t verify_seed = 0;
  bool verify_fault = false;
  verify->add_option("--n-max", verify_n_max, "exhaustive sweep bound");
  verify->add_option("--trials", verify_trials, "randomized trial count");
  verify->add_option("--seed", verify_seed);
  verify
      ->add_flag("--inject-fault", verify_fault,
                 "include a deliberately broken algorithm (harness self-test)")
      ->group("");

  // bench
  auto* bench = app.add_subcommand("bench", "timing sweep, CSV output");
  medfilt::BenchConfig config;
  std::vector<std::string> bench_generators;
  std::string bench_out;
  bench->add_option("--bh", config.bh, "fixed b*h product")->required();
  bench->add_option("--h", config.h_values, "half-window sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--algorithms", config.algorithms)->delimiter(',');
  bench->add_option("--generators", bench_generators)->delimiter(',');
  bench->add_option("--widths", config.widths)->delimiter(',');
  bench->add_option("--repeats", config.repeats);
  bench->add_option("--seed", config.seed);
  bench->add_option("--out", bench_out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (filter->parsed())
    return cmd_filter(filter_in, filter_out, filter_k, filter_alg,
                      filter_format);
  if (generate->parsed())
    return cmd_generate(gen_kind, gen_n, gen_seed, gen_width, gen_format,
                        gen_out);
  if (verify->parsed())
    return cmd_verify(verify_n_max, verify_trials, verify_seed, verify_fault);
  if (bench->parsed()) return cmd_bench(config, bench_out, bench_generators);
  return 0;
}
