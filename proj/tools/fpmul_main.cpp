// Copyright 2026 The fpmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fpmul/io.hpp"
#include "fpmul/polymul.hpp"
#include "fpmul/selftest.hpp"

#ifdef __linux__
#include <sched.h>
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

fpmul::FieldChoice parse_field(const std::string& s) {
  if (s == "64") return fpmul::FieldChoice::kGF64;
  if (s == "128") return fpmul::FieldChoice::kGF128;
  return fpmul::FieldChoice::kAuto;
}

// Best-effort measurement hygiene: keep the timing loop on one logical
// processor.
void pin_to_one_cpu() {
#ifdef __linux__
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(0, &set);
  (void)sched_setaffinity(0, sizeof(set), &set);
#endif
}

int cmd_mul(const std::string& in_a, const std::string& in_b, const std::string& out,
            const std::string& field) {
  try {
    const fpmul::BitPoly a = fpmul::load_polynomial(in_a);
    const fpmul::BitPoly b = fpmul::load_polynomial(in_b);
    fpmul::MulOptions opts;
    opts.field = parse_field(field);
    const fpmul::BitPoly c = fpmul::fp_polymul(a, b, opts);
    fpmul::store_polynomial(out, c);
    std::cout << "product bit length: " << c.max_degree_plus_one() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_selftest(const std::string& level, uint64_t seed, bool corrupt_encode) {
  fpmul::SelftestOptions opts;
  opts.level = level == "full" ? fpmul::SelftestLevel::kFull : fpmul::SelftestLevel::kQuick;
  opts.seed = seed;
  opts.corrupt_encode_matrix = corrupt_encode;
  const auto report = fpmul::run_selftest(opts, std::cout);
  if (!report.ok) {
    std::cerr << "selftest FAILED; failing invariants:\n";
    for (const auto& name : report.failed_invariants) std::cerr << "  " << name << "\n";
    return kExitVerifyFailure;
  }
  std::cout << "selftest passed\n";
  return kExitOk;
}

int cmd_bench(unsigned min_log, unsigned max_log, unsigned reps, const std::string& csv_path,
              const std::string& field, uint64_t seed) {
  if (min_log > max_log || reps < 3) {
    std::cerr << "error: need min-log <= max-log and reps >= 3\n";
    return kExitUsage;
  }
  pin_to_one_cpu();

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) {
      std::cerr << "error: cannot open '" << csv_path << "'\n";
      return kExitUsage;
    }
    out = &file;
  }
  *out << "log2_size_words,n_bits,m,reps,mean_s,basiscvt_s,encode_s,butterfly_s,pointwise_s,"
          "ibutterfly_s,decode_s,ibasiscvt_s\n";

  std::mt19937_64 rng(seed);
  for (unsigned lg = min_log; lg <= max_log; ++lg) {
    const size_t n_bits = size_t{64} << lg;  // padded product length
    fpmul::MulOptions opts;
    opts.field = parse_field(field);
    opts.policy = fpmul::ExecPolicy::kSerial;
    fpmul::StageSeconds stages;
    opts.stage_seconds = &stages;

    fpmul::MulPlan plan;
    try {
      plan = fpmul::plan_mul(n_bits / 2, n_bits / 2, opts.field);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }

    const fpmul::BitPoly a = fpmul::random_bitpoly(n_bits / 2, rng);
    const fpmul::BitPoly b = fpmul::random_bitpoly(n_bits / 2, rng);

    // Verification hook: the smallest size is checked against the
    // independent Karatsuba path once.
    if (lg == min_log) {
      if (fpmul::fp_polymul(a, b, opts) != fpmul::karatsuba_mul(a, b)) {
        std::cerr << "verification FAILED at log2(n/64)=" << lg
                  << ": fp_polymul disagrees with karatsuba_mul\n";
        return kExitVerifyFailure;
      }
    }

    stages = fpmul::StageSeconds{};
    double total = 0;
    fpmul::BitPoly sink;
    for (unsigned r = 0; r < reps; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      sink = fpmul::fp_polymul(a, b, opts);
      total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    const double inv_reps = 1.0 / reps;
    char line[512];
    std::snprintf(line, sizeof line, "%u,%zu,%u,%u,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f\n", lg,
                  n_bits, plan.field_degree, reps, total * inv_reps, stages.basiscvt * inv_reps,
                  stages.encode * inv_reps, stages.butterfly * inv_reps,
                  stages.pointwise * inv_reps, stages.ibutterfly * inv_reps,
                  stages.decode * inv_reps, stages.ibasiscvt * inv_reps);
    *out << line << std::flush;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplier for long polynomials over GF(2)"};
  app.require_subcommand(1);

  std::string field = "auto";

  auto* mul = app.add_subcommand("mul", "Multiply two binary polynomial files");
  std::string in_a, in_b, out_path;
  mul->add_option("in_a", in_a, "First input file")->required();
  mul->add_option("in_b", in_b, "Second input file")->required();
  mul->add_option("out", out_path, "Output file")->required();
  mul->add_option("--field", field, "Field: auto, 64 or 128")
      ->check(CLI::IsMember({"auto", "64", "128"}));

  auto* selftest = app.add_subcommand("selftest", "Run the library's invariant suites");
  std::string level = "quick";
  uint64_t seed = 1;
  bool corrupt_encode = false;
  selftest->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  selftest->add_option("--seed", seed, "Seed for sampled checks");
  selftest->add_flag("--inject-encode-fault", corrupt_encode,
                     "Developer hook: corrupt an encode table copy (the suite must fail)");

  auto* bench = app.add_subcommand("bench", "Time multiplications and emit per-stage CSV");
  unsigned min_log = 16, max_log = 20, reps = 100;
  std::string csv_path;
  uint64_t bench_seed = 1;
  bench->add_option("--min-log", min_log, "Smallest size as log2(n_bits/64)")->required();
  bench->add_option("--max-log", max_log, "Largest size as log2(n_bits/64)")->required();
  bench->add_option("--reps", reps, "Repetitions per size (default 100)");
  bench->add_option("--csv", csv_path, "CSV output path (default stdout)");
  bench->add_option("--field", field, "Field: auto, 64 or 128")
      ->check(CLI::IsMember({"auto", "64", "128"}));
  bench->add_option("--seed", bench_seed, "Seed for the random inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mul->parsed()) return cmd_mul(in_a, in_b, out_path, field);
    if (selftest->parsed()) return cmd_selftest(level, seed, corrupt_encode);
    if (bench->parsed()) return cmd_bench(min_log, max_log, reps, csv_path, field, bench_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
