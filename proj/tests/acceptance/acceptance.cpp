// Acceptance run at the desk scale (n = 1, K = 8, C = 24, M = 49).
// Prints one PASS/FAIL line per criterion; `--criterion N` runs only N.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "tfloc/error.hpp"
#include "tfloc/verify.hpp"

using namespace tfloc;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
};

Environment desk() { return Environment{}; }

std::string describe(const CheckResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s: %d/%d violations, worst margin %.3g", r.id.c_str(),
                r.violations, r.trials, r.worst_margin);
  std::string s = buf;
  if (r.tier) s += " [" + *r.tier + "]";
  return s;
}

// Runs pinned specs and passes when none of them has a violation.
Outcome checks(const std::vector<CheckSpec>& specs) {
  Outcome o{true, ""};
  for (const auto& r : run_suite(specs, desk())) {
    o.pass = o.pass && r.violations == 0;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += describe(r);
  }
  return o;
}

Outcome mphi_harness() {
  const auto r = run_suite({{"mphi_boundedness", 20, 1e-9, kSeed}}, desk());
  Outcome o = {r.size() == 1 && r[0].violations == 0, describe(r.at(0))};
  // the reported ratio must exist and be finite
  const std::string tier = r[0].tier.value_or("");
  const auto at = tier.find("ratio_max=");
  const bool finite = at != std::string::npos &&
                      std::isfinite(std::strtod(tier.c_str() + at + 10, nullptr));
  if (!finite) o.detail += " (no finite M^Phi ratio reported)";
  o.pass = o.pass && finite && !report_line(r[0]).empty();
  return o;
}

Outcome determinism() {
  std::vector<CheckSpec> specs;
  for (const auto& c : registry()) {
    specs.push_back({c.id, std::min(c.default_trials, 10), c.default_tolerance, kSeed});
  }
  Environment one = desk();
  Environment three = desk();
  three.threads = 3;
  const std::string a = report_jsonl(run_suite(specs, one));
  const std::string b = report_jsonl(run_suite(specs, one));
  const std::string c = report_jsonl(run_suite(specs, three));
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu checks, %zu report bytes, repeat %s, threads 1 vs 3 %s",
                specs.size(), a.size(), a == b ? "identical" : "differs",
                a == c ? "identical" : "differs");
  return {a == b && a == c, buf};
}

std::vector<Criterion> criteria() {
  return {
      {1, "Plancherel", [] { return checks({{"plancherel", 100, 1e-10, kSeed}}); }},
      {2, "orthogonality relation", [] { return checks({{"orthogonality", 100, 1e-10, kSeed}}); }},
      {3, "inversion", [] { return checks({{"inversion", 100, 1e-10, kSeed}}); }},
      {4, "Luxemburg power-case reduction",
       [] { return checks({{"luxemburg_power_reduction", 100, 1e-9, kSeed}}); }},
      {5, "Holder inequalities (sequence and mixed)",
       [] {
         return checks({{"holder_sequence", 1000, 1e-9, kSeed}, {"holder_mixed", 1000, 1e-9, kSeed}});
       }},
      {6, "convolution relations",
       [] {
         return checks(
             {{"convolution_mixed", 200, 1e-9, kSeed}, {"convolution_orlicz", 200, 1e-9, kSeed}});
       }},
      {7, "embedding certificates", [] { return checks({{"embedding_conditions", 4, 1e-9, kSeed}}); }},
      {8, "identity operator", [] { return checks({{"identity_operator", 10, 1e-10, kSeed}}); }},
      {9, "adjoint identity and Hermitian kernels",
       [] {
         return checks(
             {{"adjoint_identity", 50, 1e-12, kSeed}, {"hermitian_kernel", 50, 1e-12, kSeed}});
       }},
      {10, "trace identity and HS consistency",
       [] {
         return checks({{"trace_identity", 100, 1e-10, kSeed}, {"hs_consistency", 100, 1e-10, kSeed}});
       }},
      {11, "operator-norm bounds",
       [] {
         return checks({{"opnorm_linf_bound", 100, 1e-9, kSeed}, {"schur_bound", 100, 1e-9, kSeed}});
       }},
      {12, "trace-class facts",
       [] {
         return checks({{"psd_s1_trace", 100, 1e-10, kSeed},
                        {"s1_general_bound", 100, 1e-9, kSeed},
                        {"s1_sandwich_lower", 100, 1e-9, kSeed},
                        {"schatten_log_convexity", 100, 1e-9, kSeed}});
       }},
      {13, "M^Phi boundedness harness", mphi_harness},
      {14, "deterministic reports", determinism},
  };
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }

  bool all = true;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.number != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s (%.1fs) :: %s\n", o.pass ? "PASS" : "FAIL", c.number, c.title, secs,
                o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
