// Acceptance gate: one line per criterion, exact arithmetic throughout.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <map>

#include "gwf/suites.hpp"

using namespace gwf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

const BuiltInstance& instance(const std::string& name, int p) {
  static std::map<std::pair<std::string, int>, BuiltInstance> cache;
  auto key = std::make_pair(name, p);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build(builtinSpec(name, p))).first;
  return it->second;
}

void report(int idx, const std::string& label, bool pass, double seconds,
            const std::string& detail = "") {
  std::cout << "criterion " << idx << " [" << label << "]: "
            << (pass ? "pass" : "FAIL") << "  (" << seconds << " s)";
  if (!pass && !detail.empty()) std::cout << "  " << detail;
  std::cout << "\n" << std::flush;
  if (!pass) ++failures;
}

std::string firstFailure(const SuiteResult& r) {
  if (r.pass || r.report["failures"].empty()) return "";
  return r.report["failures"][0].get<std::string>();
}

struct Target {
  std::string name;
  int p;
  int degree;
};

void runCriterion(int idx, const std::string& label, const std::string& suite,
                  const std::vector<Target>& targets, int threads = 4) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  for (const auto& t : targets) {
    auto res = runSuite(suite, instance(t.name, t.p), t.degree, threads);
    if (!res.pass && pass) {
      pass = false;
      detail = t.name + "(p=" + std::to_string(t.p) + ") deg " +
               std::to_string(t.degree) + ": " + firstFailure(res);
    }
  }
  report(idx, label, pass,
         std::chrono::duration<double>(Clock::now() - t0).count(), detail);
}

}  // namespace

int main() {
  const std::vector<Target> gggrTargets = {
      {"sl2", 5, 0}, {"sl2", 7, 0}, {"gl2-z2", 5, 0}, {"gl2-z2", 5, 1}};

  runCriterion(1, "fourier calculus", "fourier",
               {{"sl2", 5, 0}, {"gl2-z2", 5, 0}, {"gl2-z2", 5, 1}});
  runCriterion(2, "orbit characters", "characters",
               {{"sl2", 3, 0}, {"sl2", 5, 0}, {"gl2", 5, 0}});
  runCriterion(3, "multiplicity round trip", "decomposition",
               {{"gl2", 5, 0}});
  runCriterion(4, "gggr properties", "gggr-props", gggrTargets);
  runCriterion(5, "ft counting formula", "ft-counting", gggrTargets);

  // 6: torsor counts, plus the literal q values for sl_2
  {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    for (const auto& t : gggrTargets) {
      auto res =
          runSuite("triple-counts", instance(t.name, t.p), t.degree, 4);
      if (!res.pass && pass) {
        pass = false;
        detail = firstFailure(res);
      }
      if (t.name == "sl2" && t.degree == 0) {
        for (const auto& row : res.report["orbits"])
          if (row["count"].get<long long>() != t.p && pass) {
            pass = false;
            detail = "sl2(p=" + std::to_string(t.p) + "): triple count " +
                     row["count"].dump() + " != " + std::to_string(t.p);
          }
      }
    }
    report(6, "triple torsor counts", pass,
           std::chrono::duration<double>(Clock::now() - t0).count(), detail);
  }

  runCriterion(7, "wave front = support cone", "wavefront-cone",
               gggrTargets);
  runCriterion(8, "N-map wave front bounds", "nmap-bounds",
               {{"gl2", 3, 0}, {"gl2", 5, 0}});

  {
    auto t0 = Clock::now();
    auto res = suiteJordanLayer(4);
    report(9, "jordan / induction layer", res.pass,
           std::chrono::duration<double>(Clock::now() - t0).count(),
           firstFailure(res));
  }
  {
    auto t0 = Clock::now();
    auto res = suiteBuilderValidation(4);
    report(10, "builder validation", res.pass,
           std::chrono::duration<double>(Clock::now() - t0).count(),
           firstFailure(res));
  }

  // 11: bit-identical suite reports at 1 vs 8 threads
  {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    for (const char* suite : {"gggr-props", "wavefront-cone"}) {
      for (const auto& t : {Target{"sl2", 5, 0}, Target{"gl2-z2", 5, 1}}) {
        auto a = runSuite(suite, instance(t.name, t.p), t.degree, 1);
        auto b = runSuite(suite, instance(t.name, t.p), t.degree, 8);
        if (a.report.dump() != b.report.dump() && pass) {
          pass = false;
          detail = std::string(suite) + " on " + t.name + " differs";
        }
      }
    }
    report(11, "thread-count determinism", pass,
           std::chrono::duration<double>(Clock::now() - t0).count(), detail);
  }

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 11 criteria passed\n";
  return 0;
}
