#include "gwf/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace gwf {

namespace {

void fail(SuiteResult& r, const std::string& msg) {
  r.pass = false;
  r.report["failures"].push_back(msg);
}

nlohmann::json algebraInfo(const BuiltInstance& inst, int degree) {
  nlohmann::json j;
  j["metadata"] = inst.algebra->metadata;
  j["degree"] = inst.algebra->degMod(degree);
  if (inst.group) j["groupOrder"] = inst.group->order();
  return j;
}

PieceFunction randomFunction(const GradedAlgebra& A, int deg,
                             std::mt19937_64& rng) {
  auto f = zeroFunction(A, deg, false);
  int p = A.F->p();
  long long q = A.F->q();
  for (auto& v : f.values) {
    v = ScaledCyclotomic::zero(p, q);
    for (int i = 0; i < p; ++i)
      v += ScaledCyclotomic::zeta(i, p, q) *
           ScaledCyclotomic::integer(static_cast<long long>(rng() % 7) - 3, p,
                                     q);
  }
  return f;
}

std::vector<PieceFunction> orbitCharacters(const GradedAlgebra& A,
                                           const GroupAction& G,
                                           const std::vector<Orbit>& orbits,
                                           int threads) {
  std::vector<PieceFunction> chis;
  for (const auto& o : orbits) chis.push_back(chiOrbit(A, G, o, threads));
  return chis;
}

PieceFunction combination(const GradedAlgebra& A,
                          const std::vector<PieceFunction>& chis,
                          const std::vector<long long>& c) {
  auto f = zeroFunction(A, chis.at(0).degree, false);
  for (size_t i = 0; i < chis.size(); ++i) {
    if (c[i] == 0) continue;
    auto w = ScaledCyclotomic::integer(c[i], A.F->p(), A.F->q());
    for (size_t t = 0; t < f.values.size(); ++t)
      f.values[t] += w * chis[i].values[t];
  }
  return f;
}

}  // namespace

SuiteResult suiteFourier(const BuiltInstance& inst, int degree, int threads) {
  const auto& A = *inst.algebra;
  SuiteResult r;
  r.report["suite"] = "fourier";
  r.report["algebra"] = algebraInfo(inst, degree);
  r.report["failures"] = nlohmann::json::array();
  std::mt19937_64 rng(0x46540000u + uint32_t(A.degMod(degree)));
  const int rounds = 100;  // two fresh functions per round = 200 functions
  for (int it = 0; it < rounds; ++it) {
    auto f = randomFunction(A, degree, rng);
    auto g = randomFunction(A, degree, rng);
    auto fhat = ft(A, f, threads);
    auto ff = ft(A, fhat, threads);
    auto neg = negateArgument(A, f);
    for (size_t i = 0; i < f.values.size(); ++i)
      if (ff.values[i] != neg.values[i]) {
        fail(r, "involution failed at point " + std::to_string(i) +
                    " in round " + std::to_string(it));
        break;
      }
    if (inner(A, fhat, ft(A, g, threads)) != inner(A, f, g))
      fail(r, "Plancherel failed in round " + std::to_string(it));
  }
  r.report["functions"] = 2 * rounds;
  return r;
}

SuiteResult suiteCharacters(const BuiltInstance& inst, int degree,
                            int threads) {
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  SuiteResult r;
  r.report["suite"] = "characters";
  r.report["algebra"] = algebraInfo(inst, degree);
  r.report["failures"] = nlohmann::json::array();
  const int N = A.dim(degree);
  auto orbits = G.allOrbits(degree, true);
  auto chis = orbitCharacters(A, G, orbits, threads);
  auto scale = ScaledCyclotomic::integer(1, A.F->p(), A.F->q())
                   .shiftHalfPower(N);
  auto zero = ScaledCyclotomic::zero(A.F->p(), A.F->q());
  nlohmann::json tab = nlohmann::json::array();
  for (size_t i = 0; i < orbits.size(); ++i) {
    auto hat = ft(A, chis[i], threads);
    for (uint64_t pt = 0; pt < hat.values.size(); ++pt) {
      bool inO = std::binary_search(orbits[i].points.begin(),
                                    orbits[i].points.end(), pt);
      if (hat.values[pt] != (inO ? scale : zero)) {
        fail(r, "FT(chi) is not the scaled orbit indicator at orbit " +
                    std::to_string(orbits[i].rep()) + ", point " +
                    std::to_string(pt));
        break;
      }
    }
    Orbit negO = G.negatedOrbit(orbits[i]);
    size_t j = 0;
    while (j < orbits.size() && orbits[j].rep() != negO.rep()) ++j;
    bool conjOk = j < orbits.size();
    for (size_t t = 0; conjOk && t < chis[i].values.size(); ++t)
      conjOk = chis[i].values[t].conj() == chis[j].values[t];
    if (!conjOk)
      fail(r, "conj(chi) != chi of the negated orbit at orbit " +
                  std::to_string(orbits[i].rep()));
    tab.push_back({{"rep", orbits[i].rep()}, {"size", orbits[i].size()}});
  }
  r.report["orbits"] = tab;
  return r;
}

SuiteResult suiteDecomposition(const BuiltInstance& inst, int degree,
                               int threads) {
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  SuiteResult r;
  r.report["suite"] = "decomposition";
  r.report["algebra"] = algebraInfo(inst, degree);
  r.report["failures"] = nlohmann::json::array();
  auto orbits = G.allOrbits(degree, true);
  auto chis = orbitCharacters(A, G, orbits, threads);
  std::mt19937_64 rng(0xdec00000u);
  const int rounds = 100;
  for (int it = 0; it < rounds; ++it) {
    std::vector<long long> c(orbits.size());
    for (auto& x : c) x = static_cast<long long>(rng() % 4);
    auto f = combination(A, chis, c);
    auto d = isInvariantCharacter(A, G, f, threads);
    if (!d.ok) {
      fail(r, "round " + std::to_string(it) + ": rejected (" + d.reason + ")");
      continue;
    }
    for (size_t i = 0; i < orbits.size(); ++i)
      if (d.mult[i].first != orbits[i].rep() || d.mult[i].second != c[i]) {
        fail(r, "round " + std::to_string(it) +
                    ": multiplicity mismatch at orbit " +
                    std::to_string(orbits[i].rep()));
        break;
      }
    auto bad = f;
    uint64_t where = rng() % bad.values.size();
    bad.values[where] += ScaledCyclotomic::integer(1, A.F->p(), A.F->q());
    if (isInvariantCharacter(A, G, bad, threads).ok)
      fail(r, "round " + std::to_string(it) +
                  ": perturbation at point " + std::to_string(where) +
                  " not detected");
  }
  r.report["rounds"] = rounds;
  r.report["orbitCount"] = orbits.size();
  return r;
}

SuiteResult suiteGggrProps(const BuiltInstance& inst, int degree,
                           int threads) {
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  SuiteResult r;
  r.report["suite"] = "gggr-props";
  r.report["algebra"] = algebraInfo(inst, degree);
  r.report["failures"] = nlohmann::json::array();
  auto table = buildGggrTable(A, G, degree, threads);
  auto all = G.allOrbits(table.degree, true);
  nlohmann::json tab = nlohmann::json::array();
  for (size_t i = 0; i < table.orbits.size(); ++i) {
    const auto& gamma = table.gamma[i];
    uint64_t supportSize = 0;
    for (uint64_t pt = 0; pt < gamma.values.size(); ++pt)
      if (!gamma.values[pt].isZero()) {
        ++supportSize;
        if (!A.isNilpotent(table.degree, A.indexToVec(table.degree, pt)))
          fail(r, "Gamma of orbit " + std::to_string(table.orbits[i].rep()) +
                      " supported outside the nilpotent cone at " +
                      std::to_string(pt));
      }
    auto d = isInvariantCharacter(A, G, gamma, threads);
    if (!d.ok)
      fail(r, "Gamma of orbit " + std::to_string(table.orbits[i].rep()) +
                  " is not an invariant character: " + d.reason);
    nlohmann::json pairingRow = nlohmann::json::array();
    for (const auto& op : all) {
      try {
        auto p = pairing(A, G, table, op, i, threads);
        pairingRow.push_back(p.sliceHit ? 1 : 0);
      } catch (const GwfError& e) {
        fail(r, e.what());
        pairingRow.push_back(-1);
      }
    }
    tab.push_back({{"rep", table.orbits[i].rep()},
                   {"supportSize", supportSize},
                   {"dimLeNeg1", table.dimLeNeg1[i]},
                   {"sliceHits", pairingRow}});
  }
  r.report["gggr"] = tab;
  r.report["coadjointOrbitCount"] = all.size();
  return r;
}

SuiteResult suiteFtCounting(const BuiltInstance& inst, int degree,
                            int threads) {
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  SuiteResult r;
  r.report["suite"] = "ft-counting";
  r.report["algebra"] = algebraInfo(inst, degree);
  r.report["failures"] = nlohmann::json::array();
  nlohmann::json tab = nlohmann::json::array();
  for (const auto& o : G.nilpotentCoadjointOrbits(degree)) {
    auto hat = ft(A, gammaDirect(A, G, o, threads), threads);
    uint64_t bad = 0;
    for (uint64_t b = 0; b < A.pieceSize(degree); ++b)
      if (hat.values[b] != gammaFtCounting(A, G, o, A.indexToVec(degree, b))) {
        if (!bad)
          fail(r, "counting formula disagrees with FT(Gamma) at orbit " +
                      std::to_string(o.rep()) + ", dual point " +
                      std::to_string(b));
        ++bad;
      }
    tab.push_back({{"rep", o.rep()}, {"mismatches", bad}});
  }
  r.report["orbits"] = tab;
  return r;
}

SuiteResult suiteTripleCounts(const BuiltInstance& inst, int degree,
                              int threads) {
  (void)threads;
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  SuiteResult r;
  r.report["suite"] = "triple-counts";
  r.report["algebra"] = algebraInfo(inst, degree);
  r.report["failures"] = nlohmann::json::array();
  nlohmann::json tab = nlohmann::json::array();
  for (const auto& o : G.nilpotentOrbits(degree)) {
    if (o.rep() == 0 && o.size() == 1) continue;  // skip the zero orbit
    FqVec e = A.indexToVec(degree, o.rep());
    try {
      auto c = allTriplesCount(A, degree, e);
      tab.push_back({{"rep", o.rep()},
                     {"count", c.count},
                     {"expected", c.expected}});
    } catch (const GwfError& err) {
      fail(r, std::string("orbit ") + std::to_string(o.rep()) + ": " +
                  err.what());
    }
  }
  r.report["orbits"] = tab;
  return r;
}

SuiteResult suiteWavefrontCone(const BuiltInstance& inst, int degree,
                               int threads) {
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  SuiteResult r;
  r.report["suite"] = "wavefront-cone";
  r.report["algebra"] = algebraInfo(inst, degree);
  r.report["failures"] = nlohmann::json::array();
  auto table = buildGggrTable(A, G, degree, threads);
  auto orbits = G.allOrbits(table.degree, true);
  auto chis = orbitCharacters(A, G, orbits, threads);

  auto check = [&](const PieceFunction& f, const std::string& label,
                   nlohmann::json& row) {
    auto wf = wavefront(A, table, f);
    auto supp = supportOrbits(A, G, ft(A, f, threads));
    auto cone = coneOfOrbits(A, table, supp);
    row["wavefront"] = wf;
    row["cone"] = cone;
    if (wf != cone)
      fail(r, label + ": wave front set differs from the support cone");
  };

  nlohmann::json tab = nlohmann::json::array();
  for (size_t i = 0; i < orbits.size(); ++i) {
    nlohmann::json row{{"rep", orbits[i].rep()}};
    check(chis[i], "chi of orbit " + std::to_string(orbits[i].rep()), row);
    tab.push_back(row);
  }
  r.report["orbitCharacters"] = tab;

  std::mt19937_64 rng(0xc0de0000u);
  const int rounds = 50;
  nlohmann::json rnd = nlohmann::json::array();
  for (int it = 0; it < rounds; ++it) {
    std::vector<long long> c(orbits.size());
    for (auto& x : c) x = static_cast<long long>(rng() % 4);
    nlohmann::json row{{"round", it}};
    check(combination(A, chis, c), "random character " + std::to_string(it),
          row);
    rnd.push_back(row);
  }
  r.report["randomCharacters"] = rnd;
  return r;
}

SuiteResult suiteNmapBounds(const BuiltInstance& inst, int threads) {
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  SuiteResult r;
  r.report["suite"] = "nmap-bounds";
  r.report["algebra"] = algebraInfo(inst, 0);
  r.report["failures"] = nlohmann::json::array();
  const auto& F = *A.F;
  auto table = buildGggrTable(A, G, 0, threads);
  // partition label of each nilpotent coadjoint orbit
  std::vector<Partition> label;
  for (const auto& o : table.orbits)
    label.push_back(jordanType(A, A.etaB(0, A.indexToVec(0, o.rep()))));

  nlohmann::json tab = nlohmann::json::array();
  for (const auto& o : G.allOrbits(0, true)) {
    FqVec alpha = A.indexToVec(0, o.rep());
    Partition nm = nMapDual(A, alpha);
    auto wf = wavefront(A, table, chiOrbit(A, G, o, threads));
    bool exactHit = false;
    std::vector<std::string> wfParts;
    std::vector<Partition> wfLabels;
    for (uint64_t rep : wf) {
      const Partition& lam = label[table.indexOfRep(rep)];
      wfLabels.push_back(lam);
      wfParts.push_back(lam.str());
      if (lam == nm) exactHit = true;
      if (!lam.dominatedBy(nm))
        fail(r, "orbit " + std::to_string(o.rep()) + ": wave front orbit " +
                    std::to_string(rep) + " with partition " + lam.str() +
                    " escapes the N-map bound " + nm.str());
    }
    if (!exactHit)
      fail(r, "orbit " + std::to_string(o.rep()) +
                  ": no wave front orbit of partition exactly " + nm.str());

    // classify the semisimple split regular orbits: x_s with matDim
    // distinct eigenvalues in F_q and x_n = 0
    auto jp = jordan(A, A.etaB(0, alpha));
    bool splitRs = isZeroVec(jp.xn);
    if (splitRs) {
      FqMat S = A.toMatrix(0, jp.xs);
      int eigen = 0;
      for (long long lam = 0; lam < F.q(); ++lam) {
        FqMat D = S;
        for (int i = 0; i < D.rows; ++i)
          D.at(i, i) = F.sub(D.at(i, i), Fq(lam));
        if (rank(F, D) < D.rows) ++eigen;
      }
      splitRs = eigen == A.matDim;
    }
    if (splitRs) {
      // genericity: the dominance-maximal wave front partitions reduce to
      // the regular one
      Partition reg = Partition::fromParts({A.matDim});
      bool coneIsRegular = nm == reg;
      for (const auto& lam : wfLabels)
        if (!lam.dominatedBy(reg)) coneIsRegular = false;
      bool hasReg = false;
      for (const auto& lam : wfLabels) hasReg = hasReg || lam == reg;
      if (!(coneIsRegular && hasReg))
        fail(r, "split regular semisimple orbit " + std::to_string(o.rep()) +
                    ": cone is not the regular orbit");
    }
    tab.push_back({{"rep", o.rep()},
                   {"nmap", nm.str()},
                   {"wavefront", wfParts},
                   {"splitRegularSemisimple", splitRs}});
  }
  r.report["orbits"] = tab;
  return r;
}

SuiteResult suiteJordanLayer(int threads) {
  (void)threads;
  SuiteResult r;
  r.report["suite"] = "jordan-layer";
  r.report["failures"] = nlohmann::json::array();

  // Jordan decomposition, exhaustive over gl_2(F_3)
  {
    auto s = builtinSpec("gl2", 3);
    s.buildGroup = false;
    auto inst = build(s);
    const auto& A = *inst.algebra;
    const auto& F = *A.F;
    uint64_t checked = 0;
    for (uint64_t i = 0; i < A.pieceSize(0); ++i) {
      FqVec x = A.indexToVec(0, i);
      try {
        auto jp = jordan(A, x);
        if (vecAdd(F, jp.xs, jp.xn) != x)
          fail(r, "jordan: parts do not sum at point " + std::to_string(i));
        auto again = jordan(A, jp.xs);
        if (!isZeroVec(again.xn))
          fail(r, "jordan: x_s not semisimple at point " + std::to_string(i));
        ++checked;
      } catch (const GwfError& e) {
        fail(r, "jordan failed at point " + std::to_string(i) + ": " +
                    e.what());
      }
    }
    r.report["jordanChecked"] = checked;
  }

  // N-map orbit constancy on sampled orbits of gl_3(F_3)
  {
    auto inst = build(builtinSpec("gl3", 3));
    const auto& A = *inst.algebra;
    const auto& G = *inst.group;
    std::mt19937_64 rng(0x0331u);
    nlohmann::json sampled = nlohmann::json::array();
    std::vector<uint64_t> seen;
    int found = 0;
    while (found < 20) {
      uint64_t start = rng() % A.pieceSize(0);
      auto o = G.orbitOf(0, false, start);
      if (std::find(seen.begin(), seen.end(), o.rep()) != seen.end())
        continue;
      seen.push_back(o.rep());
      ++found;
      auto expect = nMap(A, A.indexToVec(0, o.rep()));
      size_t step = std::max<size_t>(1, o.size() / 50);
      for (size_t i = 0; i < o.size(); i += step)
        if (nMap(A, A.indexToVec(0, o.points[i])) != expect) {
          fail(r, "N-map not constant on the orbit of " +
                      std::to_string(o.rep()));
          break;
        }
      sampled.push_back({{"rep", o.rep()},
                         {"size", o.size()},
                         {"nmap", expect.str()}});
    }
    r.report["nmapOrbits"] = sampled;
  }

  // induction dimension identity for all Levi/partition pairs with n <= 4
  {
    uint64_t pairs = 0;
    std::function<void(int, int, std::vector<int>&)> comps =
        [&](int left, int maxPart, std::vector<int>& cur) {
          if (left == 0) {
            std::vector<std::vector<Partition>> choices;
            for (int b : cur) choices.push_back(allPartitions(b));
            std::vector<size_t> idx(cur.size(), 0);
            while (true) {
              LeviDatum L;
              int dimL = 0, dimOL = 0, n = 0;
              for (size_t i = 0; i < cur.size(); ++i) {
                L.blocks.push_back({cur[i], choices[i][idx[i]]});
                dimL += cur[i] * cur[i];
                dimOL += orbitDimGl(cur[i], choices[i][idx[i]]);
                n += cur[i];
              }
              ++pairs;
              if (orbitDimGl(n, lsInductionTypeA(L)) != dimOL + n * n - dimL)
                fail(r, "induction dimension identity fails for blocks at n=" +
                            std::to_string(n));
              size_t k = 0;
              while (k < idx.size() && ++idx[k] == choices[k].size())
                idx[k++] = 0;
              if (k == idx.size()) break;
            }
            return;
          }
          for (int b = std::min(left, maxPart); b >= 1; --b) {
            cur.push_back(b);
            comps(left - b, b, cur);
            cur.pop_back();
          }
        };
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> cur;
      comps(n, n, cur);
    }
    r.report["inductionPairs"] = pairs;
  }
  return r;
}

SuiteResult suiteBuilderValidation(int threads) {
  SuiteResult r;
  r.report["suite"] = "builder-validation";
  r.report["failures"] = nlohmann::json::array();
  nlohmann::json built = nlohmann::json::array();
  const std::vector<std::pair<const char*, int>> entries = {
      {"sl2", 5}, {"sl2", 7},    {"gl2", 3},     {"gl2", 5},
      {"gl3", 3}, {"gl2-z2", 5}, {"gl3-z3", 11}};
  for (auto [name, p] : entries) {
    try {
      auto s = builtinSpec(name, p);
      auto inst = build(s);
      inst.algebra->validate();
      built.push_back({{"name", name},
                       {"p", p},
                       {"groupOrder", inst.group->order()}});
    } catch (const GwfError& e) {
      fail(r, std::string(name) + "(p=" + std::to_string(p) + "): " +
                  e.what());
    }
  }
  r.report["builtins"] = built;

  // graded suites on Z/3-graded gl_3(F_11), degree 1
  auto inst = build(builtinSpec("gl3-z3", 11));
  for (auto* fn : {&suiteGggrProps, &suiteFtCounting, &suiteTripleCounts,
                   &suiteWavefrontCone}) {
    auto sub = (*fn)(inst, 1, threads);
    r.report["graded"].push_back(sub.report);
    if (!sub.pass) {
      r.pass = false;
      for (const auto& f : sub.report["failures"])
        r.report["failures"].push_back(f);
    }
  }
  return r;
}

std::vector<std::string> suiteNames() {
  return {"fourier",         "characters",   "decomposition",
          "gggr-props",      "ft-counting",  "triple-counts",
          "wavefront-cone",  "nmap-bounds",  "jordan-layer",
          "builder-validation"};
}

SuiteResult runSuite(const std::string& name, const BuiltInstance& inst,
                     int degree, int threads) {
  if (name == "fourier") return suiteFourier(inst, degree, threads);
  if (name == "characters") return suiteCharacters(inst, degree, threads);
  if (name == "decomposition") return suiteDecomposition(inst, degree, threads);
  if (name == "gggr-props") return suiteGggrProps(inst, degree, threads);
  if (name == "ft-counting") return suiteFtCounting(inst, degree, threads);
  if (name == "triple-counts") return suiteTripleCounts(inst, degree, threads);
  if (name == "wavefront-cone")
    return suiteWavefrontCone(inst, degree, threads);
  if (name == "nmap-bounds") return suiteNmapBounds(inst, threads);
  if (name == "jordan-layer") return suiteJordanLayer(threads);
  if (name == "builder-validation") return suiteBuilderValidation(threads);
  throw GwfError("unknown suite: " + name);
}

}  // namespace gwf
