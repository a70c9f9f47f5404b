// gwf: build graded algebras, enumerate orbits, compute GGGR tables, wave
// front sets, cones and N maps, and run the named verification suites.
// Exit codes: 0 success, 2 a verified invariant failed, 1 usage/resource
// error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "gwf/suites.hpp"

using namespace gwf;
using Clock = std::chrono::steady_clock;

namespace {

struct CommonOpts {
  std::string builtin;
  int q = 5;
  std::string algebraFile, groupFile;
  int threads = int(std::thread::hardware_concurrency());
  uint64_t groupCap = 1000000;
  std::string outPath;
};

void addCommon(CLI::App* cmd, CommonOpts& o, bool needsGroup = true) {
  cmd->add_option("--builtin", o.builtin,
                  "builtin instance: sl2, gl2, gl3, gl2-z2, gl3-z3");
  cmd->add_option("--q", o.q, "field size for the builtin (a prime)");
  cmd->add_option("--algebra", o.algebraFile, "algebra description JSON");
  if (needsGroup)
    cmd->add_option("--group", o.groupFile, "group generator JSON");
  cmd->add_option("--threads", o.threads, "worker thread cap");
  cmd->add_option("--group-cap", o.groupCap, "group closure size cap");
  cmd->add_option("--out", o.outPath, "write the JSON report here");
}

BuiltInstance loadInstance(const CommonOpts& o, bool needsGroup = true) {
  if (!o.builtin.empty()) {
    auto s = builtinSpec(o.builtin, o.q);
    s.groupCap = o.groupCap;
    s.buildGroup = needsGroup && o.groupFile.empty();
    auto inst = build(s);
    if (needsGroup && !o.groupFile.empty()) {
      std::ifstream in(o.groupFile);
      if (!in) throw GwfError("cannot read group file " + o.groupFile);
      nlohmann::json j;
      in >> j;
      inst.generators = generatorsFromJson(*inst.algebra, j);
      inst.group = GroupAction::close(inst.algebra, inst.generators,
                                      o.groupCap);
    }
    return inst;
  }
  if (o.algebraFile.empty())
    throw CLI::ValidationError("need --builtin or --algebra");
  std::ifstream in(o.algebraFile);
  if (!in) throw GwfError("cannot read algebra file " + o.algebraFile);
  nlohmann::json j;
  in >> j;
  BuiltInstance inst;
  inst.algebra = GradedAlgebra::fromJson(j);
  inst.algebra->validate();
  if (needsGroup) {
    if (o.groupFile.empty())
      throw CLI::ValidationError("--algebra needs --group for this command");
    std::ifstream gin(o.groupFile);
    if (!gin) throw GwfError("cannot read group file " + o.groupFile);
    nlohmann::json gj;
    gin >> gj;
    inst.generators = generatorsFromJson(*inst.algebra, gj);
    inst.group =
        GroupAction::close(inst.algebra, inst.generators, o.groupCap);
  }
  return inst;
}

nlohmann::json baseReport(const std::string& command,
                          const BuiltInstance& inst) {
  nlohmann::json r;
  r["reportVersion"] = 1;
  r["command"] = command;
  r["algebra"] = inst.algebra->metadata;
  r["q"] = inst.algebra->F->q();
  r["n"] = inst.algebra->n;
  r["dims"] = inst.algebra->dims;
  if (inst.group) r["groupOrder"] = inst.group->order();
  return r;
}

int emit(const nlohmann::json& report, const std::string& outPath) {
  std::string text = report.dump(2) + "\n";
  if (outPath.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(outPath);
    if (!out) {
      std::cerr << "cannot write " << outPath << "\n";
      return 1;
    }
    out << text;
  }
  return 0;
}

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for graded invariant characters"};
  app.require_subcommand(1);

  CommonOpts o;
  int degree = 0;
  uint64_t orbitRep = 0;
  bool haveOrbit = false;
  std::string functionKind = "chi";
  std::string suiteName;

  auto* cmdBuild = app.add_subcommand(
      "build", "build a builtin instance and emit algebra + generators");
  addCommon(cmdBuild, o);

  auto* cmdOrbits =
      app.add_subcommand("orbits", "enumerate orbits on one graded piece");
  addCommon(cmdOrbits, o);
  cmdOrbits->add_option("--degree", degree, "graded degree (default 0)");

  auto* cmdGggr = app.add_subcommand(
      "gggr", "per-orbit character table for one degree");
  addCommon(cmdGggr, o);
  cmdGggr->add_option("--degree", degree, "graded degree (default 0)");

  auto* cmdWavefront =
      app.add_subcommand("wavefront", "wave front set of a character");
  addCommon(cmdWavefront, o);
  cmdWavefront->add_option("--degree", degree, "graded degree (default 0)");
  cmdWavefront->add_option("--function", functionKind,
                           "chi (orbit character) or one (constant 1)");
  cmdWavefront->add_option("--orbit", orbitRep,
                           "coadjoint orbit representative index");

  auto* cmdCone = app.add_subcommand(
      "cone", "rational asymptotic cone of a coadjoint orbit");
  addCommon(cmdCone, o);
  cmdCone->add_option("--degree", degree, "graded degree (default 0)");
  cmdCone->add_option("--orbit", orbitRep, "coadjoint orbit rep index")
      ->required();

  auto* cmdNmap = app.add_subcommand(
      "nmap", "Jordan data and N partition per ungraded orbit");
  addCommon(cmdNmap, o);

  auto* cmdVerify =
      app.add_subcommand("verify", "run a named verification suite");
  addCommon(cmdVerify, o);
  cmdVerify->add_option("--degree", degree, "graded degree (default 0)");
  cmdVerify->add_option("suite", suiteName, "suite name (or 'all')")
      ->required();

  CLI11_PARSE(app, argc, argv);
  haveOrbit = cmdWavefront->count("--orbit") > 0;
  if (o.threads < 1) o.threads = 1;

  try {
    auto t0 = Clock::now();

    if (*cmdBuild) {
      auto inst = loadInstance(o);
      auto report = baseReport("build", inst);
      report["payload"]["algebra"] = inst.algebra->toJson();
      report["payload"]["generators"] =
          generatorsToJson(*inst.algebra, inst.generators);
      report["timings"]["total"] = secondsSince(t0);
      return emit(report, o.outPath);
    }

    if (*cmdOrbits) {
      auto inst = loadInstance(o);
      auto report = baseReport("orbits", inst);
      for (bool dual : {false, true}) {
        nlohmann::json tab = nlohmann::json::array();
        for (const auto& orb : inst.group->allOrbits(degree, dual))
          tab.push_back({{"rep", orb.rep()}, {"size", orb.size()}});
        report["payload"][dual ? "coadjoint" : "adjoint"] = tab;
      }
      report["timings"]["total"] = secondsSince(t0);
      return emit(report, o.outPath);
    }

    if (*cmdGggr) {
      auto inst = loadInstance(o);
      const auto& A = *inst.algebra;
      auto table = buildGggrTable(A, *inst.group, degree, o.threads);
      auto report = baseReport("gggr", inst);
      nlohmann::json tab = nlohmann::json::array();
      for (size_t i = 0; i < table.orbits.size(); ++i) {
        uint64_t supp = 0;
        for (const auto& v : table.gamma[i].values)
          if (!v.isZero()) ++supp;
        auto d = isInvariantCharacter(A, *inst.group, table.gamma[i],
                                      o.threads);
        nlohmann::json mult = nlohmann::json::array();
        if (d.ok)
          for (auto [rep, c] : d.mult)
            mult.push_back({{"rep", rep}, {"mult", c}});
        tab.push_back({{"rep", table.orbits[i].rep()},
                       {"orbitSize", table.orbits[i].size()},
                       {"supportSize", supp},
                       {"isCharacter", d.ok},
                       {"multiplicities", mult}});
      }
      report["payload"]["gggr"] = tab;
      report["timings"]["total"] = secondsSince(t0);
      return emit(report, o.outPath);
    }

    if (*cmdWavefront) {
      auto inst = loadInstance(o);
      const auto& A = *inst.algebra;
      auto table = buildGggrTable(A, *inst.group, degree, o.threads);
      PieceFunction f;
      std::string label;
      if (functionKind == "one") {
        f = constantFunction(A, degree, false,
                             ScaledCyclotomic::integer(1, A.F->p(),
                                                       A.F->q()));
        label = "one";
      } else if (functionKind == "chi") {
        if (!haveOrbit)
          throw CLI::ValidationError("--function chi needs --orbit");
        f = chiOrbit(A, *inst.group,
                     inst.group->orbitOf(degree, true, orbitRep), o.threads);
        label = "chi@" + std::to_string(orbitRep);
      } else {
        throw CLI::ValidationError("unknown --function " + functionKind);
      }
      auto report = baseReport("wavefront", inst);
      report["payload"]["function"] = label;
      report["payload"]["wavefront"] = wavefront(A, table, f);
      report["timings"]["total"] = secondsSince(t0);
      return emit(report, o.outPath);
    }

    if (*cmdCone) {
      auto inst = loadInstance(o);
      const auto& A = *inst.algebra;
      auto table = buildGggrTable(A, *inst.group, degree, o.threads);
      auto orb = inst.group->orbitOf(degree, true, orbitRep);
      auto report = baseReport("cone", inst);
      report["payload"]["orbit"] = orb.rep();
      report["payload"]["cone"] = coneOfOrbits(A, table, {orb});
      report["timings"]["total"] = secondsSince(t0);
      return emit(report, o.outPath);
    }

    if (*cmdNmap) {
      auto inst = loadInstance(o);
      const auto& A = *inst.algebra;
      auto report = baseReport("nmap", inst);
      nlohmann::json tab = nlohmann::json::array();
      for (const auto& orb : inst.group->allOrbits(0, true)) {
        FqVec alpha = A.indexToVec(0, orb.rep());
        auto jp = jordan(A, A.etaB(0, alpha));
        auto L = leviDatum(A, A.etaB(0, alpha));
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& [sz, lam] : L.blocks)
          blocks.push_back({{"size", sz}, {"type", lam.str()}});
        tab.push_back({{"rep", orb.rep()},
                       {"orbitSize", orb.size()},
                       {"nilpotentType", jordanType(A, jp.xn).str()},
                       {"leviBlocks", blocks},
                       {"nmap", nMapDual(A, alpha).str()}});
      }
      report["payload"]["orbits"] = tab;
      report["timings"]["total"] = secondsSince(t0);
      return emit(report, o.outPath);
    }

    if (*cmdVerify) {
      std::vector<std::string> names;
      if (suiteName == "all")
        names = suiteNames();
      else
        names = {suiteName};
      bool standalone =
          names.size() == 1 &&
          (names[0] == "jordan-layer" || names[0] == "builder-validation");
      BuiltInstance inst;
      if (!standalone) inst = loadInstance(o);
      nlohmann::json report;
      report["reportVersion"] = 1;
      report["command"] = "verify";
      if (inst.algebra) {
        report["algebra"] = inst.algebra->metadata;
        if (inst.group) report["groupOrder"] = inst.group->order();
      }
      bool allPass = true;
      for (const auto& name : names) {
        BuiltInstance* use = &inst;
        BuiltInstance local;
        if (!inst.algebra &&
            !(name == "jordan-layer" || name == "builder-validation")) {
          CommonOpts fallback = o;
          if (fallback.builtin.empty()) fallback.builtin = "sl2";
          local = loadInstance(fallback);
          use = &local;
        }
        auto t1 = Clock::now();
        auto res = runSuite(name, *use, degree, o.threads);
        report["suites"].push_back(
            {{"name", name}, {"pass", res.pass}, {"report", res.report}});
        report["timings"][name] = secondsSince(t1);
        allPass = allPass && res.pass;
      }
      report["timings"]["total"] = secondsSince(t0);
      int rc = emit(report, o.outPath);
      if (rc != 0) return rc;
      return allPass ? 0 : 2;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const GwfError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
