#include "gwf/gact.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace gwf {

static std::string elemKey(const std::vector<FqMat>& e, const FqMat& def) {
  std::string s;
  for (Fq v : def.a) {
    s.push_back(char(v & 0xff));
    s.push_back(char(v >> 8));
  }
  for (const auto& m : e)
    for (Fq v : m.a) {
      s.push_back(char(v & 0xff));
      s.push_back(char(v >> 8));
    }
  return s;
}

static void checkGenerator(const GradedAlgebra& A, const std::vector<FqMat>& g) {
  const FiniteField& F = *A.F;
  for (int d = 0; d < A.n; ++d) {
    if (g[d].rows != A.dims[d] || g[d].cols != A.dims[d])
      throw GwfError("generator matrix shape mismatch");
    if (!inverse(F, g[d])) throw GwfError("generator is not invertible");
  }
  // automorphism: g[x,y] = [gx, gy] on basis pairs
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j)
      for (int a = 0; a < A.dims[i]; ++a)
        for (int b = 0; b < A.dims[j]; ++b) {
          FqVec ea(A.dims[i], 0);
          ea[a] = 1;
          FqVec eb(A.dims[j], 0);
          eb[b] = 1;
          FqVec lhs = matVec(F, g[A.degMod(i + j)], A.bracketBasis(i, a, j, b));
          FqVec rhs = A.bracket(i, matVec(F, g[i], ea), j, matVec(F, g[j], eb));
          if (lhs != rhs) throw GwfError("generator is not a Lie algebra automorphism");
        }
  // preserves B: B(gx, gy) = B(x, y) on basis pairs
  for (int i = 0; i < A.n; ++i)
    for (int a = 0; a < A.dims[i]; ++a)
      for (int b = 0; b < A.dim(-i); ++b) {
        FqVec ea(A.dims[i], 0);
        ea[a] = 1;
        FqVec eb(A.dim(-i), 0);
        eb[b] = 1;
        Fq lhs = A.form(i, matVec(F, g[i], ea), matVec(F, g[A.degMod(-i)], eb));
        if (lhs != A.gram[i].at(a, b)) throw GwfError("generator does not preserve B");
      }
}

std::shared_ptr<GroupAction> GroupAction::close(AlgebraPtr A,
                                                std::vector<GroupGen> generators,
                                                uint64_t cap) {
  auto G = std::make_shared<GroupAction>();
  G->A_ = A;
  const FiniteField& F = *A->F;
  if (generators.empty()) throw GwfError("no generators given");
  bool hasDef = generators[0].def.rows > 0;
  for (const auto& g : generators) {
    if ((g.def.rows > 0) != hasDef)
      throw GwfError("mixed defining / action-only generators");
    checkGenerator(*A, g.act);
  }
  std::sort(generators.begin(), generators.end(),
            [](const GroupGen& x, const GroupGen& y) {
              return elemKey(x.act, x.def) < elemKey(y.act, y.def);
            });
  generators.erase(std::unique(generators.begin(), generators.end(),
                               [](const GroupGen& x, const GroupGen& y) {
                                 return x.act == y.act && x.def == y.def;
                               }),
                   generators.end());

  std::vector<FqMat> id;
  for (int d = 0; d < A->n; ++d) id.push_back(FqMat::identity(F, A->dims[d]));
  FqMat idDef = hasDef ? FqMat::identity(F, generators[0].def.rows) : FqMat();

  std::map<std::string, size_t> seen;
  G->elems_.push_back(id);
  G->defining_.push_back(idDef);
  seen[elemKey(id, idDef)] = 0;
  for (size_t head = 0; head < G->elems_.size(); ++head) {
    for (const auto& g : generators) {
      std::vector<FqMat> prod;
      prod.reserve(A->n);
      for (int d = 0; d < A->n; ++d)
        prod.push_back(matMul(F, G->elems_[head][d], g.act[d]));
      FqMat prodDef = hasDef ? matMul(F, G->defining_[head], g.def) : FqMat();
      auto key = elemKey(prod, prodDef);
      if (seen.emplace(key, G->elems_.size()).second) {
        G->elems_.push_back(std::move(prod));
        G->defining_.push_back(std::move(prodDef));
        if (G->elems_.size() > cap)
          throw GwfError("group too large: closure exceeded cap at " +
                         std::to_string(G->elems_.size()) + " elements");
      }
    }
  }

  G->dual_.reserve(G->elems_.size());
  G->inv_.assign(G->elems_.size(), 0);
  for (size_t e = 0; e < G->elems_.size(); ++e) {
    std::vector<FqMat> dm;
    std::vector<FqMat> invm;
    for (int d = 0; d < A->n; ++d) {
      auto mi = inverse(F, G->elems_[e][d]);
      invm.push_back(*mi);
      dm.push_back(transpose(*mi));
    }
    G->dual_.push_back(std::move(dm));
    FqMat invDef = hasDef ? *inverse(F, G->defining_[e]) : FqMat();
    auto it = seen.find(elemKey(invm, invDef));
    if (it == seen.end()) throw GwfError("closure not closed under inverses");
    G->inv_[e] = it->second;
  }
  return G;
}

Orbit GroupAction::orbitOf(int deg, bool dual, uint64_t startIdx) const {
  uint64_t size = A_->pieceSize(deg);
  if (size > (uint64_t(1) << 32)) throw GwfError("piece too large for orbit bitmap");
  Orbit o;
  o.degree = A_->degMod(deg);
  o.dual = dual;
  std::vector<uint64_t> stack = {startIdx};
  std::vector<bool> inOrbit(size, false);
  inOrbit[startIdx] = true;
  while (!stack.empty()) {
    uint64_t idx = stack.back();
    stack.pop_back();
    o.points.push_back(idx);
    FqVec x = A_->indexToVec(deg, idx);
    for (size_t e = 0; e < elems_.size(); ++e) {
      FqVec y = dual ? actDual(e, deg, x) : act(e, deg, x);
      uint64_t yi = A_->vecToIndex(deg, y);
      if (!inOrbit[yi]) {
        inOrbit[yi] = true;
        stack.push_back(yi);
      }
    }
  }
  std::sort(o.points.begin(), o.points.end());
  return o;
}

std::vector<Orbit> GroupAction::orbitsOfSet(int deg, bool dual,
                                            const std::vector<uint64_t>& pts) const {
  std::vector<bool> member;
  uint64_t size = A_->pieceSize(deg);
  member.assign(size, false);
  for (auto p : pts) member[p] = true;
  std::vector<bool> visited(size, false);
  std::vector<Orbit> orbits;
  for (auto p : pts) {
    if (visited[p]) continue;
    Orbit o = orbitOf(deg, dual, p);
    for (auto x : o.points) {
      if (!member[x]) throw GwfError("orbit escapes the given invariant set");
      visited[x] = true;
    }
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.rep() < b.rep(); });
  return orbits;
}

std::vector<Orbit> GroupAction::nilpotentOrbits(int deg) const {
  std::vector<uint64_t> pts;
  for (uint64_t i = 0; i < A_->pieceSize(deg); ++i)
    if (A_->isNilpotent(deg, A_->indexToVec(deg, i))) pts.push_back(i);
  return orbitsOfSet(deg, false, pts);
}

std::vector<Orbit> GroupAction::nilpotentCoadjointOrbits(int deg) const {
  std::vector<uint64_t> pts;
  for (uint64_t i = 0; i < A_->pieceSize(deg); ++i) {
    FqVec alpha = A_->indexToVec(deg, i);
    if (A_->isNilpotent(-deg, A_->etaB(deg, alpha))) pts.push_back(i);
  }
  return orbitsOfSet(deg, true, pts);
}

std::vector<Orbit> GroupAction::allOrbits(int deg, bool dual) const {
  std::vector<uint64_t> pts(A_->pieceSize(deg));
  for (uint64_t i = 0; i < pts.size(); ++i) pts[i] = i;
  return orbitsOfSet(deg, dual, pts);
}

Orbit GroupAction::negatedOrbit(const Orbit& o) const {
  FqVec x = A_->indexToVec(o.degree, o.rep());
  for (auto& v : x) v = A_->F->neg(v);
  return orbitOf(o.degree, o.dual, A_->vecToIndex(o.degree, x));
}

GroupGen generatorFromDefining(const GradedAlgebra& A, const FqMat& g) {
  if (!A.hasMatrixRealisation()) throw GwfError("no matrix realisation");
  const FiniteField& F = *A.F;
  auto gi = inverse(F, g);
  if (!gi) throw GwfError("defining generator is not invertible");
  GroupGen out;
  out.def = g;
  for (int d = 0; d < A.n; ++d) {
    FqMat M(A.dims[d], A.dims[d]);
    for (int a = 0; a < A.dims[d]; ++a) {
      FqMat img = matMul(F, matMul(F, g, A.basisMat[d][a]), *gi);
      FqVec col = A.fromMatrix(d, img);  // throws if conjugation leaves the piece
      for (int r = 0; r < A.dims[d]; ++r) M.at(r, a) = col[r];
    }
    out.act.push_back(M);
  }
  return out;
}

std::vector<GroupGen> generatorsFromJson(const GradedAlgebra& A,
                                         const nlohmann::json& j) {
  std::vector<GroupGen> gens;
  if (j.is_object() && j.contains("defining")) {
    for (const auto& mj : j.at("defining")) {
      auto m = mj.get<std::vector<std::vector<long long>>>();
      FqMat M(int(m.size()), int(m.size()));
      for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) M.at(r, c) = A.F->fromInt(m[r][c]);
      gens.push_back(generatorFromDefining(A, M));
    }
    return gens;
  }
  const auto& lst = j.is_object() ? j.at("generators") : j;
  for (const auto& ej : lst) {
    GroupGen e;
    for (int d = 0; d < A.n; ++d) {
      auto m = ej.at(d).get<std::vector<std::vector<long long>>>();
      FqMat M(A.dims[d], A.dims[d]);
      for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) M.at(r, c) = A.F->fromInt(m[r][c]);
      e.act.push_back(M);
    }
    gens.push_back(std::move(e));
  }
  return gens;
}

nlohmann::json generatorsToJson(const GradedAlgebra& A,
                                const std::vector<GroupGen>& gens) {
  if (!gens.empty() && gens[0].def.rows > 0) {
    nlohmann::json lst = nlohmann::json::array();
    for (const auto& e : gens) {
      std::vector<std::vector<int>> m(e.def.rows, std::vector<int>(e.def.cols));
      for (int r = 0; r < e.def.rows; ++r)
        for (int c = 0; c < e.def.cols; ++c) m[r][c] = e.def.at(r, c);
      lst.push_back(m);
    }
    return nlohmann::json{{"defining", lst}};
  }
  nlohmann::json lst = nlohmann::json::array();
  for (const auto& e : gens) {
    nlohmann::json ej = nlohmann::json::array();
    for (int d = 0; d < A.n; ++d) {
      std::vector<std::vector<int>> m(A.dims[d], std::vector<int>(A.dims[d]));
      for (int r = 0; r < A.dims[d]; ++r)
        for (int c = 0; c < A.dims[d]; ++c) m[r][c] = e.act[d].at(r, c);
      ej.push_back(m);
    }
    lst.push_back(ej);
  }
  return nlohmann::json{{"generators", lst}};
}

}  // namespace gwf
