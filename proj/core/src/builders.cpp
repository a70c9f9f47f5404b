#include "gwf/builders.hpp"

namespace gwf {

BuiltInstance build(const BuilderSpec& spec) {
  if (spec.family != "gl" && spec.family != "sl")
    throw GwfError("unknown family: " + spec.family);
  if (spec.n < 2) throw GwfError("n must be >= 2");
  int m = spec.gradingModulus;
  if (m < 1) throw GwfError("grading modulus must be >= 1");
  std::vector<int> w = spec.weights;
  if (w.empty()) w.assign(spec.n, 0);
  if (int(w.size()) != spec.n) throw GwfError("weight vector length mismatch");
  for (auto& x : w) x = ((x % m) + m) % m;

  auto A = std::make_shared<GradedAlgebra>();
  A->F = std::make_shared<FiniteField>(spec.p, spec.k, spec.modulus);
  const FiniteField& F = *A->F;
  if (spec.family == "sl" && spec.n % spec.p == 0)
    throw GwfError("degenerate form: trace form on sl_n needs p not dividing n");

  A->n = m;
  A->matDim = spec.n;
  A->dims.assign(m, 0);
  A->basisMat.assign(m, {});

  auto E = [&](int r, int c) {
    FqMat M(spec.n, spec.n);
    M.at(r, c) = 1;
    return M;
  };

  // degree-0 diagonal part first, then off-diagonal entries in lex order
  if (spec.family == "gl") {
    for (int j = 0; j < spec.n; ++j) A->basisMat[0].push_back(E(j, j));
  } else {
    for (int j = 0; j + 1 < spec.n; ++j) {
      FqMat M = E(j, j);
      M.at(j + 1, j + 1) = F.neg(1);
      A->basisMat[0].push_back(M);
    }
  }
  for (int j = 0; j < spec.n; ++j)
    for (int c = 0; c < spec.n; ++c) {
      if (j == c) continue;
      int d = ((w[j] - w[c]) % m + m) % m;
      A->basisMat[d].push_back(E(j, c));
    }
  for (int d = 0; d < m; ++d) A->dims[d] = int(A->basisMat[d].size());

  // structure constants from the matrix commutator
  A->brk.assign(m, {});
  for (int i = 0; i < m; ++i) {
    A->brk[i].resize(m);
    for (int j = 0; j < m; ++j) {
      int k = A->degMod(i + j);
      A->brk[i][j].assign(size_t(A->dims[i]) * A->dims[j] * A->dims[k], 0);
    }
  }
  // Gram matrices B(X, Y) = Tr(XY) pairing degree i with degree -i
  for (int i = 0; i < m; ++i) {
    int ni = A->dims[i], nj = A->dim(-i);
    FqMat g(ni, nj);
    for (int a = 0; a < ni; ++a)
      for (int b = 0; b < nj; ++b) {
        FqMat pr = matMul(F, A->basisMat[i][a], A->basisMat[A->degMod(-i)][b]);
        Fq tr = 0;
        for (int t = 0; t < spec.n; ++t) tr = F.add(tr, pr.at(t, t));
        g.at(a, b) = tr;
      }
    A->gram.push_back(g);
  }
  A->finalize();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int k = A->degMod(i + j);
      for (int a = 0; a < A->dims[i]; ++a)
        for (int b = 0; b < A->dims[j]; ++b) {
          FqMat comm = matSub(F, matMul(F, A->basisMat[i][a], A->basisMat[j][b]),
                              matMul(F, A->basisMat[j][b], A->basisMat[i][a]));
          FqVec coords = A->fromMatrix(k, comm);
          for (int c = 0; c < A->dims[k]; ++c)
            A->brk[i][j][(size_t(a) * A->dims[j] + b) * A->dims[k] + c] = coords[c];
        }
    }

  A->validate();

  // group generators: within-block transvections plus one primitive
  // diagonal per block (blocks = equal-weight index sets)
  std::vector<FqMat> defGens;
  for (int j = 0; j < spec.n; ++j)
    for (int c = 0; c < spec.n; ++c) {
      if (j == c || w[j] != w[c]) continue;
      FqMat t = FqMat::identity(F, spec.n);
      t.at(j, c) = 1;
      defGens.push_back(t);
    }
  std::vector<bool> blockSeen(m, false);
  for (int j = 0; j < spec.n; ++j) {
    if (blockSeen[w[j]]) continue;
    blockSeen[w[j]] = true;
    FqMat d = FqMat::identity(F, spec.n);
    d.at(j, j) = F.multiplicativeGenerator();
    defGens.push_back(d);
  }
  // distinct weight values can repeat block structure; one diagonal per
  // *block*, i.e. per first index of each weight value
  std::vector<GroupGen> gens;
  for (const auto& g : defGens) gens.push_back(generatorFromDefining(*A, g));
  GroupPtr G;
  if (spec.buildGroup) G = GroupAction::close(A, gens, spec.groupCap);

  nlohmann::json meta;
  meta["family"] = spec.family;
  meta["n"] = spec.n;
  meta["p"] = spec.p;
  meta["k"] = spec.k;
  meta["q"] = F.q();
  meta["modulus"] = F.modulus();
  meta["gradingModulus"] = m;
  meta["weights"] = w;
  if (G) meta["groupOrder"] = G->order();
  A->metadata = meta;

  BuiltInstance inst;
  inst.algebra = A;
  inst.group = G;
  inst.generators = std::move(gens);
  return inst;
}

BuilderSpec builtinSpec(const std::string& name, int p) {
  BuilderSpec s;
  s.p = p;
  if (name == "sl2") {
    s.family = "sl";
    s.n = 2;
  } else if (name == "gl2") {
    s.family = "gl";
    s.n = 2;
  } else if (name == "gl3") {
    s.family = "gl";
    s.n = 3;
  } else if (name == "gl2-z2") {
    s.family = "gl";
    s.n = 2;
    s.gradingModulus = 2;
    s.weights = {0, 1};
  } else if (name == "gl3-z3") {
    s.family = "gl";
    s.n = 3;
    s.gradingModulus = 3;
    s.weights = {0, 1, 2};
  } else {
    throw GwfError("unknown builtin: " + name);
  }
  return s;
}

}  // namespace gwf
