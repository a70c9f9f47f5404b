#include "gwf/glie.hpp"

namespace gwf {

uint64_t GradedAlgebra::pieceSize(int d) const {
  uint64_t s = 1;
  for (int i = 0; i < dim(d); ++i) s *= uint64_t(F->q());
  return s;
}

FqVec GradedAlgebra::bracket(int degX, const FqVec& x, int degY, const FqVec& y) const {
  int i = degMod(degX), j = degMod(degY), k = degMod(degX + degY);
  const auto& T = brk[i][j];
  int dk = dims[k];
  FqVec out(dk, 0);
  const FiniteField& f = *F;
  for (int a = 0; a < dims[i]; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dims[j]; ++b) {
      if (y[b] == 0) continue;
      Fq c = f.mul(x[a], y[b]);
      const Fq* row = &T[(size_t(a) * dims[j] + b) * dk];
      for (int t = 0; t < dk; ++t)
        if (row[t] != 0) out[t] = f.add(out[t], f.mul(c, row[t]));
    }
  }
  return out;
}

FqVec GradedAlgebra::bracketBasis(int degX, int a, int degY, int b) const {
  int i = degMod(degX), j = degMod(degY), k = degMod(degX + degY);
  int dk = dims[k];
  const Fq* row = &brk[i][j][(size_t(a) * dims[j] + b) * dk];
  return FqVec(row, row + dk);
}

Fq GradedAlgebra::form(int degX, const FqVec& x, const FqVec& y) const {
  int i = degMod(degX);
  const FiniteField& f = *F;
  Fq s = 0;
  for (int a = 0; a < dims[i]; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim(-degX); ++b)
      s = f.add(s, f.mul(f.mul(x[a], gram[i].at(a, b)), y[b]));
  }
  return s;
}

Fq GradedAlgebra::dualPairing(const FqVec& alpha, const FqVec& v) const {
  const FiniteField& f = *F;
  Fq s = 0;
  for (size_t i = 0; i < alpha.size(); ++i) s = f.add(s, f.mul(alpha[i], v[i]));
  return s;
}

FqVec GradedAlgebra::etaB(int degAlpha, const FqVec& alpha) const {
  return matVec(*F, gramTInv[degMod(degAlpha)], alpha);
}

FqVec GradedAlgebra::etaBInv(int degW, const FqVec& w) const {
  return matVec(*F, transpose(gram[degMod(degW)]), w);
}

FqMat GradedAlgebra::toMatrix(int deg, const FqVec& x) const {
  if (!hasMatrixRealisation()) throw GwfError("no matrix realisation");
  FqMat m(matDim, matDim);
  int i = degMod(deg);
  for (int a = 0; a < dims[i]; ++a) {
    if (x[a] == 0) continue;
    for (size_t t = 0; t < m.a.size(); ++t)
      m.a[t] = F->add(m.a[t], F->mul(x[a], basisMat[i][a].a[t]));
  }
  return m;
}

FqVec GradedAlgebra::fromMatrix(int deg, const FqMat& m) const {
  if (!hasMatrixRealisation()) throw GwfError("no matrix realisation");
  int i = degMod(deg);
  // solve sum_a x_a basisMat[i][a] = m
  int nn = matDim * matDim;
  FqMat A(nn, dims[i]);
  for (int a = 0; a < dims[i]; ++a)
    for (int t = 0; t < nn; ++t) A.at(t, a) = basisMat[i][a].a[t];
  FqVec b(m.a.begin(), m.a.end());
  auto x = solve(*F, A, b);
  if (!x) throw GwfError("matrix not in the span of the piece");
  // verify exactly (solve() only guarantees consistency on pivot rows)
  if (!(toMatrix(deg, *x) == m)) throw GwfError("matrix not in the span of the piece");
  return *x;
}

bool GradedAlgebra::isNilpotent(int deg, const FqVec& x) const {
  if (!hasMatrixRealisation()) throw GwfError("no nilpotency oracle");
  FqMat m = toMatrix(deg, x);
  FqMat pw = m;
  for (int i = 1; i < matDim; ++i) pw = matMul(*F, pw, m);
  return isZeroMat(pw);
}

FqMat GradedAlgebra::adMatrix(int degX, const FqVec& x, int degS) const {
  int s = degMod(degS), t = degMod(degS + degX);
  FqMat M(dims[t], dims[s]);
  for (int b = 0; b < dims[s]; ++b) {
    FqVec eb(dims[s], 0);
    eb[b] = 1;
    FqVec col = bracket(degX, x, degS, eb);
    for (int r = 0; r < dims[t]; ++r) M.at(r, b) = col[r];
  }
  return M;
}

uint64_t GradedAlgebra::vecToIndex(int deg, const FqVec& x) const {
  uint64_t idx = 0;
  for (int i = dim(deg) - 1; i >= 0; --i) idx = idx * uint64_t(F->q()) + x[i];
  return idx;
}

FqVec GradedAlgebra::indexToVec(int deg, uint64_t idx) const {
  FqVec x(dim(deg));
  for (int i = 0; i < dim(deg); ++i) {
    x[i] = Fq(idx % uint64_t(F->q()));
    idx /= uint64_t(F->q());
  }
  return x;
}

void GradedAlgebra::validate() const {
  const FiniteField& f = *F;
  // antisymmetry on basis pairs (odd characteristic, so [x,x]=0 follows)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < dims[i]; ++a)
        for (int b = 0; b < dims[j]; ++b) {
          FqVec u = bracketBasis(i, a, j, b);
          FqVec v = bracketBasis(j, b, i, a);
          for (size_t t = 0; t < u.size(); ++t)
            if (u[t] != f.neg(v[t])) throw GwfError("antisymmetry fails on basis pair");
        }
  // Jacobi on basis triples
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int a = 0; a < dims[i]; ++a)
          for (int b = 0; b < dims[j]; ++b)
            for (int c = 0; c < dims[k]; ++c) {
              FqVec ec(dims[k], 0);
              ec[c] = 1;
              FqVec t1 = bracket(degMod(i + j), bracketBasis(i, a, j, b), k, ec);
              FqVec eb(dims[j], 0);
              eb[b] = 1;
              FqVec ea(dims[i], 0);
              ea[a] = 1;
              FqVec t2 = bracket(degMod(j + k), bracketBasis(j, b, k, c), i, ea);
              FqVec t3 = bracket(degMod(k + i), bracketBasis(k, c, i, a), j, eb);
              for (size_t t = 0; t < t1.size(); ++t)
                if (f.add(f.add(t1[t], t2[t]), t3[t]) != 0)
                  throw GwfError("Jacobi identity fails on basis triple");
            }
  // Gram matrices invertible and symmetric as an assembled form
  for (int i = 0; i < n; ++i) {
    if (gram[i].rows != dims[i] || gram[i].cols != dim(-i))
      throw GwfError("Gram matrix shape mismatch");
    if (gram[i].rows != gram[i].cols)
      throw GwfError("pieces of opposite degree have different dimensions");
    if (gram[i].rows == 0) continue;
    if (!inverse(f, gram[i])) throw GwfError("degenerate Gram matrix");
    // B(x,y) = B(y,x): gram[i] = gram[-i]^T
    FqMat t = transpose(gram[degMod(-i)]);
    if (!(t == gram[i])) throw GwfError("form is not symmetric");
  }
  // invariance B([z,x],y) + B(x,[z,y]) = 0 on basis triples
  for (int dz = 0; dz < n; ++dz)
    for (int dx = 0; dx < n; ++dx) {
      int dy = degMod(-(dz + dx));  // only pairing-compatible degrees matter
      for (int c = 0; c < dims[dz]; ++c)
        for (int a = 0; a < dims[dx]; ++a)
          for (int b = 0; b < dims[dy]; ++b) {
            FqVec ea(dims[dx], 0);
            ea[a] = 1;
            FqVec eb(dims[dy], 0);
            eb[b] = 1;
            FqVec zx = bracketBasis(dz, c, dx, a);
            FqVec zy = bracketBasis(dz, c, dy, b);
            Fq s = f.add(form(degMod(dz + dx), zx, eb), form(dx, ea, zy));
            if (s != 0) throw GwfError("form invariance fails on basis triple");
          }
    }
}

void GradedAlgebra::finalize() {
  gramTInv.clear();
  for (int i = 0; i < n; ++i) {
    FqMat t = transpose(gram[degMod(-i)]);
    auto inv = inverse(*F, t);
    if (!inv) throw GwfError("degenerate Gram matrix");
    gramTInv.push_back(*inv);
  }
}

nlohmann::json GradedAlgebra::toJson() const {
  nlohmann::json j;
  j["p"] = F->p();
  j["k"] = F->k();
  j["modulus"] = F->modulus();
  j["n"] = n;
  nlohmann::json jd = nlohmann::json::object();
  for (int i = 0; i < n; ++i) jd[std::to_string(i)] = dims[i];
  j["dims"] = jd;
  nlohmann::json triples = nlohmann::json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      int k = degMod(i + jj);
      for (int a = 0; a < dims[i]; ++a)
        for (int b = 0; b < dims[jj]; ++b) {
          FqVec v = bracketBasis(i, a, jj, b);
          if (isZeroVec(v)) continue;
          triples.push_back({i, jj, a, b, std::vector<int>(v.begin(), v.end())});
          (void)k;
        }
    }
  j["bracket"] = triples;
  nlohmann::json jf = nlohmann::json::object();
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> g(dims[i], std::vector<int>(dim(-i)));
    for (int a = 0; a < dims[i]; ++a)
      for (int b = 0; b < dim(-i); ++b) g[a][b] = gram[i].at(a, b);
    jf[std::to_string(i)] = g;
  }
  j["form"] = jf;
  if (hasMatrixRealisation()) {
    nlohmann::json jm;
    jm["size"] = matDim;
    nlohmann::json jb = nlohmann::json::object();
    for (int i = 0; i < n; ++i) {
      nlohmann::json lst = nlohmann::json::array();
      for (int a = 0; a < dims[i]; ++a) {
        std::vector<std::vector<int>> m(matDim, std::vector<int>(matDim));
        for (int r = 0; r < matDim; ++r)
          for (int c = 0; c < matDim; ++c) m[r][c] = basisMat[i][a].at(r, c);
        lst.push_back(m);
      }
      jb[std::to_string(i)] = lst;
    }
    jm["basis"] = jb;
    j["matrix"] = jm;
  }
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

std::shared_ptr<GradedAlgebra> GradedAlgebra::fromJson(const nlohmann::json& j) {
  auto A = std::make_shared<GradedAlgebra>();
  int p = j.at("p").get<int>();
  int k = j.value("k", 1);
  std::vector<int> modulus;
  if (j.contains("modulus")) modulus = j["modulus"].get<std::vector<int>>();
  A->F = std::make_shared<FiniteField>(p, k, modulus);
  A->n = j.at("n").get<int>();
  A->dims.assign(A->n, 0);
  for (auto& [key, val] : j.at("dims").items()) A->dims[std::stoi(key)] = val.get<int>();
  A->brk.assign(A->n, {});
  for (int i = 0; i < A->n; ++i) {
    A->brk[i].resize(A->n);
    for (int jj = 0; jj < A->n; ++jj) {
      int kk = A->degMod(i + jj);
      A->brk[i][jj].assign(size_t(A->dims[i]) * A->dims[jj] * A->dims[kk], 0);
    }
  }
  for (const auto& t : j.at("bracket")) {
    int i = t[0], jj = t[1], a = t[2], b = t[3];
    auto coeffs = t[4].get<std::vector<int>>();
    int kk = A->degMod(i + jj);
    for (int c = 0; c < A->dims[kk]; ++c)
      A->brk[i][jj][(size_t(a) * A->dims[jj] + b) * A->dims[kk] + c] = Fq(coeffs[c]);
  }
  for (int i = 0; i < A->n; ++i) {
    auto g = j.at("form").at(std::to_string(i)).get<std::vector<std::vector<int>>>();
    FqMat m(A->dims[i], A->dim(-i));
    for (int a = 0; a < m.rows; ++a)
      for (int b = 0; b < m.cols; ++b) m.at(a, b) = Fq(g[a][b]);
    A->gram.push_back(m);
  }
  if (j.contains("matrix")) {
    A->matDim = j["matrix"].at("size").get<int>();
    A->basisMat.resize(A->n);
    for (int i = 0; i < A->n; ++i) {
      auto lst = j["matrix"].at("basis").at(std::to_string(i));
      for (const auto& mj : lst) {
        auto m = mj.get<std::vector<std::vector<int>>>();
        FqMat M(A->matDim, A->matDim);
        for (int r = 0; r < A->matDim; ++r)
          for (int c = 0; c < A->matDim; ++c) M.at(r, c) = Fq(m[r][c]);
        A->basisMat[i].push_back(M);
      }
    }
  }
  if (j.contains("metadata")) A->metadata = j["metadata"];
  A->finalize();
  return A;
}

}  // namespace gwf
