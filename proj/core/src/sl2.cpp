#include "gwf/sl2.hpp"

#include <cstdlib>

namespace gwf {

namespace {

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

FqMat stackRows(const FqMat& top, const FqMat& bot) {
  FqMat s(top.rows + bot.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), s.a.begin());
  std::copy(bot.a.begin(), bot.a.end(), s.a.begin() + top.a.size());
  return s;
}

// Matrix of f -> [e,f] stacked over f -> [h,f] + 2f, for f in g_{-degE}.
FqMat fSystem(const GradedAlgebra& A, int degE, const FqVec& e,
              const FqVec& h) {
  const auto& F = *A.F;
  FqMat M1 = A.adMatrix(degE, e, -degE);
  FqMat Mh = A.adMatrix(0, h, -degE);
  for (int i = 0; i < Mh.rows; ++i) Mh.at(i, i) = F.add(Mh.at(i, i), F.fromInt(2));
  return stackRows(M1, Mh);
}

FqVec fRhs(const GradedAlgebra& A, int degE, const FqVec& h) {
  FqVec b(A.dim(0) + A.dim(-degE), 0);
  std::copy(h.begin(), h.end(), b.begin());
  return b;
}

}  // namespace

void checkTriple(const GradedAlgebra& A, const Sl2Triple& t) {
  const auto& F = *A.F;
  auto twice = [&](const FqVec& v) { return vecScale(F, F.fromInt(2), v); };
  if (A.bracket(0, t.h, t.degE, t.e) != twice(t.e))
    throw GwfError("sl2 triple: [h,e] != 2e");
  if (A.bracket(0, t.h, -t.degE, t.f) !=
      vecScale(F, F.fromInt(-2), t.f))
    throw GwfError("sl2 triple: [h,f] != -2f");
  if (A.bracket(t.degE, t.e, -t.degE, t.f) != t.h)
    throw GwfError("sl2 triple: [e,f] != h");
}

Sl2Triple completeTriple(const GradedAlgebra& A, int degE, const FqVec& e) {
  const auto& F = *A.F;
  Sl2Triple t;
  t.degE = degE;
  t.e = e;
  t.h.assign(A.dim(0), 0);
  t.f.assign(A.dim(-degE), 0);
  if (isZeroVec(e)) return t;
  if (A.hasMatrixRealisation() && !A.isNilpotent(degE, e))
    throw GwfError("completeTriple: e is not nilpotent");

  // h = [e,y]: solve [e,[e,y]] = -2e  (then [h,e] = 2e)
  FqMat M1 = A.adMatrix(degE, e, -degE);
  FqMat M0 = A.adMatrix(degE, e, 0);
  auto y = solve(F, matMul(F, M0, M1), vecScale(F, F.fromInt(-2), e));
  if (!y) throw GwfError("JM failure: no h in [e, g_{-r}] with [h,e] = 2e");
  t.h = matVec(F, M1, *y);

  auto f = solve(F, fSystem(A, degE, e, t.h), fRhs(A, degE, t.h));
  if (!f) throw GwfError("JM failure: no f with [e,f] = h and [h,f] = -2f");
  t.f = *f;
  checkTriple(A, t);
  return t;
}

int AdaptedGrading::weightDim(int sMod, int j) const {
  if (std::abs(j) > window) return 0;
  return int(weightBasis[sMod][j + window].size());
}

std::vector<FqVec> AdaptedGrading::basisAtMost(const GradedAlgebra& A, int deg,
                                               int maxWeight) const {
  std::vector<FqVec> out;
  int s = A.degMod(deg);
  for (int j = -window; j <= std::min(window, maxWeight); ++j)
    for (const auto& v : weightBasis[s][j + window]) out.push_back(v);
  return out;
}

int AdaptedGrading::dimAtMost(const GradedAlgebra& A, int deg,
                              int maxWeight) const {
  return int(basisAtMost(A, deg, maxWeight).size());
}

AdaptedGrading adaptedGrading(const GradedAlgebra& A, const Sl2Triple& t) {
  const auto& F = *A.F;
  const int p = F.p();
  // (weight, vector) pairs collected per degree
  std::vector<std::vector<std::pair<int, FqVec>>> got(A.n);

  if (t.isZero()) {
    for (int s = 0; s < A.n; ++s)
      for (int a = 0; a < A.dims[s]; ++a) {
        FqVec v(A.dims[s], 0);
        v[a] = 1;
        got[s].push_back({0, std::move(v)});
      }
  } else {
    // sl2-strings: primitive vectors are ker(ad e) split by ad(h)
    // eigenvalue; the length of the ad(f)-string gives the integer
    // highest weight, well-defined even when eigenvalues wrap mod p.
    for (int s = 0; s < A.n; ++s) {
      if (A.dims[s] == 0) continue;
      auto K = kernelBasis(F, A.adMatrix(t.degE, t.e, s));
      if (K.empty()) continue;
      FqMat adH = A.adMatrix(0, t.h, s);
      // C: columns are the kernel basis
      FqMat C(A.dims[s], int(K.size()));
      for (int c = 0; c < int(K.size()); ++c)
        for (int r = 0; r < A.dims[s]; ++r) C.at(r, c) = K[c][r];
      size_t found = 0;
      for (int ev = 0; ev < p; ++ev) {
        // primitive vectors of eigenvalue ev: kernel of (adH - ev) C
        FqMat D = adH;
        for (int i = 0; i < D.rows; ++i)
          D.at(i, i) = F.sub(D.at(i, i), F.fromInt(ev));
        auto coeffs = kernelBasis(F, matMul(F, D, C));
        int m = -1;
        for (const auto& c : coeffs) {
          ++found;
          FqVec v = matVec(F, C, c);
          // descend the string under ad(f)
          std::vector<FqVec> str{v};
          int deg = s;
          while (true) {
            FqVec nx = A.bracket(-t.degE, t.f, deg, str.back());
            deg -= t.degE;
            if (isZeroVec(nx)) break;
            str.push_back(std::move(nx));
          }
          int mm = int(str.size()) - 1;
          if (mm % p != ev)
            throw GwfError(
                "p too small for this triple: string length " +
                std::to_string(mm + 1) + " inconsistent with eigenvalue " +
                std::to_string(ev));
          if (m < 0)
            m = mm;
          else if (m != mm)
            throw GwfError(
                "p too small for this triple: ambiguous weight lift at "
                "eigenvalue " +
                std::to_string(ev));
          for (int k = 0; k <= mm; ++k)
            got[A.degMod(s - k * t.degE)].push_back({mm - 2 * k, str[k]});
        }
      }
      if (found != K.size())
        throw GwfError("p too small for this triple: ad(h) not split on "
                       "primitive vectors");
    }
  }

  int w = 0;
  for (const auto& per : got)
    for (const auto& [j, v] : per) w = std::max(w, std::abs(j));

  AdaptedGrading g;
  g.window = w;
  g.weightBasis.assign(A.n, std::vector<std::vector<FqVec>>(2 * w + 1));
  for (int s = 0; s < A.n; ++s)
    for (const auto& [j, v] : got[s]) g.weightBasis[s][j + w].push_back(v);

  // the strings must reassemble a basis of every piece
  for (int s = 0; s < A.n; ++s) {
    if (int(got[s].size()) != A.dims[s])
      throw GwfError("p too small for this triple: strings span " +
                     std::to_string(got[s].size()) + " of " +
                     std::to_string(A.dims[s]) + " dimensions in degree " +
                     std::to_string(s));
    FqMat M(int(got[s].size()), A.dims[s]);
    for (int r = 0; r < M.rows; ++r)
      for (int c = 0; c < M.cols; ++c) M.at(r, c) = got[s][r].second[c];
    if (rank(F, M) != A.dims[s])
      throw GwfError(
          "p too small for this triple: string vectors dependent in degree " +
          std::to_string(s));
  }

  // ad(h) acts on g_s(j) by j mod p
  for (int s = 0; s < A.n; ++s)
    for (const auto& [j, v] : got[s])
      if (A.bracket(0, t.h, s, v) != vecScale(F, F.fromInt(j), v))
        throw GwfError("adapted grading: ad(h) eigenvalue mismatch at weight " +
                       std::to_string(j));

  // bracket compatibility [g_s(j), g_t(k)] c g_{s+t}(j+k)
  std::vector<std::vector<Subspace>> spans(A.n);
  for (int s = 0; s < A.n; ++s)
    for (int j = -w; j <= w; ++j)
      spans[s].push_back(Subspace(F, A.dims[s], g.weightBasis[s][j + w]));
  for (int s = 0; s < A.n; ++s)
    for (int s2 = 0; s2 < A.n; ++s2)
      for (const auto& [j, u] : got[s])
        for (const auto& [k, v] : got[s2]) {
          FqVec b = A.bracket(s, u, s2, v);
          if (isZeroVec(b)) continue;
          int jk = j + k;
          if (std::abs(jk) > w ||
              !spans[A.degMod(s + s2)][jk + w].contains(F, b))
            throw GwfError(
                "adapted grading: bracket escapes weight space " +
                std::to_string(jk));
        }
  return g;
}

TripleCount allTriplesCount(const GradedAlgebra& A, int degE, const FqVec& e) {
  const auto& F = *A.F;
  if (isZeroVec(e)) throw GwfError("allTriplesCount: e must be nonzero");
  FqMat M0 = A.adMatrix(degE, e, 0);
  FqMat M1 = A.adMatrix(degE, e, -degE);

  TripleCount r;
  // expected = q^{dim u_0^e}, u_0^e = ker(ad e | g_0) n image(ad e | g_{-r})
  auto ker0 = kernelBasis(F, M0);
  std::vector<FqVec> gens;
  for (int c = 0; c < M1.cols; ++c) {
    FqVec col(M1.rows);
    for (int i = 0; i < M1.rows; ++i) col[i] = M1.at(i, c);
    gens.push_back(std::move(col));
  }
  Subspace im(F, A.dim(0), gens);
  FqMat both(int(ker0.size()) + im.dim(), A.dim(0));
  for (int i = 0; i < int(ker0.size()); ++i)
    for (int c = 0; c < A.dim(0); ++c) both.at(i, c) = ker0[i][c];
  for (int i = 0; i < im.dim(); ++i)
    for (int c = 0; c < A.dim(0); ++c)
      both.at(int(ker0.size()) + i, c) = im.reducedRows()[i][c];
  int dimInt = int(ker0.size()) + im.dim() - rank(F, both);
  r.expected = ipow(uint64_t(F.q()), dimInt);

  // enumerate the affine space of valid h, count f-solutions for each
  auto h0 = solve(F, M0, vecScale(F, F.fromInt(-2), e));
  if (h0) {
    AffineEnumerator H(F, *h0, ker0);
    for (uint64_t i = 0; i < H.size(); ++i) {
      FqVec h = H.point(i);
      FqMat S = fSystem(A, degE, e, h);
      if (solve(F, S, fRhs(A, degE, h)))
        r.count += ipow(uint64_t(F.q()), int(kernelBasis(F, S).size()));
    }
  }
  if (r.count != r.expected)
    throw GwfError("triple torsor count mismatch: got " +
                   std::to_string(r.count) + ", expected " +
                   std::to_string(r.expected));
  return r;
}

SliceSet sigmaSlice(const GradedAlgebra& A, int degAlpha, const FqVec& alpha,
                    Sl2Triple* usedTriple) {
  const auto& F = *A.F;
  int rdeg = A.degMod(degAlpha);
  FqVec w = A.etaB(rdeg, alpha);  // in g_{-r}
  Sl2Triple t = completeTriple(A, -rdeg, w);
  auto grading = adaptedGrading(A, t);
  std::vector<FqVec> dualVecs;
  for (const auto& v : grading.basisAtMost(A, -rdeg, 0))
    dualVecs.push_back(A.etaBInv(-rdeg, v));
  if (usedTriple) *usedTriple = t;
  return SliceSet{rdeg, true, alpha, Subspace(F, A.dim(rdeg), dualVecs)};
}

SliceSet slodowySlice(const GradedAlgebra& A, const Sl2Triple& t) {
  const auto& F = *A.F;
  auto ker = kernelBasis(F, A.adMatrix(-t.degE, t.f, t.degE));
  return SliceSet{A.degMod(t.degE), false, t.e,
                  Subspace(F, A.dim(t.degE), ker)};
}

}  // namespace gwf
