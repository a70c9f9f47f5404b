#include "gwf/ungraded.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gwf {

namespace {

void requireUngradedMatrix(const GradedAlgebra& A) {
  if (A.n != 1 || !A.hasMatrixRealisation())
    throw GwfError("type A only: need an ungraded matrix-realised algebra");
}

// ---- dense polynomial arithmetic over F_q, low degree first -------------

using PolyQ = std::vector<Fq>;

PolyQ ptrim(PolyQ a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int pdeg(const PolyQ& a) { return int(a.size()) - 1; }  // -1 for zero

PolyQ padd(const FiniteField& F, const PolyQ& a, const PolyQ& b) {
  PolyQ c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    Fq x = i < a.size() ? a[i] : Fq(0), y = i < b.size() ? b[i] : Fq(0);
    c[i] = F.add(x, y);
  }
  return ptrim(c);
}

PolyQ pmul(const FiniteField& F, const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  return ptrim(c);
}

PolyQ pscale(const FiniteField& F, Fq s, const PolyQ& a) {
  PolyQ c = a;
  for (auto& x : c) x = F.mul(s, x);
  return ptrim(c);
}

PolyQ pderiv(const FiniteField& F, const PolyQ& a) {
  PolyQ c;
  for (size_t i = 1; i < a.size(); ++i)
    c.push_back(F.mul(F.fromInt(static_cast<long long>(i)), a[i]));
  return ptrim(c);
}

// quotient and remainder by a nonzero divisor
std::pair<PolyQ, PolyQ> pdivmod(const FiniteField& F, PolyQ a, const PolyQ& b) {
  if (b.empty()) throw GwfError("polynomial division by zero");
  PolyQ q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  Fq lead = F.inv(b.back());
  while (pdeg(a) >= pdeg(b)) {
    int shift = pdeg(a) - pdeg(b);
    Fq c = F.mul(a.back(), lead);
    q[shift] = F.add(q[shift], c);
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = F.sub(a[i + shift], F.mul(c, b[i]));
    a = ptrim(a);
  }
  return {ptrim(q), a};
}

bool pdivides(const FiniteField& F, const PolyQ& b, const PolyQ& a) {
  return pdivmod(F, a, b).second.empty();
}

PolyQ pmonic(const FiniteField& F, const PolyQ& a) {
  if (a.empty()) return a;
  return pscale(F, F.inv(a.back()), a);
}

PolyQ pgcd(const FiniteField& F, PolyQ a, PolyQ b) {
  while (!b.empty()) {
    auto r = pdivmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(F, a);
}

// squarefree part, handling f' = 0 via p-th root descent f(t) = g(t^p)
PolyQ squarefreePart(const FiniteField& F, PolyQ f) {
  f = pmonic(F, f);
  if (pdeg(f) <= 1) return f;
  PolyQ d = pderiv(F, f);
  if (d.empty()) {
    PolyQ g((f.size() - 1) / F.p() + 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      if (i % F.p() != 0)
        throw GwfError("squarefree part: derivative zero but not a p-th power");
      g[i / F.p()] = F.pthRoot(f[i]);
    }
    return squarefreePart(F, ptrim(g));
  }
  return pdivmod(F, f, pgcd(F, f, d)).first;
}

// irreducible factorization by trial division in (degree, lex) order
std::vector<std::pair<PolyQ, int>> factorize(const FiniteField& F, PolyQ f) {
  f = pmonic(F, f);
  std::vector<std::pair<PolyQ, int>> out;
  const uint64_t q = uint64_t(F.q());
  for (int d = 1; 2 * d <= pdeg(f); ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (uint64_t c = 0; c < count && pdeg(f) >= d; ++c) {
      PolyQ cand(d + 1, 0);
      cand[d] = 1;
      uint64_t t = c;
      for (int i = 0; i < d; ++i) {
        cand[i] = Fq(t % q);
        t /= q;
      }
      int mult = 0;
      while (pdeg(f) >= d && pdivides(F, cand, f)) {
        f = pdivmod(F, f, cand).first;
        ++mult;
      }
      if (mult) out.push_back({cand, mult});
    }
  }
  if (pdeg(f) >= 1) out.push_back({f, 1});
  return out;
}

// ---- matrix helpers ------------------------------------------------------

PolyQ charPoly(const FiniteField& F, const FqMat& X) {
  // det(tI - X) by Laplace expansion over polynomial entries (n <= 6)
  int n = X.rows;
  std::vector<std::vector<PolyQ>> M(n, std::vector<PolyQ>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PolyQ e;
      if (X.at(i, j) != 0) e.push_back(F.neg(X.at(i, j)));
      if (i == j) {
        e.resize(2, 0);
        e[1] = 1;
      }
      M[i][j] = ptrim(e);
    }
  std::function<PolyQ(int, uint32_t)> det = [&](int row,
                                                uint32_t cols) -> PolyQ {
    if (row == n) return PolyQ{1};
    PolyQ acc;
    int sign = 0;
    for (int j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      if (!M[row][j].empty()) {
        PolyQ term = pmul(F, M[row][j], det(row + 1, cols & ~(1u << j)));
        if (sign % 2) term = pscale(F, F.neg(1), term);
        acc = padd(F, acc, term);
      }
      ++sign;
    }
    return acc;
  };
  return det(0, (1u << n) - 1);
}

FqMat evalAt(const FiniteField& F, const PolyQ& f, const FqMat& X) {
  int n = X.rows;
  FqMat acc(n, n);
  for (int i = int(f.size()) - 1; i >= 0; --i) {
    acc = matMul(F, acc, X);
    for (int d = 0; d < n; ++d) acc.at(d, d) = F.add(acc.at(d, d), f[size_t(i)]);
  }
  return acc;
}

FqMat matPow(const FiniteField& F, FqMat X, int e) {
  FqMat r = FqMat::identity(F, X.rows);
  while (e-- > 0) r = matMul(F, r, X);
  return r;
}

Partition nilpotentTypeOfMatrix(const FiniteField& F, const FqMat& M) {
  int n = M.rows;
  std::vector<int> kdim{0};
  FqMat P = FqMat::identity(F, n);
  for (int k = 1; k <= n; ++k) {
    P = matMul(F, P, M);
    kdim.push_back(n - rank(F, P));
  }
  if (kdim.back() != n) throw GwfError("jordanType: matrix is not nilpotent");
  // number of blocks of size >= k is kdim[k] - kdim[k-1]
  std::vector<int> parts;
  for (int k = 1; k <= n; ++k) {
    int geK = kdim[k] - kdim[k - 1];
    int geK1 = k < n ? kdim[k + 1] - kdim[k] : 0;
    for (int i = 0; i < geK - geK1; ++i) parts.push_back(k);
  }
  return Partition::fromParts(parts);
}

// matrix of Y restricted to the column span of basis (an invariant subspace)
FqMat restrictTo(const FiniteField& F, const FqMat& Y,
                 const std::vector<FqVec>& basis) {
  int m = int(basis.size()), n = Y.rows;
  FqMat B(n, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) B.at(i, j) = basis[j][i];
  FqMat R(m, m);
  for (int j = 0; j < m; ++j) {
    FqVec img = matVec(F, Y, basis[j]);
    auto coords = solve(F, B, img);
    if (!coords) throw GwfError("restrictTo: subspace not invariant");
    for (int i = 0; i < m; ++i) R.at(i, j) = (*coords)[i];
  }
  return R;
}

}  // namespace

// ---- Partition -----------------------------------------------------------

int Partition::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Partition::dominatedBy(const Partition& o) const {
  if (sum() != o.sum()) return false;
  int a = 0, b = 0;
  size_t n = std::max(parts.size(), o.parts.size());
  for (size_t i = 0; i < n; ++i) {
    a += i < parts.size() ? parts[i] : 0;
    b += i < o.parts.size() ? o.parts[i] : 0;
    if (a > b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i)
    s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

Partition Partition::fromParts(std::vector<int> p) {
  std::sort(p.begin(), p.end(), std::greater<int>());
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (int x : p)
    if (x < 0) throw GwfError("negative partition part");
  return Partition{std::move(p)};
}

std::vector<Partition> allPartitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxPart) {
    if (left == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(left, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> dominanceIdeal(const Partition& lam) {
  std::vector<Partition> out;
  for (const auto& mu : allPartitions(lam.sum()))
    if (mu.dominatedBy(lam)) out.push_back(mu);
  return out;
}

int orbitDimGl(int n, const Partition& lam) {
  // n^2 - sum of squares of the conjugate partition
  int s = 0;
  for (int k = 1; k <= n; ++k) {
    int conj = 0;
    for (int p : lam.parts) conj += p >= k ? 1 : 0;
    s += conj * conj;
  }
  return n * n - s;
}

// ---- Jordan / Levi / N-map ----------------------------------------------

Partition jordanType(const GradedAlgebra& A, const FqVec& x) {
  requireUngradedMatrix(A);
  return nilpotentTypeOfMatrix(*A.F, A.toMatrix(0, x));
}

JordanPair jordan(const GradedAlgebra& A, const FqVec& x) {
  requireUngradedMatrix(A);
  const auto& F = *A.F;
  FqMat X = A.toMatrix(0, x);
  PolyQ r = squarefreePart(F, charPoly(F, X));
  PolyQ rp = pderiv(F, r);
  FqMat y = X;
  for (int it = 0;; ++it) {
    FqMat R = evalAt(F, r, y);
    if (isZeroMat(R)) break;
    if (it > 30) throw GwfError("jordan: Newton iteration failed to converge");
    auto inv = inverse(F, evalAt(F, rp, y));
    if (!inv)
      throw GwfError("jordan: r' not invertible (inseparable input?)");
    y = matSub(F, y, matMul(F, R, *inv));
  }
  JordanPair jp;
  jp.xs = A.fromMatrix(0, y);
  jp.xn = vecSub(F, x, jp.xs);
  // invariants: commuting, x_n nilpotent, x_s semisimple (r(x_s) = 0 with
  // r squarefree)
  if (A.bracket(0, jp.xs, 0, jp.xn) != FqVec(A.dims[0], 0))
    throw GwfError("jordan: parts do not commute");
  if (!A.isNilpotent(0, jp.xn)) throw GwfError("jordan: x_n not nilpotent");
  return jp;
}

LeviDatum leviDatum(const GradedAlgebra& A, const FqVec& x) {
  requireUngradedMatrix(A);
  const auto& F = *A.F;
  auto jp = jordan(A, x);
  FqMat S = A.toMatrix(0, jp.xs), Nn = A.toMatrix(0, jp.xn);
  int n = S.rows;
  LeviDatum L;
  for (const auto& [pi, mult] : factorize(F, charPoly(F, S))) {
    int d = pdeg(pi);
    auto basis = kernelBasis(F, matPow(F, evalAt(F, pi, S), n));
    if (int(basis.size()) != d * mult)
      throw GwfError("leviDatum: generalized eigenspace dimension mismatch");
    Partition lamFq = nilpotentTypeOfMatrix(F, restrictTo(F, Nn, basis));
    // over the degree-d extension every geometric Jordan block of size s
    // appears d times in the F_q type
    std::map<int, int> cnt;
    for (int p : lamFq.parts) ++cnt[p];
    std::vector<int> mu;
    for (auto [s, c] : cnt) {
      if (c % d != 0)
        throw GwfError("leviDatum: F_q Jordan type not divisible by the "
                       "factor degree");
      for (int i = 0; i < c / d; ++i) mu.push_back(s);
    }
    for (int i = 0; i < d; ++i) L.blocks.push_back({mult, Partition::fromParts(mu)});
  }
  // deterministic block order
  std::sort(L.blocks.begin(), L.blocks.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.first, a.second.parts) >
                     std::tie(b.first, b.second.parts);
            });
  return L;
}

Partition lsInductionTypeA(const LeviDatum& L) {
  size_t len = 0;
  for (const auto& [ni, lam] : L.blocks)
    len = std::max(len, lam.parts.size());
  std::vector<int> parts(len, 0);
  for (const auto& [ni, lam] : L.blocks)
    for (size_t j = 0; j < lam.parts.size(); ++j) parts[j] += lam.parts[j];
  return Partition::fromParts(parts);
}

Partition nMap(const GradedAlgebra& A, const FqVec& x) {
  return lsInductionTypeA(leviDatum(A, x));
}

Partition nMapDual(const GradedAlgebra& A, const FqVec& alpha) {
  return nMap(A, A.etaB(0, alpha));
}

std::vector<Partition> geometricConeTypeA(const GradedAlgebra& A,
                                          const FqVec& x) {
  return dominanceIdeal(nMap(A, x));
}

std::vector<Sl2Triple> thetaX(const GradedAlgebra& A, const FqVec& x) {
  requireUngradedMatrix(A);
  const auto& F = *A.F;
  if (A.pieceSize(0) > 10000) throw GwfError("thetaX: piece too large");
  Partition target = nMap(A, x);
  std::vector<Sl2Triple> out;
  bool zeroTarget = target.parts.empty() ||
                    *std::max_element(target.parts.begin(),
                                      target.parts.end()) == 1;
  for (uint64_t ei = 0; ei < A.pieceSize(0); ++ei) {
    FqVec e = A.indexToVec(0, ei);
    if (!A.isNilpotent(0, e)) continue;
    if (isZeroVec(e)) {
      // the zero triple qualifies exactly when N(x) is the zero orbit;
      // its Slodowy slice is the whole space
      if (zeroTarget) {
        Sl2Triple t;
        t.degE = 0;
        t.e = t.h = t.f = FqVec(A.dims[0], 0);
        out.push_back(t);
      }
      continue;
    }
    if (jordanType(A, e) != target) continue;
    // h solutions of [h,e] = 2e, then f solutions of the stacked system
    FqMat M0 = A.adMatrix(0, e, 0);
    auto h0 = solve(F, M0, vecScale(F, F.fromInt(-2), e));
    if (!h0) continue;
    AffineEnumerator H(F, *h0, kernelBasis(F, M0));
    for (uint64_t hi = 0; hi < H.size(); ++hi) {
      FqVec h = H.point(hi);
      // [e,f] = h stacked with [h,f] = -2f
      FqMat Mh = A.adMatrix(0, h, 0);
      for (int i = 0; i < Mh.rows; ++i)
        Mh.at(i, i) = F.add(Mh.at(i, i), F.fromInt(2));
      FqMat S(2 * A.dims[0], A.dims[0]);
      for (int i = 0; i < A.dims[0]; ++i)
        for (int j = 0; j < A.dims[0]; ++j) {
          S.at(i, j) = M0.at(i, j);
          S.at(A.dims[0] + i, j) = Mh.at(i, j);
        }
      FqVec b(2 * A.dims[0], 0);
      std::copy(h.begin(), h.end(), b.begin());
      auto f0 = solve(F, S, b);
      if (!f0) continue;
      AffineEnumerator Fs(F, *f0, kernelBasis(F, S));
      for (uint64_t fi = 0; fi < Fs.size(); ++fi) {
        Sl2Triple t;
        t.degE = 0;
        t.e = e;
        t.h = h;
        t.f = Fs.point(fi);
        // x in e + c(f)
        if (isZeroVec(A.bracket(0, t.f, 0, vecSub(F, x, e))))
          out.push_back(t);
      }
    }
  }
  if (out.empty()) throw GwfError("thetaX: empty (violates non-emptiness)");
  return out;
}

}  // namespace gwf
