#include "gwf/gggr.hpp"

#include "gwf/parallel.hpp"

namespace gwf {

int GggrTable::indexOfRep(uint64_t rep) const {
  for (size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].rep() == rep) return int(i);
  throw GwfError("orbit representative not in GGGR table");
}

namespace {

// Canonical triple and grading data for the orbit representative alpha.
struct OrbitGradingData {
  Sl2Triple triple;
  AdaptedGrading grading;
  FqVec alpha;
};

OrbitGradingData gradingFor(const GradedAlgebra& A, const Orbit& Ostar) {
  if (!Ostar.dual) throw GwfError("expected a coadjoint orbit");
  OrbitGradingData d;
  d.alpha = A.indexToVec(Ostar.degree, Ostar.rep());
  d.triple = completeTriple(A, -Ostar.degree, A.etaB(Ostar.degree, d.alpha));
  d.grading = adaptedGrading(A, d.triple);
  return d;
}

}  // namespace

PieceFunction gammaDirect(const GradedAlgebra& A, const GroupAction& G,
                          const Orbit& Ostar, int threads) {
  const auto& F = *A.F;
  const int r = Ostar.degree;
  const int Nr = A.dim(r);
  auto d = gradingFor(A, Ostar);

  // points of g_r(<= -1) and their character values chi(-alpha(w))
  AffineEnumerator V(F, FqVec(Nr, 0), d.grading.basisAtMost(A, r, -1));
  std::vector<FqVec> pts(V.size());
  std::vector<ScaledCyclotomic> chiVal(V.size());
  for (uint64_t i = 0; i < V.size(); ++i) {
    pts[i] = V.point(i);
    chiVal[i] = chiOf(F, F.neg(A.dualPairing(d.alpha, pts[i])));
  }

  const uint64_t total = A.pieceSize(r);
  auto zero = ScaledCyclotomic::zero(F.p(), F.q());
  std::vector<std::vector<ScaledCyclotomic>> acc(
      std::max(threads, 1), std::vector<ScaledCyclotomic>(total, zero));
  parallelChunks(G.order(), threads, [&](int w, uint64_t lo, uint64_t hi) {
    auto& tab = acc[w];
    for (uint64_t g = lo; g < hi; ++g) {
      size_t gi = G.inverseOf(g);
      for (uint64_t i = 0; i < pts.size(); ++i)
        tab[A.vecToIndex(r, G.act(gi, r, pts[i]))] += chiVal[i];
    }
  });

  PieceFunction out = zeroFunction(A, r, false);
  for (auto& tab : acc)
    for (uint64_t i = 0; i < total; ++i) out.values[i] += tab[i];
  for (auto& v : out.values) v = v.shiftHalfPower(2 * Nr);  // q^{N_r}
  return out;
}

GggrTable buildGggrTable(const GradedAlgebra& A, const GroupAction& G,
                         int degree, int threads) {
  GggrTable t;
  t.degree = A.degMod(degree);
  t.orbits = G.nilpotentCoadjointOrbits(t.degree);
  for (const auto& o : t.orbits) {
    Sl2Triple used;
    t.slices.push_back(sigmaSlice(A, t.degree, A.indexToVec(t.degree, o.rep()),
                                  &used));
    t.triples.push_back(used);
    auto grading = adaptedGrading(A, used);
    t.dimLeNeg1.push_back(
        int(grading.basisAtMost(A, t.degree, -1).size()));
    t.gamma.push_back(gammaDirect(A, G, o, threads));
  }
  return t;
}

ScaledCyclotomic gammaFtCounting(const GradedAlgebra& A, const GroupAction& G,
                                 const Orbit& Ostar, const FqVec& beta) {
  const auto& F = *A.F;
  const int r = Ostar.degree;
  const int Nr = A.dim(r);
  auto d = gradingFor(A, Ostar);

  uint64_t cntLeNeg1 = 1;
  for (size_t i = 0; i < d.grading.basisAtMost(A, r, -1).size(); ++i)
    cntLeNeg1 *= uint64_t(F.q());
  FqVec base = A.etaB(r, d.alpha);  // in g_{-r}
  Subspace le0(F, A.dim(-r), d.grading.basisAtMost(A, -r, 0));

  FqVec eb = A.etaB(r, beta);
  uint64_t hits = 0;
  for (size_t g = 0; g < G.order(); ++g)
    if (le0.contains(F, vecSub(F, G.act(g, -r, eb), base))) ++hits;

  return ScaledCyclotomic::integer(
             static_cast<long long>(cntLeNeg1 * hits), F.p(), F.q())
      .shiftHalfPower(Nr);
}

PairingResult pairing(const GradedAlgebra& A, const GroupAction& G,
                      const GggrTable& table, const Orbit& OprimeStar,
                      size_t tableIndex, int threads) {
  const auto& F = *A.F;
  PairingResult r;
  auto chi = chiOrbit(A, G, OprimeStar, threads);
  r.value = inner(A, chi, table.gamma[tableIndex]);
  r.sliceHit = degenerates(A, OprimeStar, table.slices[tableIndex]);
  if (r.sliceHit != !r.value.isZero())
    throw GwfError("pairing/slice criterion mismatch at orbit pair (" +
                   std::to_string(OprimeStar.rep()) + ", " +
                   std::to_string(table.orbits[tableIndex].rep()) + ")");
  return r;
}

bool degenerates(const GradedAlgebra& A, const Orbit& xOrbit,
                 const SliceSet& slice) {
  const auto& F = *A.F;
  for (uint64_t p : xOrbit.points)
    if (slice.contains(F, A.indexToVec(xOrbit.degree, p))) return true;
  return false;
}

std::vector<uint64_t> coneOfOrbits(const GradedAlgebra& A,
                                   const GggrTable& table,
                                   const std::vector<Orbit>& S) {
  std::vector<uint64_t> out;
  for (size_t i = 0; i < table.orbits.size(); ++i)
    for (const auto& o : S)
      if (degenerates(A, o, table.slices[i])) {
        out.push_back(table.orbits[i].rep());
        break;
      }
  return out;  // table orbits are sorted by representative already
}

std::vector<uint64_t> wavefront(const GradedAlgebra& A, const GggrTable& table,
                                const PieceFunction& f) {
  std::vector<uint64_t> out;
  for (size_t i = 0; i < table.orbits.size(); ++i)
    if (!inner(A, f, table.gamma[i]).isZero())
      out.push_back(table.orbits[i].rep());
  return out;
}

std::vector<Orbit> supportOrbits(const GradedAlgebra& A, const GroupAction& G,
                                 const PieceFunction& g) {
  std::vector<Orbit> out;
  for (const auto& o : G.allOrbits(g.degree, g.dual)) {
    bool nonzero = false;
    for (uint64_t p : o.points)
      if (!g.values[p].isZero()) {
        nonzero = true;
        break;
      }
    if (nonzero) out.push_back(o);
  }
  return out;
}

}  // namespace gwf
