#pragma once

#include "gwf/glie.hpp"

namespace gwf {

/// Graded sl2-triple: e in g_degE, h in g_0, f in g_{-degE}, with
/// [h,e] = 2e, [h,f] = -2f, [e,f] = h, all exact.
struct Sl2Triple {
  int degE = 0;
  FqVec e, h, f;
  bool isZero() const { return isZeroVec(e) && isZeroVec(h) && isZeroVec(f); }
};

/// Integer-weight refinement of the grading induced by a triple's h: each
/// graded piece splits as g_s = (+)_j g_s(j) with ad(h) acting on g_s(j)
/// as multiplication by j mod p, and j ranging over [-window, window].
struct AdaptedGrading {
  int window = 0;
  // weightBasis[s][j + window]: basis vectors of g_s(j)
  std::vector<std::vector<std::vector<FqVec>>> weightBasis;

  int weightDim(int sMod, int j) const;
  /// Spanning vectors of g_deg(<= maxWeight).
  std::vector<FqVec> basisAtMost(const GradedAlgebra& A, int deg,
                                 int maxWeight) const;
  int dimAtMost(const GradedAlgebra& A, int deg, int maxWeight) const;
};

/// Affine subspace of a graded piece or its dual, with a membership test.
struct SliceSet {
  int degree = 0;
  bool dual = false;
  FqVec base;
  Subspace span;

  int dim() const { return span.dim(); }
  bool contains(const FiniteField& F, const FqVec& pt) const {
    return span.contains(F, vecSub(F, pt, base));
  }
};

/// Complete a nilpotent e in g_degE to a graded sl2-triple: solve
/// [e,[e,y]] = -2e for y in g_{-degE} (so h = [e,y] lies in [e, g_{-degE}]),
/// then the stacked system [e,f] = h, [h,f] = -2f.  Deterministic: both
/// solves take the canonical solution with free variables zero.  Throws
/// "JM failure" when a system is unsolvable.
Sl2Triple completeTriple(const GradedAlgebra& A, int degE, const FqVec& e);

/// Throws unless the triple relations hold exactly.
void checkTriple(const GradedAlgebra& A, const Sl2Triple& t);

/// Integer weight decomposition from the triple, built from sl2-strings:
/// primitive vectors are ker(ad e) split into ad(h)-eigenspaces, the string
/// length under ad(f) determines the integer highest weight.  Verifies that
/// the strings yield a basis of every piece, that ad(h) acts by j mod p,
/// and bracket compatibility [g_s(j), g_t(k)] c g_{s+t}(j+k); any failure
/// throws "p too small for this triple".
AdaptedGrading adaptedGrading(const GradedAlgebra& A, const Sl2Triple& t);

struct TripleCount {
  uint64_t count = 0;     // brute-force number of (h,f) completions over F_q
  uint64_t expected = 0;  // q^{dim u_0^e}, u_0^e = g_0^e n [g_{-degE}, e]
};

/// Counts all (h,f) with (e,h,f) a triple, by enumerating the affine space
/// of valid h and counting the solution space of the f-system for each.
/// Asserts count == expected (the torsor count) before returning.
TripleCount allTriplesCount(const GradedAlgebra& A, int degE, const FqVec& e);

/// Sigma_alpha = alpha + etaBInv(g_{-r}(<=0)) for nilpotent alpha in g_r^*,
/// using the canonical triple completing e = etaB(alpha) in g_{-r}.  The
/// triple used is written to *usedTriple when non-null.
SliceSet sigmaSlice(const GradedAlgebra& A, int degAlpha, const FqVec& alpha,
                    Sl2Triple* usedTriple = nullptr);

/// Slodowy slice e + c_{g_degE}(f), an affine subspace of g_degE.
SliceSet slodowySlice(const GradedAlgebra& A, const Sl2Triple& t);

}  // namespace gwf
