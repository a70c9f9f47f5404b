#pragma once

#include "gwf/gact.hpp"
#include "gwf/sl2.hpp"

namespace gwf {

/// Partition with weakly decreasing positive parts; the label set for
/// nilpotent gl_n orbits, ordered by dominance.
struct Partition {
  std::vector<int> parts;

  bool operator==(const Partition& o) const = default;
  bool operator<(const Partition& o) const { return parts < o.parts; }
  int sum() const;
  /// *this <= o in dominance order (equal sums, partial sums bounded).
  bool dominatedBy(const Partition& o) const;
  std::string str() const;

  static Partition fromParts(std::vector<int> p);  // sorts, drops zeros
};

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> allPartitions(int n);
/// All partitions <= lam in dominance order.
std::vector<Partition> dominanceIdeal(const Partition& lam);

struct JordanPair {
  FqVec xs, xn;
};

/// Jordan type of a nilpotent element, from the kernel filtration of the
/// matrix realisation.
Partition jordanType(const GradedAlgebra& A, const FqVec& x);

/// Additive Jordan decomposition x = x_s + x_n over F_q, by Newton
/// iteration against the squarefree part of the characteristic polynomial.
/// Requires an ungraded matrix-realised algebra.
JordanPair jordan(const GradedAlgebra& A, const FqVec& x);

/// Centralizer data of x_s refined to geometric eigenvalue classes: for an
/// irreducible factor of degree d with a size-m generalized eigenspace
/// over the extension, d copies of the block (m, mu) are listed, where mu
/// is the Jordan type of x_n on that eigenspace viewed over the extension.
struct LeviDatum {
  std::vector<std::pair<int, Partition>> blocks;  // (n_i, lambda^(i))
};

LeviDatum leviDatum(const GradedAlgebra& A, const FqVec& x);

/// Lusztig-Spaltenstein induction in type A: the part-wise sum of the
/// zero-padded block partitions.
Partition lsInductionTypeA(const LeviDatum& L);

/// N(x) = Ind of the orbit of x_n from the centralizer Levi of x_s.
Partition nMap(const GradedAlgebra& A, const FqVec& x);
/// The same for a coadjoint point, transported through eta_B.
Partition nMapDual(const GradedAlgebra& A, const FqVec& alpha);

/// Geometric asymptotic cone surrogate: the dominance ideal of N(x).
std::vector<Partition> geometricConeTypeA(const GradedAlgebra& A,
                                          const FqVec& x);

/// dim of the nilpotent orbit with the given type in gl_n: n^2 - sum of
/// squared parts of the conjugate partition.
int orbitDimGl(int n, const Partition& lam);

/// Brute-force Theta(x): all sl2-triples (e,h,f) with e of Jordan type
/// N(x) and x in the Slodowy slice e + c(f).  Throws when empty (the
/// non-emptiness is a theorem) or when the piece exceeds 10^4 points.
std::vector<Sl2Triple> thetaX(const GradedAlgebra& A, const FqVec& x);

}  // namespace gwf
