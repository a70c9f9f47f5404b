#pragma once

#include "gwf/cyclotomic.hpp"
#include "gwf/gact.hpp"

namespace gwf {

/// Dense function table on one graded piece (or its dual), indexed by the
/// canonical point enumeration.  All values share the piece's (p, q).
struct PieceFunction {
  int degree = 0;
  bool dual = false;
  std::vector<ScaledCyclotomic> values;
};

/// chi(a) = zeta_p^{trace(a)}, the fixed additive character.
ScaledCyclotomic chiOf(const FiniteField& F, Fq a);

PieceFunction zeroFunction(const GradedAlgebra& A, int degree, bool dual);
PieceFunction constantFunction(const GradedAlgebra& A, int degree, bool dual,
                               const ScaledCyclotomic& value);
/// Indicator of a point set, scaled.
PieceFunction indicatorFunction(const GradedAlgebra& A, int degree, bool dual,
                                const std::vector<uint64_t>& points,
                                const ScaledCyclotomic& value);

/// Fourier transform FT(f)(alpha) = q^{-N/2} sum_v chi(alpha(v)) f(v),
/// flipping between a piece and its dual; the q^{-N/2} stays symbolic.
/// Computed exactly by per-coordinate decimation, cost N q^{N+1}.
PieceFunction ft(const GradedAlgebra& A, const PieceFunction& f,
                 int threads = 1);

/// <f, g> = q^{-N} sum_v conj(f(v)) g(v); conjugate-linear in f.
ScaledCyclotomic inner(const GradedAlgebra& A, const PieceFunction& f,
                       const PieceFunction& g);

/// The function v -> f(-v).
PieceFunction negateArgument(const GradedAlgebra& A, const PieceFunction& f);

bool isInvariant(const GradedAlgebra& A, const GroupAction& G,
                 const PieceFunction& f);

/// chi_{O*} = FT(q^{N/2} 1_{-O*}), the irreducible invariant character
/// attached to a coadjoint orbit.
PieceFunction chiOrbit(const GradedAlgebra& A, const GroupAction& G,
                       const Orbit& Ostar, int threads = 1);

/// Outcome of the character test: when ok, mult lists every coadjoint
/// orbit (by sorted canonical representative) with its multiplicity in
/// f = sum c_{O*} chi_{O*}; otherwise reason and a witness dual point.
struct CharacterDecomposition {
  bool ok = false;
  std::vector<std::pair<uint64_t, long long>> mult;
  std::string reason;
  uint64_t witness = 0;
};

/// Character test: f is a non-negative integer combination of the
/// chi_{O*} iff FT(f) is orbit-constant with values in q^{N/2} N_0.
CharacterDecomposition isInvariantCharacter(const GradedAlgebra& A,
                                            const GroupAction& G,
                                            const PieceFunction& f,
                                            int threads = 1);

}  // namespace gwf
