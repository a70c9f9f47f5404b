#pragma once

#include "gwf/fchar.hpp"
#include "gwf/sl2.hpp"

namespace gwf {

/// Everything attached to the nilpotent coadjoint orbits of one degree:
/// the canonical triple, adapted grading data, slice and Gamma function
/// per orbit.  Built once and shared by the pairing/cone/wavefront ops.
struct GggrTable {
  int degree = 0;
  std::vector<Orbit> orbits;  // nilpotent coadjoint orbits, sorted by rep
  std::vector<Sl2Triple> triples;
  std::vector<SliceSet> slices;
  std::vector<int> dimLeNeg1;  // dim g_r(<= -1) per orbit
  std::vector<PieceFunction> gamma;

  int indexOfRep(uint64_t rep) const;
};

/// Gamma_alpha as the literal double sum of the definition, organised as a
/// loop over (group element, point of g_r(<= -1)) so the cost is
/// |G| q^{dim g_r(<=-1)} instead of |G| q^{N_r}.
PieceFunction gammaDirect(const GradedAlgebra& A, const GroupAction& G,
                          const Orbit& Ostar, int threads = 1);

GggrTable buildGggrTable(const GradedAlgebra& A, const GroupAction& G,
                         int degree, int threads = 1);

/// The counting formula for FT(Gamma_alpha)(beta):
/// q^{N_r/2} #g_r(<=-1) #{g : Ad(g) etaB(beta) in etaB(alpha) + g_{-r}(<=0)}.
ScaledCyclotomic gammaFtCounting(const GradedAlgebra& A, const GroupAction& G,
                                 const Orbit& Ostar, const FqVec& beta);

struct PairingResult {
  ScaledCyclotomic value;
  bool sliceHit = false;
};

/// value = <chi_{O'*}, Gamma_{O*}>; sliceHit = (O'* meets Sigma_{O*}).
/// Throws when (value != 0) and sliceHit disagree.
PairingResult pairing(const GradedAlgebra& A, const GroupAction& G,
                      const GggrTable& table, const Orbit& OprimeStar,
                      size_t tableIndex, int threads = 1);

/// Does the orbit of x (a coadjoint orbit) meet the slice of the given
/// nilpotent orbit?
bool degenerates(const GradedAlgebra& A, const Orbit& xOrbit,
                 const SliceSet& slice);

/// Rational asymptotic cone of a G-stable set of coadjoint orbits: the
/// nilpotent orbits whose slice meets some orbit in S.  Returns sorted
/// representatives.
std::vector<uint64_t> coneOfOrbits(const GradedAlgebra& A,
                                   const GggrTable& table,
                                   const std::vector<Orbit>& S);

/// Wave front set: nilpotent coadjoint orbits with <f, Gamma_{O*}> != 0.
/// Returns sorted representatives.
std::vector<uint64_t> wavefront(const GradedAlgebra& A, const GggrTable& table,
                                const PieceFunction& f);

/// The coadjoint orbits on which the (invariant) dual-side function g is
/// not identically zero.
std::vector<Orbit> supportOrbits(const GradedAlgebra& A, const GroupAction& G,
                                 const PieceFunction& g);

}  // namespace gwf
