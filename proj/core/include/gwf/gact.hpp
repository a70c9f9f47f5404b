#pragma once

#include <cstdint>
#include <vector>

#include "gwf/glie.hpp"

namespace gwf {

/// A G^Fr-orbit on a graded piece (or its dual), as a sorted index set.
struct Orbit {
  int degree = 0;
  bool dual = false;
  std::vector<uint64_t> points;  // sorted ascending
  uint64_t rep() const { return points.front(); }
  size_t size() const { return points.size(); }
};

/// A group generator: its action on every graded piece, plus (optionally)
/// the matrix of the defining representation.  When present, the defining
/// matrix takes part in element identity, so e.g. GL_2 keeps its scalar
/// center instead of collapsing to PGL_2 under the adjoint action.
struct GroupGen {
  std::vector<FqMat> act;  // one matrix per degree
  FqMat def;               // empty (rows == 0) when absent
};

/// The finite group G^Fr as an explicit element list.  Each element acts
/// on every graded piece by an invertible matrix; generators are verified
/// to be grading-preserving Lie algebra automorphisms preserving B.
class GroupAction {
 public:
  /// Breadth-first closure of the generators, deterministic discovery
  /// order (generators sorted by their matrix entries first).
  static std::shared_ptr<GroupAction> close(AlgebraPtr A,
                                            std::vector<GroupGen> generators,
                                            uint64_t cap = 1000000);

  AlgebraPtr algebra() const { return A_; }
  size_t order() const { return elems_.size(); }

  const FqMat& mat(size_t e, int deg) const { return elems_[e][A_->degMod(deg)]; }
  const FqMat& dualMat(size_t e, int deg) const { return dual_[e][A_->degMod(deg)]; }
  size_t inverseOf(size_t e) const { return inv_[e]; }
  bool hasDefining() const { return !defining_.empty() && defining_[0].rows > 0; }
  const FqMat& definingMat(size_t e) const { return defining_[e]; }

  FqVec act(size_t e, int deg, const FqVec& x) const {
    return matVec(*A_->F, mat(e, deg), x);
  }
  /// Coadjoint action on dual coordinates: (g.alpha)(v) = alpha(g^{-1} v).
  FqVec actDual(size_t e, int deg, const FqVec& alpha) const {
    return matVec(*A_->F, dualMat(e, deg), alpha);
  }

  Orbit orbitOf(int deg, bool dual, uint64_t startIdx) const;
  /// Partition of the nilpotent cone of g_deg into orbits, sorted by
  /// representative index.
  std::vector<Orbit> nilpotentOrbits(int deg) const;
  /// Orbits of {alpha in g_deg^*: eta_B(alpha) nilpotent}.
  std::vector<Orbit> nilpotentCoadjointOrbits(int deg) const;
  /// Partition of the whole (co)adjoint piece into orbits.
  std::vector<Orbit> allOrbits(int deg, bool dual) const;

  /// The orbit containing the negated points of o.
  Orbit negatedOrbit(const Orbit& o) const;

 private:
  AlgebraPtr A_;
  std::vector<std::vector<FqMat>> elems_;
  std::vector<FqMat> defining_;
  std::vector<std::vector<FqMat>> dual_;  // transpose of inverse, per degree
  std::vector<size_t> inv_;

  std::vector<Orbit> orbitsOfSet(int deg, bool dual,
                                 const std::vector<uint64_t>& pts) const;
};

using GroupPtr = std::shared_ptr<const GroupAction>;

/// Build a generator from a matrix of the defining representation: the
/// per-degree action is conjugation through the algebra's realisation.
GroupGen generatorFromDefining(const GradedAlgebra& A, const FqMat& g);

/// Load a generator file.  Either {"defining": [n x n matrices]} for
/// matrix-realised algebras, or {"generators": [per-degree matrix lists]}.
/// Integer entries are reduced into the prime field.
std::vector<GroupGen> generatorsFromJson(const GradedAlgebra& A,
                                         const nlohmann::json& j);
nlohmann::json generatorsToJson(const GradedAlgebra& A,
                                const std::vector<GroupGen>& gens);

}  // namespace gwf
