#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gwf/linalg.hpp"
#include "json.hpp"

namespace gwf {

/// Z/n-graded Lie algebra over F_q with a grading-orthogonal invariant
/// bilinear form.  Degrees are residues 0..n-1; n = 1 is the ungraded case.
///
/// Points of a graded piece g_i are coordinate vectors of length dims[i]
/// in the fixed basis, or equivalently mixed-radix indices in [0, q^dims[i])
/// with the least significant coordinate first.  Dual points live in the
/// basis dual to the fixed basis of g_i.
class GradedAlgebra {
 public:
  FieldPtr F;
  int n = 1;
  std::vector<int> dims;
  // brk[i][j]: structure constants, entry (a*dims[j]+b)*dims[k] + c is the
  // c-th coordinate of [basis_i[a], basis_j[b]] in degree k = (i+j) mod n.
  std::vector<std::vector<std::vector<Fq>>> brk;
  // gram[i](s,t) = B(basis_i[s], basis_{-i}[t])
  std::vector<FqMat> gram;
  std::vector<FqMat> gramTInv;  // inverse of gram[-i]^T, used by etaB

  // Optional matrix realisation: each basis vector of each degree as an
  // matDim x matDim matrix.  Needed by the nilpotency oracle and the
  // ungraded (Jordan / N-map) layer.
  int matDim = 0;
  std::vector<std::vector<FqMat>> basisMat;

  nlohmann::json metadata;  // builder provenance, group order, etc.

  int degMod(int d) const { return ((d % n) + n) % n; }
  int dim(int d) const { return dims[degMod(d)]; }
  uint64_t pieceSize(int d) const;

  FqVec bracket(int degX, const FqVec& x, int degY, const FqVec& y) const;
  FqVec bracketBasis(int degX, int a, int degY, int b) const;

  /// B(x, y) for x in g_i, y in g_{-i}.
  Fq form(int degX, const FqVec& x, const FqVec& y) const;

  /// Pairing <alpha, v> of a dual point with a primal point, same degree.
  Fq dualPairing(const FqVec& alpha, const FqVec& v) const;

  /// eta_B: g_i^* -> g_{-i} with B(eta_B(alpha), v) = <alpha, v>.
  FqVec etaB(int degAlpha, const FqVec& alpha) const;
  /// Inverse of eta_B: g_{-i} -> g_i^*.
  FqVec etaBInv(int degW, const FqVec& w) const;

  bool hasMatrixRealisation() const { return matDim > 0; }
  FqMat toMatrix(int deg, const FqVec& x) const;
  /// Coordinates of a matrix in the basis of the given degree; throws if
  /// the matrix is not in the span.
  FqVec fromMatrix(int deg, const FqMat& m) const;
  bool isNilpotent(int deg, const FqVec& x) const;

  /// Matrix of ad(x): g_s -> g_{s + degX}.
  FqMat adMatrix(int degX, const FqVec& x, int degS) const;

  // Canonical point enumeration.
  uint64_t vecToIndex(int deg, const FqVec& x) const;
  FqVec indexToVec(int deg, uint64_t idx) const;

  /// Exhaustive structural validation: antisymmetry, Jacobi, grading
  /// orthogonality, invertible Gram matrices, symmetry and invariance of
  /// B.  Throws GwfError naming the first violated identity.
  void validate() const;

  void finalize();  // precompute gramTInv; call after filling the tables

  nlohmann::json toJson() const;
  static std::shared_ptr<GradedAlgebra> fromJson(const nlohmann::json& j);
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

}  // namespace gwf
