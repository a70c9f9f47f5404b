#pragma once

#include <optional>
#include <vector>

#include "gwf/ffield.hpp"

namespace gwf {

/// Dense matrix over F_q, row-major.
struct FqMat {
  int rows = 0, cols = 0;
  std::vector<Fq> a;

  FqMat() = default;
  FqMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
  Fq& at(int r, int c) { return a[size_t(r) * cols + c]; }
  Fq at(int r, int c) const { return a[size_t(r) * cols + c]; }
  bool operator==(const FqMat& o) const = default;

  static FqMat identity(const FiniteField& F, int n);
};

using FqVec = std::vector<Fq>;

FqMat matMul(const FiniteField& F, const FqMat& A, const FqMat& B);
FqVec matVec(const FiniteField& F, const FqMat& A, const FqVec& x);
FqMat matAdd(const FiniteField& F, const FqMat& A, const FqMat& B);
FqMat matSub(const FiniteField& F, const FqMat& A, const FqMat& B);
FqMat matScale(const FiniteField& F, Fq c, const FqMat& A);
FqMat transpose(const FqMat& A);
bool isZeroMat(const FqMat& A);
FqVec vecAdd(const FiniteField& F, const FqVec& x, const FqVec& y);
FqVec vecSub(const FiniteField& F, const FqVec& x, const FqVec& y);
FqVec vecScale(const FiniteField& F, Fq c, const FqVec& x);
bool isZeroVec(const FqVec& x);

int rank(const FiniteField& F, FqMat A);
std::optional<FqMat> inverse(const FiniteField& F, FqMat A);

/// Solve A x = b.  Returns the canonical solution with all free variables
/// set to zero, or nullopt when inconsistent.
std::optional<FqVec> solve(const FiniteField& F, const FqMat& A, const FqVec& b);

/// Basis of the kernel of A, one vector per free column, deterministic.
std::vector<FqVec> kernelBasis(const FiniteField& F, FqMat A);

/// Row-reduced span for repeated membership tests.
class Subspace {
 public:
  Subspace(const FiniteField& F, int ambientDim, const std::vector<FqVec>& gens);
  int dim() const { return int(rows_.size()); }
  int ambientDim() const { return ambient_; }
  bool contains(const FiniteField& F, FqVec v) const;
  const std::vector<FqVec>& reducedRows() const { return rows_; }

 private:
  int ambient_;
  std::vector<FqVec> rows_;  // in reduced row echelon form
  std::vector<int> pivots_;
};

/// Enumerate all q^dim points of an affine subspace base + span(basis),
/// in the deterministic mixed-radix order of the basis coefficients.
class AffineEnumerator {
 public:
  AffineEnumerator(const FiniteField& F, FqVec base, std::vector<FqVec> basis);
  uint64_t size() const { return size_; }
  FqVec point(uint64_t idx) const;

 private:
  const FiniteField& F_;
  FqVec base_;
  std::vector<FqVec> basis_;
  uint64_t size_;
};

}  // namespace gwf
