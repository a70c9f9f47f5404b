#include "gwf/linalg.hpp"

namespace gwf {

FqMat FqMat::identity(const FiniteField&, int n) {
  FqMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

FqMat matMul(const FiniteField& F, const FqMat& A, const FqMat& B) {
  if (A.cols != B.rows) throw GwfError("matMul shape mismatch");
  FqMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      Fq v = A.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
    }
  return C;
}

FqVec matVec(const FiniteField& F, const FqMat& A, const FqVec& x) {
  if (A.cols != int(x.size())) throw GwfError("matVec shape mismatch");
  FqVec y(A.rows, 0);
  for (int i = 0; i < A.rows; ++i) {
    Fq s = 0;
    for (int j = 0; j < A.cols; ++j) s = F.add(s, F.mul(A.at(i, j), x[j]));
    y[i] = s;
  }
  return y;
}

FqMat matAdd(const FiniteField& F, const FqMat& A, const FqMat& B) {
  FqMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(C.a[i], B.a[i]);
  return C;
}

FqMat matSub(const FiniteField& F, const FqMat& A, const FqMat& B) {
  FqMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(C.a[i], B.a[i]);
  return C;
}

FqMat matScale(const FiniteField& F, Fq c, const FqMat& A) {
  FqMat C = A;
  for (auto& v : C.a) v = F.mul(c, v);
  return C;
}

FqMat transpose(const FqMat& A) {
  FqMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

bool isZeroMat(const FqMat& A) {
  for (auto v : A.a)
    if (v != 0) return false;
  return true;
}

FqVec vecAdd(const FiniteField& F, const FqVec& x, const FqVec& y) {
  FqVec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] = F.add(z[i], y[i]);
  return z;
}

FqVec vecSub(const FiniteField& F, const FqVec& x, const FqVec& y) {
  FqVec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] = F.sub(z[i], y[i]);
  return z;
}

FqVec vecScale(const FiniteField& F, Fq c, const FqVec& x) {
  FqVec z = x;
  for (auto& v : z) v = F.mul(c, v);
  return z;
}

bool isZeroVec(const FqVec& x) {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

// Reduce [A | B] to reduced row echelon form in place, returning pivot
// column indices of A.
static std::vector<int> rref(const FiniteField& F, FqMat& A, FqMat* B) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int pr = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < A.cols; ++j) std::swap(A.at(r, j), A.at(pr, j));
    if (B)
      for (int j = 0; j < B->cols; ++j) std::swap(B->at(r, j), B->at(pr, j));
    Fq piv = F.inv(A.at(r, c));
    for (int j = 0; j < A.cols; ++j) A.at(r, j) = F.mul(piv, A.at(r, j));
    if (B)
      for (int j = 0; j < B->cols; ++j) B->at(r, j) = F.mul(piv, B->at(r, j));
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || A.at(i, c) == 0) continue;
      Fq f = A.at(i, c);
      for (int j = 0; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
      if (B)
        for (int j = 0; j < B->cols; ++j)
          B->at(i, j) = F.sub(B->at(i, j), F.mul(f, B->at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const FiniteField& F, FqMat A) { return int(rref(F, A, nullptr).size()); }

std::optional<FqMat> inverse(const FiniteField& F, FqMat A) {
  if (A.rows != A.cols) throw GwfError("inverse of non-square matrix");
  FqMat B = FqMat::identity(F, A.rows);
  auto piv = rref(F, A, &B);
  if (int(piv.size()) != A.rows) return std::nullopt;
  return B;
}

std::optional<FqVec> solve(const FiniteField& F, const FqMat& A, const FqVec& b) {
  FqMat M = A;
  FqMat rhs(A.rows, 1);
  for (int i = 0; i < A.rows; ++i) rhs.at(i, 0) = b[i];
  auto piv = rref(F, M, &rhs);
  // consistency
  for (int i = int(piv.size()); i < A.rows; ++i)
    if (rhs.at(i, 0) != 0) return std::nullopt;
  FqVec x(A.cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = rhs.at(int(r), 0);
  return x;
}

std::vector<FqVec> kernelBasis(const FiniteField& F, FqMat A) {
  int n = A.cols;
  auto piv = rref(F, A, nullptr);
  std::vector<bool> isPivot(n, false);
  for (int c : piv) isPivot[c] = true;
  std::vector<FqVec> basis;
  for (int c = 0; c < n; ++c) {
    if (isPivot[c]) continue;
    FqVec v(n, 0);
    v[c] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(A.at(int(r), c));
    basis.push_back(v);
  }
  return basis;
}

Subspace::Subspace(const FiniteField& F, int ambientDim, const std::vector<FqVec>& gens)
    : ambient_(ambientDim) {
  FqMat M(int(gens.size()), ambientDim);
  for (size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < ambientDim; ++j) M.at(int(i), j) = gens[i][j];
  auto piv = rref(F, M, nullptr);
  pivots_ = piv;
  for (size_t r = 0; r < piv.size(); ++r) {
    FqVec row(ambientDim);
    for (int j = 0; j < ambientDim; ++j) row[j] = M.at(int(r), j);
    rows_.push_back(row);
  }
}

bool Subspace::contains(const FiniteField& F, FqVec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    Fq c = v[pivots_[r]];
    if (c == 0) continue;
    for (int j = 0; j < ambient_; ++j) v[j] = F.sub(v[j], F.mul(c, rows_[r][j]));
  }
  return isZeroVec(v);
}

AffineEnumerator::AffineEnumerator(const FiniteField& F, FqVec base,
                                   std::vector<FqVec> basis)
    : F_(F), base_(std::move(base)), basis_(std::move(basis)) {
  size_ = 1;
  for (size_t i = 0; i < basis_.size(); ++i) {
    size_ *= uint64_t(F.q());
    if (size_ > (uint64_t(1) << 40)) throw GwfError("affine space too large");
  }
}

FqVec AffineEnumerator::point(uint64_t idx) const {
  FqVec v = base_;
  for (size_t i = 0; i < basis_.size(); ++i) {
    Fq c = Fq(idx % uint64_t(F_.q()));
    idx /= uint64_t(F_.q());
    if (c != 0)
      for (size_t j = 0; j < v.size(); ++j)
        v[j] = F_.add(v[j], F_.mul(c, basis_[i][j]));
  }
  return v;
}

}  // namespace gwf
