#include "gwf/fchar.hpp"

#include "gwf/parallel.hpp"

namespace gwf {

ScaledCyclotomic chiOf(const FiniteField& F, Fq a) {
  return ScaledCyclotomic::zeta(F.trace(a), F.p(), F.q());
}

PieceFunction zeroFunction(const GradedAlgebra& A, int degree, bool dual) {
  PieceFunction f;
  f.degree = A.degMod(degree);
  f.dual = dual;
  f.values.assign(A.pieceSize(degree),
                  ScaledCyclotomic::zero(A.F->p(), A.F->q()));
  return f;
}

PieceFunction constantFunction(const GradedAlgebra& A, int degree, bool dual,
                               const ScaledCyclotomic& value) {
  PieceFunction f = zeroFunction(A, degree, dual);
  for (auto& v : f.values) v = value;
  return f;
}

PieceFunction indicatorFunction(const GradedAlgebra& A, int degree, bool dual,
                                const std::vector<uint64_t>& points,
                                const ScaledCyclotomic& value) {
  PieceFunction f = zeroFunction(A, degree, dual);
  for (uint64_t p : points) f.values.at(p) = value;
  return f;
}

PieceFunction ft(const GradedAlgebra& A, const PieceFunction& f, int threads) {
  const auto& F = *A.F;
  const int N = A.dim(f.degree);
  const uint64_t q = uint64_t(F.q());
  const uint64_t total = A.pieceSize(f.degree);
  if (f.values.size() != total) throw GwfError("ft: value table size mismatch");

  // chi(a b) table
  std::vector<ScaledCyclotomic> chiTab(size_t(q) * q);
  for (uint64_t a = 0; a < q; ++a)
    for (uint64_t b = 0; b < q; ++b)
      chiTab[a * q + b] = chiOf(F, F.mul(Fq(a), Fq(b)));

  PieceFunction out = f;
  out.dual = !f.dual;
  std::vector<ScaledCyclotomic> next(total);
  for (int c = 0; c < N; ++c) {
    const uint64_t stride = [&] {
      uint64_t s = 1;
      for (int i = 0; i < c; ++i) s *= q;
      return s;
    }();
    const uint64_t tuples = total / q;
    parallelChunks(tuples, threads, [&](int, uint64_t lo, uint64_t hi) {
      for (uint64_t t = lo; t < hi; ++t) {
        // base index of the t-th 1-D line along coordinate c
        uint64_t block = t / stride, off = t % stride;
        uint64_t base = block * stride * q + off;
        for (uint64_t j = 0; j < q; ++j) {
          ScaledCyclotomic acc = ScaledCyclotomic::zero(F.p(), F.q());
          for (uint64_t v = 0; v < q; ++v)
            acc += chiTab[j * q + v] * out.values[base + v * stride];
          next[base + j * stride] = std::move(acc);
        }
      }
    });
    out.values.swap(next);
  }
  for (auto& v : out.values) v = v.shiftHalfPower(-N);
  return out;
}

ScaledCyclotomic inner(const GradedAlgebra& A, const PieceFunction& f,
                       const PieceFunction& g) {
  if (f.degree != g.degree || f.dual != g.dual ||
      f.values.size() != g.values.size())
    throw GwfError("inner: mismatched pieces");
  const auto& F = *A.F;
  const int N = A.dim(f.degree);
  auto acc = ScaledCyclotomic::zero(F.p(), F.q());
  for (size_t i = 0; i < f.values.size(); ++i)
    acc += f.values[i].conj() * g.values[i];
  return acc.shiftHalfPower(-2 * N);
}

PieceFunction negateArgument(const GradedAlgebra& A, const PieceFunction& f) {
  const auto& F = *A.F;
  PieceFunction out = f;
  for (uint64_t i = 0; i < f.values.size(); ++i) {
    FqVec v = A.indexToVec(f.degree, i);
    out.values[A.vecToIndex(f.degree, vecScale(F, F.neg(1), v))] = f.values[i];
  }
  return out;
}

bool isInvariant(const GradedAlgebra& A, const GroupAction& G,
                 const PieceFunction& f) {
  for (const auto& o : G.allOrbits(f.degree, f.dual)) {
    const auto& v0 = f.values[o.rep()];
    for (uint64_t p : o.points)
      if (f.values[p] != v0) return false;
  }
  return true;
}

PieceFunction chiOrbit(const GradedAlgebra& A, const GroupAction& G,
                       const Orbit& Ostar, int threads) {
  if (!Ostar.dual) throw GwfError("chiOrbit: expected a coadjoint orbit");
  const auto& F = *A.F;
  const int N = A.dim(Ostar.degree);
  Orbit neg = G.negatedOrbit(Ostar);
  auto scale = ScaledCyclotomic::integer(1, F.p(), F.q()).shiftHalfPower(N);
  PieceFunction ind =
      indicatorFunction(A, Ostar.degree, true, neg.points, scale);
  return ft(A, ind, threads);
}

CharacterDecomposition isInvariantCharacter(const GradedAlgebra& A,
                                            const GroupAction& G,
                                            const PieceFunction& f,
                                            int threads) {
  CharacterDecomposition d;
  const int N = A.dim(f.degree);
  PieceFunction hat = ft(A, f, threads);
  for (const auto& o : G.allOrbits(hat.degree, hat.dual)) {
    const auto& v0 = hat.values[o.rep()];
    for (uint64_t p : o.points)
      if (hat.values[p] != v0) {
        d.reason = "FT not constant on a coadjoint orbit";
        d.witness = p;
        return d;
      }
    auto m = v0.integerMultipleOfHalfPower(N);
    if (!m || *m < 0) {
      d.reason = "FT value not in q^{N/2} N_0";
      d.witness = o.rep();
      return d;
    }
    d.mult.push_back({o.rep(), *m});
  }
  d.ok = true;
  return d;
}

}  // namespace gwf
