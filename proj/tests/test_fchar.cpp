#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gwf/builders.hpp"
#include "gwf/fchar.hpp"

using namespace gwf;

static PieceFunction randomFunction(const GradedAlgebra& A, int deg, bool dual,
                                    std::mt19937_64& rng) {
  auto f = zeroFunction(A, deg, dual);
  int p = A.F->p();
  long long q = A.F->q();
  for (auto& v : f.values) {
    v = ScaledCyclotomic::zero(p, q);
    for (int i = 0; i < p; ++i)
      v += ScaledCyclotomic::zeta(i, p, q) *
           ScaledCyclotomic::integer(long(rng() % 5) - 2, p, q);
  }
  return f;
}

TEST_CASE("FT of deltas and constants") {
  auto inst = build(builtinSpec("sl2", 3));
  const auto& A = *inst.algebra;
  int p = 3;
  long long q = 3;
  int N = 3;
  auto one = ScaledCyclotomic::integer(1, p, q);

  auto delta = indicatorFunction(A, 0, false, {0}, one);
  auto hat = ft(A, delta);
  CHECK(hat.dual);
  for (const auto& v : hat.values) CHECK(v == one.shiftHalfPower(-N));

  auto constf = constantFunction(A, 0, false, one);
  auto chat = ft(A, constf);
  CHECK(chat.values[0] == one.shiftHalfPower(N));
  for (size_t i = 1; i < chat.values.size(); ++i) CHECK(chat.values[i].isZero());
}

TEST_CASE("FT of a character is a scaled delta at the negated point") {
  auto inst = build(builtinSpec("gl2-z2", 5));
  const auto& A = *inst.algebra;
  const auto& F = *A.F;
  int N = A.dim(1);
  for (uint64_t b = 0; b < A.pieceSize(1); ++b) {
    FqVec beta = A.indexToVec(1, b);
    auto f = zeroFunction(A, 1, false);
    for (uint64_t i = 0; i < f.values.size(); ++i)
      f.values[i] = chiOf(F, A.dualPairing(beta, A.indexToVec(1, i)));
    auto hat = ft(A, f);
    uint64_t nb = A.vecToIndex(1, vecScale(F, F.neg(1), beta));
    for (uint64_t i = 0; i < hat.values.size(); ++i) {
      if (i == nb)
        CHECK(hat.values[i] ==
              ScaledCyclotomic::integer(1, F.p(), F.q()).shiftHalfPower(N));
      else
        CHECK(hat.values[i].isZero());
    }
  }
}

TEST_CASE("FT involution and Plancherel on random functions") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"sl2", "gl2-z2"}) {
    auto inst = build(builtinSpec(name, 5));
    const auto& A = *inst.algebra;
    for (int deg = 0; deg < A.n; ++deg)
      for (int it = 0; it < 10; ++it) {
        auto f = randomFunction(A, deg, false, rng);
        auto g = randomFunction(A, deg, false, rng);
        auto ff = ft(A, ft(A, f));
        CHECK(ff.dual == f.dual);
        auto neg = negateArgument(A, f);
        for (size_t i = 0; i < f.values.size(); ++i)
          CHECK(ff.values[i] == neg.values[i]);
        CHECK(inner(A, ft(A, f), ft(A, g)) == inner(A, f, g));
      }
  }
}

TEST_CASE("inner product basics") {
  auto inst = build(builtinSpec("sl2", 5));
  const auto& A = *inst.algebra;
  int p = 5;
  long long q = 5;
  auto one = ScaledCyclotomic::integer(1, p, q);
  auto d = indicatorFunction(A, 0, false, {0}, one);
  CHECK(inner(A, d, d) == one.shiftHalfPower(-2 * 3));  // q^{-N}
  std::mt19937_64 rng(5);
  auto f = randomFunction(A, 0, false, rng);
  CHECK((inner(A, f, f).isZero()) == false);
  auto z = zeroFunction(A, 0, false);
  CHECK(inner(A, z, z).isZero());
}

TEST_CASE("chi of the zero orbit is the constant 1") {
  auto inst = build(builtinSpec("sl2", 5));
  const auto& A = *inst.algebra;
  auto o = inst.group->orbitOf(0, true, 0);
  auto chi = chiOrbit(A, *inst.group, o);
  auto one = ScaledCyclotomic::integer(1, 5, 5);
  for (const auto& v : chi.values) CHECK(v == one);
}

TEST_CASE("orbit characters: FT round trip, conjugate, Gram matrix") {
  for (auto [name, q] : {std::pair<const char*, int>{"sl2", 3}, {"sl2", 5}}) {
    auto inst = build(builtinSpec(name, q));
    const auto& A = *inst.algebra;
    const auto& G = *inst.group;
    int N = A.dim(0);
    auto orbits = G.allOrbits(0, true);
    std::vector<PieceFunction> chis;
    for (const auto& o : orbits) chis.push_back(chiOrbit(A, G, o));
    for (size_t i = 0; i < orbits.size(); ++i) {
      // FT(chi_{O*}) = q^{N/2} 1_{O*}
      auto hat = ft(A, chis[i]);
      auto scale =
          ScaledCyclotomic::integer(1, A.F->p(), A.F->q()).shiftHalfPower(N);
      for (uint64_t pt = 0; pt < hat.values.size(); ++pt) {
        bool inO = std::binary_search(orbits[i].points.begin(),
                                      orbits[i].points.end(), pt);
        CHECK(hat.values[pt] == (inO ? scale
                                     : ScaledCyclotomic::zero(A.F->p(),
                                                              A.F->q())));
      }
      // conj(chi_{O*}) = chi_{-O*}
      Orbit negO = G.negatedOrbit(orbits[i]);
      size_t j = 0;
      while (orbits[j].rep() != negO.rep()) ++j;
      for (size_t t = 0; t < chis[i].values.size(); ++t)
        CHECK(chis[i].values[t].conj() == chis[j].values[t]);
      // chi_{O*}(0) = |O*|
      CHECK(chis[i].values[0] ==
            ScaledCyclotomic::integer(long(orbits[i].size()), A.F->p(),
                                      A.F->q()));
      // diagonal Gram matrix with entries |O*|
      for (size_t t = 0; t < orbits.size(); ++t) {
        auto ip = inner(A, chis[i], chis[t]);
        if (t == i)
          CHECK(ip == ScaledCyclotomic::integer(long(orbits[i].size()),
                                                A.F->p(), A.F->q()));
        else
          CHECK(ip.isZero());
      }
      CHECK(isInvariant(A, G, chis[i]));
    }
  }
}

TEST_CASE("character decomposition round trip") {
  auto inst = build(builtinSpec("sl2", 5));
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  auto orbits = G.allOrbits(0, true);
  std::vector<PieceFunction> chis;
  for (const auto& o : orbits) chis.push_back(chiOrbit(A, G, o));
  std::mt19937_64 rng(99);
  for (int it = 0; it < 5; ++it) {
    std::vector<long long> c(orbits.size());
    auto f = zeroFunction(A, 0, false);
    for (size_t i = 0; i < orbits.size(); ++i) {
      c[i] = long(rng() % 4);
      auto w = ScaledCyclotomic::integer(c[i], 5, 5);
      for (size_t t = 0; t < f.values.size(); ++t)
        f.values[t] += w * chis[i].values[t];
    }
    auto d = isInvariantCharacter(A, G, f);
    REQUIRE(d.ok);
    REQUIRE(d.mult.size() == orbits.size());
    for (size_t i = 0; i < orbits.size(); ++i) {
      CHECK(d.mult[i].first == orbits[i].rep());
      CHECK(d.mult[i].second == c[i]);
    }
    // perturbation is detected
    auto bad = f;
    bad.values[3] += ScaledCyclotomic::integer(1, 5, 5);
    CHECK(!isInvariantCharacter(A, G, bad).ok);
  }
  // the constant 1 is the trivial character: multiplicity 1 at {0}
  auto d = isInvariantCharacter(
      A, G, constantFunction(A, 0, false, ScaledCyclotomic::integer(1, 5, 5)));
  REQUIRE(d.ok);
  for (auto [rep, m] : d.mult) CHECK(m == (rep == 0 ? 1 : 0));
}

TEST_CASE("threaded FT is bit-identical to serial") {
  auto inst = build(builtinSpec("sl2", 5));
  const auto& A = *inst.algebra;
  std::mt19937_64 rng(7);
  auto f = randomFunction(A, 0, false, rng);
  auto a = ft(A, f, 1);
  auto b = ft(A, f, 8);
  for (size_t i = 0; i < a.values.size(); ++i)
    CHECK(a.values[i].toJson() == b.values[i].toJson());
}
