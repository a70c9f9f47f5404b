#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gwf/cyclotomic.hpp"
#include "gwf/ffield.hpp"

using namespace gwf;

TEST_CASE("prime field arithmetic") {
  FiniteField F(5, 1);
  CHECK(F.q() == 5);
  CHECK(F.inv(2) == 3);          // 2*3 = 6 = 1
  CHECK(F.add(4, 3) == 2);
  CHECK(F.mul(F.inv(2), 2) == 1);
  CHECK_THROWS_AS(F.inv(0), GwfError);
  // field axioms on all triples
  for (Fq a = 0; a < 5; ++a)
    for (Fq b = 0; b < 5; ++b) {
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      for (Fq c = 0; c < 5; ++c)
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
}

TEST_CASE("F9 with modulus t^2+1") {
  // t^2 = -1
  FiniteField F(3, 2, {1, 0, 1});
  Fq t = F.fromCoords({0, 1});
  CHECK(F.mul(t, t) == F.fromInt(-1));
  CHECK(F.trace(t) == 0);  // t + t^3 = t - t
  CHECK(F.trace(1) == 2);
  // direct power computation oracle for the trace
  for (long long a = 0; a < 9; ++a) {
    Fq s = F.add(Fq(a), F.pow(Fq(a), 3));
    CHECK(F.fromInt(F.trace(Fq(a))) == s);
  }
}

TEST_CASE("default modulus is irreducible and deterministic") {
  FiniteField F(5, 2);
  FiniteField G(5, 2);
  CHECK(F.modulus() == G.modulus());
  CHECK(F.q() == 25);
  // no roots in F_p
  for (int x = 0; x < 5; ++x) {
    int v = (F.modulus()[0] + F.modulus()[1] * x + F.modulus()[2] * x * x) % 5;
    CHECK(v != 0);
  }
  CHECK_THROWS_AS(FiniteField(5, 2, std::vector<int>{0, 0, 1}), GwfError);  // t^2 reducible
  CHECK_THROWS_AS(FiniteField(4, 1), GwfError);
}

static ScaledCyclotomic chi(const FiniteField& F, Fq a) {
  return ScaledCyclotomic::zeta(F.trace(a), F.p(), F.q());
}

TEST_CASE("additive character") {
  FiniteField F3(3, 1);
  CHECK(chi(F3, 0) == ScaledCyclotomic::integer(1, 3, 3));
  CHECK(chi(F3, 1) == ScaledCyclotomic::zeta(1, 3, 3));
  FiniteField F9(3, 2, {1, 0, 1});
  Fq t = F9.fromCoords({0, 1});
  CHECK(chi(F9, t) == ScaledCyclotomic::integer(1, 3, 9));  // trace(t) = 0
  // multiplicativity chi(a+b) = chi(a) chi(b)
  for (long long a = 0; a < 9; ++a)
    for (long long b = 0; b < 9; ++b)
      CHECK(chi(F9, F9.add(Fq(a), Fq(b))) == chi(F9, Fq(a)) * chi(F9, Fq(b)));
}

TEST_CASE("character orthogonality") {
  for (auto [p, k] : {std::pair{5, 1}, {7, 1}, {3, 2}}) {
    FiniteField F(p, k);
    // sum over the field of chi(a b) is 0 for a != 0, q for a = 0
    for (long long a = 0; a < F.q(); ++a) {
      auto s = ScaledCyclotomic::zero(F.p(), F.q());
      for (long long b = 0; b < F.q(); ++b) s += chi(F, F.mul(Fq(a), Fq(b)));
      if (a == 0)
        CHECK(s == ScaledCyclotomic::integer(F.q(), F.p(), F.q()));
      else
        CHECK(s.isZero());
    }
  }
}

TEST_CASE("scaled cyclotomic ring laws") {
  std::mt19937_64 rng(12345);
  int p = 5;
  long long q = 5;
  auto randomScalar = [&]() {
    auto s = ScaledCyclotomic::zero(p, q);
    for (int i = 0; i < p; ++i)
      s += ScaledCyclotomic::zeta(i, p, q) *
           ScaledCyclotomic::integer(long(rng() % 7) - 3, p, q);
    if (rng() % 2) s = s.shiftHalfPower(int(rng() % 5) - 2);
    return s;
  };
  for (int it = 0; it < 200; ++it) {
    auto x = randomScalar(), y = randomScalar(), z = randomScalar();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.conj().conj() == x);
    CHECK((x - x).isZero());
    CHECK(x.shiftHalfPower(3).shiftHalfPower(-3) == x);
  }
}

TEST_CASE("half-power bookkeeping is exact") {
  int p = 5;
  long long q = 5;
  auto one = ScaledCyclotomic::integer(1, p, q);
  auto r = one.shiftHalfPower(1);  // sqrt(5)
  CHECK(r * r == ScaledCyclotomic::integer(5, p, q));
  CHECK(r.integerMultipleOfHalfPower(1) == 1);
  CHECK(!r.integerMultipleOfHalfPower(2).has_value());
  CHECK(one.shiftHalfPower(-2).integerMultipleOfHalfPower(-2) == 1);
  auto v = ScaledCyclotomic::integer(10, p, q).shiftHalfPower(3);  // 10 q^(3/2)
  CHECK(v.integerMultipleOfHalfPower(3) == 10);
  CHECK(v.integerMultipleOfHalfPower(1) == 50);
  // zeta_5 is not an integer multiple of any power
  CHECK(!ScaledCyclotomic::zeta(1, p, q).integerMultipleOfHalfPower(0).has_value());
  // serialization round trip
  auto j = v.toJson();
  CHECK(ScaledCyclotomic::fromJson(j, p, q) == v);
}
