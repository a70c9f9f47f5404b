#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gwf/builders.hpp"
#include "gwf/ungraded.hpp"

using namespace gwf;

TEST_CASE("partition utilities") {
  auto p = Partition::fromParts({1, 3, 0, 2});
  CHECK(p.parts == std::vector<int>{3, 2, 1});
  CHECK(p.sum() == 6);
  CHECK(p.str() == "(3,2,1)");
  CHECK(allPartitions(4).size() == 5);
  auto l = Partition::fromParts({2, 2});
  CHECK(l.dominatedBy(Partition::fromParts({3, 1})));
  CHECK(!Partition::fromParts({3, 1}).dominatedBy(l));
  CHECK(l.dominatedBy(l));
  CHECK(!l.dominatedBy(Partition::fromParts({2, 1, 1})));
  auto ideal = dominanceIdeal(Partition::fromParts({2, 1}));
  CHECK(ideal.size() == 2);  // (2,1) and (1,1,1)
  CHECK(orbitDimGl(2, Partition::fromParts({2})) == 2);
  CHECK(orbitDimGl(2, Partition::fromParts({1, 1})) == 0);
  CHECK(orbitDimGl(3, Partition::fromParts({2, 1})) == 4);
}

TEST_CASE("jordan decomposition, exhaustive over gl_2(F_3)") {
  auto s = builtinSpec("gl2", 3);
  auto inst = build(s);
  const auto& A = *inst.algebra;
  const auto& F = *A.F;
  for (uint64_t i = 0; i < A.pieceSize(0); ++i) {
    FqVec x = A.indexToVec(0, i);
    auto jp = jordan(A, x);  // internally checks commuting + nilpotency
    CHECK(vecAdd(F, jp.xs, jp.xn) == x);
    // the semisimple part is its own decomposition
    auto jp2 = jordan(A, jp.xs);
    CHECK(jp2.xs == jp.xs);
    CHECK(isZeroVec(jp2.xn));
    if (A.isNilpotent(0, x)) {
      CHECK(isZeroVec(jp.xs));
      CHECK(jp.xn == x);
    }
  }
  // unipotent-style example: [[1,1],[0,1]] has x_s = I
  FqMat m = FqMat::identity(F, 2);
  m.at(0, 1) = 1;
  auto jp = jordan(A, A.fromMatrix(0, m));
  CHECK(A.toMatrix(0, jp.xs) == FqMat::identity(F, 2));
  CHECK(A.toMatrix(0, jp.xn).at(0, 1) == 1);
}

TEST_CASE("levi datum block structure") {
  auto g2 = build(builtinSpec("gl2", 5));
  const auto& A = *g2.algebra;
  // split regular semisimple diag(0,1)
  FqMat d(2, 2);
  d.at(1, 1) = 1;
  auto L = leviDatum(A, A.fromMatrix(0, d));
  REQUIRE(L.blocks.size() == 2);
  CHECK(L.blocks[0] == std::pair{1, Partition::fromParts({1})});
  // zero: one block (n) with type (1^n)
  auto L0 = leviDatum(A, FqVec(4, 0));
  REQUIRE(L0.blocks.size() == 1);
  CHECK(L0.blocks[0] == std::pair{2, Partition::fromParts({1, 1})});
  // non-split regular semisimple: companion matrix of an irreducible
  // quadratic gives two geometric blocks of size 1
  auto g23 = build(builtinSpec("gl2", 3));
  FqMat c(2, 2);
  c.at(0, 1) = g23.algebra->F->neg(1);
  c.at(1, 0) = 1;  // t^2 + 1, irreducible over F_3
  auto Lc = leviDatum(*g23.algebra, g23.algebra->fromMatrix(0, c));
  REQUIRE(Lc.blocks.size() == 2);
  CHECK(Lc.blocks[0] == std::pair{1, Partition::fromParts({1})});
  CHECK(nMap(*g23.algebra, g23.algebra->fromMatrix(0, c)) ==
        Partition::fromParts({2}));
}

TEST_CASE("gl_3 mixed example") {
  auto s = builtinSpec("gl3", 3);
  s.buildGroup = false;
  auto inst = build(s);
  const auto& A = *inst.algebra;
  FqMat m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(0, 1) = 1;  // diag(1,1,0) + E12
  FqVec x = A.fromMatrix(0, m);
  auto L = leviDatum(A, x);
  REQUIRE(L.blocks.size() == 2);
  CHECK(L.blocks[0] == std::pair{2, Partition::fromParts({2})});
  CHECK(L.blocks[1] == std::pair{1, Partition::fromParts({1})});
  CHECK(nMap(A, x) == Partition::fromParts({3}));
  // nilpotent: N(x) is the own Jordan type
  FqMat e12(3, 3);
  e12.at(0, 1) = 1;
  CHECK(nMap(A, A.fromMatrix(0, e12)) == Partition::fromParts({2, 1}));
  CHECK(geometricConeTypeA(A, A.fromMatrix(0, e12)) ==
        dominanceIdeal(Partition::fromParts({2, 1})));
}

TEST_CASE("LS induction closed form and dimension identity") {
  LeviDatum full{{{3, Partition::fromParts({2, 1})}}};
  CHECK(lsInductionTypeA(full) == Partition::fromParts({2, 1}));
  LeviDatum torus{{{1, Partition::fromParts({1})},
                   {1, Partition::fromParts({1})},
                   {1, Partition::fromParts({1})}}};
  CHECK(lsInductionTypeA(torus) == Partition::fromParts({3}));
  LeviDatum mix{{{2, Partition::fromParts({1, 1})},
                 {1, Partition::fromParts({1})}}};
  CHECK(lsInductionTypeA(mix) == Partition::fromParts({2, 1}));

  // dim O_ind = dim O_L + dim gl_n - dim l, all block/partition choices,
  // n <= 4
  std::function<void(int, int, std::vector<int>&)> comps =
      [&](int left, int maxPart, std::vector<int>& cur) {
        if (left == 0) {
          // all choices of one partition per block
          std::vector<std::vector<Partition>> choices;
          for (int b : cur) choices.push_back(allPartitions(b));
          std::vector<size_t> idx(cur.size(), 0);
          while (true) {
            LeviDatum L;
            int dimL = 0, dimOL = 0;
            for (size_t i = 0; i < cur.size(); ++i) {
              L.blocks.push_back({cur[i], choices[i][idx[i]]});
              dimL += cur[i] * cur[i];
              dimOL += orbitDimGl(cur[i], choices[i][idx[i]]);
            }
            int n = 0;
            for (int b : cur) n += b;
            auto ind = lsInductionTypeA(L);
            CHECK(orbitDimGl(n, ind) == dimOL + n * n - dimL);
            size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size())
              idx[k++] = 0;
            if (k == idx.size()) break;
          }
          return;
        }
        for (int b = std::min(left, maxPart); b >= 1; --b) {
          cur.push_back(b);
          comps(left - b, b, cur);
          cur.pop_back();
        }
      };
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> cur;
    comps(n, n, cur);
  }
}

TEST_CASE("n_map is constant on orbits of gl_3(F_3)") {
  auto inst = build(builtinSpec("gl3", 3));
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  std::mt19937_64 rng(31);
  for (int it = 0; it < 6; ++it) {
    uint64_t start = rng() % A.pieceSize(0);
    auto o = G.orbitOf(0, false, start);
    auto expect = nMap(A, A.indexToVec(0, o.rep()));
    size_t step = std::max<size_t>(1, o.size() / 40);
    for (size_t i = 0; i < o.size(); i += step)
      CHECK(nMap(A, A.indexToVec(0, o.points[i])) == expect);
  }
}

TEST_CASE("theta sets") {
  auto inst = build(builtinSpec("sl2", 5));
  const auto& A = *inst.algebra;
  // x = 0: exactly the zero triple
  auto t0 = thetaX(A, FqVec{0, 0, 0});
  REQUIRE(t0.size() == 1);
  CHECK(t0[0].isZero());
  // x regular nilpotent: the q triples through e = x
  auto te = thetaX(A, FqVec{0, 1, 0});
  CHECK(te.size() == 5);
  for (const auto& t : te) CHECK(t.e == FqVec{0, 1, 0});
  // x = diag(1,-1): non-empty, and every triple has x in its slice
  auto th = thetaX(A, FqVec{1, 0, 0});
  CHECK(!th.empty());
  for (const auto& t : th) {
    checkTriple(A, t);
    CHECK(jordanType(A, t.e) == Partition::fromParts({2}));
  }
}

TEST_CASE("graded algebras are refused") {
  auto inst = build(builtinSpec("gl2-z2", 5));
  CHECK_THROWS_WITH_AS(jordan(*inst.algebra, FqVec{0, 0}),
                       doctest::Contains("type A only"), GwfError);
}
