#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gwf/builders.hpp"
#include "gwf/sl2.hpp"

using namespace gwf;

TEST_CASE("zero completes to the zero triple") {
  auto inst = build(builtinSpec("sl2", 5));
  auto t = completeTriple(*inst.algebra, 0, FqVec{0, 0, 0});
  CHECK(t.isZero());
  auto g = adaptedGrading(*inst.algebra, t);
  CHECK(g.window == 0);
  CHECK(g.dimAtMost(*inst.algebra, 0, 0) == 3);
  CHECK(g.dimAtMost(*inst.algebra, 0, -1) == 0);
}

TEST_CASE("standard triple of sl2") {
  auto inst = build(builtinSpec("sl2", 5));
  const auto& A = *inst.algebra;
  // basis h, e, f
  auto t = completeTriple(A, 0, FqVec{0, 1, 0});
  checkTriple(A, t);
  CHECK(t.h == FqVec{1, 0, 0});  // diag(1,-1)
  CHECK(t.f == FqVec{0, 0, 1});  // E21
  auto g = adaptedGrading(A, t);
  CHECK(g.window == 2);
  CHECK(g.weightDim(0, 2) == 1);
  CHECK(g.weightDim(0, 0) == 1);
  CHECK(g.weightDim(0, -2) == 1);
  CHECK(g.weightDim(0, 1) == 0);
}

static BuiltInstance gl3NoGroup(int p) {
  auto s = builtinSpec("gl3", p);
  s.buildGroup = false;  // |GL_3| blows past the closure cap for p = 11
  return build(s);
}

TEST_CASE("regular triple of gl3") {
  auto inst = gl3NoGroup(11);
  const auto& A = *inst.algebra;
  FqVec e = A.fromMatrix(0, [&] {
    FqMat m(3, 3);
    m.at(0, 1) = 1;
    m.at(1, 2) = 1;
    return m;
  }());
  auto t = completeTriple(A, 0, e);
  checkTriple(A, t);
  FqMat hm = A.toMatrix(0, t.h);
  CHECK(hm.at(0, 0) == 2);
  CHECK(hm.at(1, 1) == 0);
  CHECK(hm.at(2, 2) == A.F->fromInt(-2));
  auto g = adaptedGrading(A, t);
  CHECK(g.window == 4);  // adjoint weights of the regular triple reach 4
  CHECK(g.weightDim(0, 4) == 1);
  CHECK(g.weightDim(0, 0) == 3);
}

TEST_CASE("non-nilpotent e is rejected") {
  auto inst = build(builtinSpec("sl2", 5));
  CHECK_THROWS_AS(completeTriple(*inst.algebra, 0, FqVec{1, 0, 0}), GwfError);
}

TEST_CASE("triple torsor counts") {
  for (auto [q, expect] : {std::pair<int, uint64_t>{5, 5}, {7, 7}}) {
    auto inst = build(builtinSpec("sl2", q));
    auto r = allTriplesCount(*inst.algebra, 0, FqVec{0, 1, 0});
    CHECK(r.count == expect);
    CHECK(r.expected == expect);
  }
  // graded: e = E12 in degree 1 of Z/2-graded gl2
  auto g = build(builtinSpec("gl2-z2", 5));
  auto r = allTriplesCount(*g.algebra, 1, FqVec{1, 0});
  CHECK(r.count == r.expected);
}

TEST_CASE("graded adapted grading of gl2-z2") {
  auto inst = build(builtinSpec("gl2-z2", 5));
  const auto& A = *inst.algebra;
  auto t = completeTriple(A, 1, FqVec{1, 0});  // E12 in degree 1
  checkTriple(A, t);
  auto g = adaptedGrading(A, t);
  CHECK(g.window == 2);
  CHECK(g.weightDim(1, 2) == 1);   // E12
  CHECK(g.weightDim(1, -2) == 1);  // E21
  CHECK(g.weightDim(1, 0) == 0);
  CHECK(g.weightDim(0, 0) == 2);
  CHECK(g.dimAtMost(A, 1, -1) == 1);
}

TEST_CASE("string fallback below the eigenvalue window: gl2 over F3") {
  auto inst = build(builtinSpec("gl2", 3));
  const auto& A = *inst.algebra;
  // basis E11, E22, E12, E21; e = E12 regular nilpotent, weights {2,0,0,-2}
  auto t = completeTriple(A, 0, FqVec{0, 0, 1, 0});
  auto g = adaptedGrading(A, t);
  CHECK(g.window == 2);
  CHECK(g.weightDim(0, 2) == 1);
  CHECK(g.weightDim(0, 0) == 2);
  CHECK(g.weightDim(0, -2) == 1);
  CHECK(g.dimAtMost(A, 0, -1) == 1);
}

TEST_CASE("sigma slice dimensions") {
  auto inst = build(builtinSpec("sl2", 5));
  const auto& A = *inst.algebra;
  // alpha = 0: whole dual piece
  auto s0 = sigmaSlice(A, 0, FqVec{0, 0, 0});
  CHECK(s0.dim() == 3);
  // alpha dual to a regular nilpotent
  FqVec alpha = A.etaBInv(0, FqVec{0, 1, 0});
  Sl2Triple used;
  auto s = sigmaSlice(A, 0, alpha, &used);
  CHECK(s.dim() == 2);  // weights 0 and -2 of the adjoint
  CHECK(s.contains(*A.F, alpha));
  CHECK(used.e == A.etaB(0, alpha));

  auto g = build(builtinSpec("gl2-z2", 5));
  FqVec beta = g.algebra->etaBInv(1, FqVec{1, 0});
  auto sg = sigmaSlice(*g.algebra, 1, beta);
  CHECK(sg.dim() == 1);
  CHECK(sg.contains(*g.algebra->F, beta));
}

TEST_CASE("slodowy slice dimensions") {
  auto inst = build(builtinSpec("sl2", 5));
  auto t = completeTriple(*inst.algebra, 0, FqVec{0, 1, 0});
  auto s = slodowySlice(*inst.algebra, t);
  CHECK(s.dim() == 1);
  CHECK(s.contains(*inst.algebra->F, t.e));

  auto g3 = gl3NoGroup(11);
  const auto& A = *g3.algebra;
  FqVec e = A.fromMatrix(0, [&] {
    FqMat m(3, 3);
    m.at(0, 1) = 1;
    m.at(1, 2) = 1;
    return m;
  }());
  auto t3 = completeTriple(A, 0, e);
  CHECK(slodowySlice(A, t3).dim() == 3);

  auto z = completeTriple(A, 0, FqVec(9, 0));
  CHECK(slodowySlice(A, z).dim() == 9);  // whole space
}

TEST_CASE("slice independence of triple choice up to the group") {
  // for sl_2(F_5), compare the canonical slice with slices built from
  // other rational triples completing group translates of the same e
  auto inst = build(builtinSpec("sl2", 5));
  const auto& A = *inst.algebra;
  const auto& G = *inst.group;
  FqVec alpha = A.etaBInv(0, FqVec{0, 1, 0});
  auto s = sigmaSlice(A, 0, alpha);
  // the orbit of alpha meets its own slice at alpha, and group translates
  // of the slice are slices for translated alpha
  for (size_t g = 0; g < G.order(); g += 17) {
    FqVec beta = G.actDual(g, 0, alpha);
    auto sb = sigmaSlice(A, 0, beta);
    CHECK(sb.dim() == s.dim());
    CHECK(sb.contains(*A.F, beta));
  }
}
