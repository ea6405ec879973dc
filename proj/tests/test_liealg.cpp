#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "liealg.hpp"
#include "testutil.hpp"

using namespace lievec;
using namespace lievec::test;

namespace {

std::vector<VectorField> fields(const VarContext &ctx,
                                std::initializer_list<std::string> texts) {
  std::vector<VectorField> out;
  for (const auto &t : texts)
    out.push_back(field(t, ctx));
  return out;
}

} // namespace

TEST_CASE("spanReduce keeps the earliest independent fields") {
  auto ctx = ctxOf({"x", "y"});
  auto basis = spanReduce(fields(ctx, {"d_x", "2*d_x", "d_y"}));
  CHECK(basis == fields(ctx, {"d_x", "d_y"}));
  CHECK(spanReduce({}).empty());
  auto dep = spanReduce(fields(ctx, {"y*d_x", "y*d_x + d_y", "d_y"}));
  CHECK(dep == fields(ctx, {"y*d_x", "y*d_x + d_y"}));
}

TEST_CASE("closure of the affine line algebra") {
  auto ctx = ctxOf({"y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_y", "y*d_y"}));
  CHECK(L.dim() == 2);
}

TEST_CASE("closure of the six-generator plane algebra") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
  CHECK(L.dim() == 6);
}

TEST_CASE("closure caps and small polynomial families") {
  auto ctx = ctxOf({"x"});
  CHECK(LieAlgebra::closure(fields(ctx, {"x^2*d_x"})).dim() == 1);
  CHECK(LieAlgebra::closure(fields(ctx, {"d_x", "x^2*d_x"})).dim() == 3);
  CHECK_THROWS_AS(LieAlgebra::closure(fields(ctx, {"d_x", "x^3*d_x"}), 8),
                  Error);
}

TEST_CASE("structure constants") {
  auto ctx = ctxOf({"y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_y", "y*d_y"}));
  // [e1, e2] = e1
  CHECK(L.structure().c[0][1] == QVec{Rat(1), Rat(0)});

  auto ab = ctxOf({"x", "y"});
  LieAlgebra A = LieAlgebra::closure(fields(ab, {"d_x", "d_y"}));
  for (auto &row : A.structure().c)
    for (auto &v : row)
      CHECK(isZeroVec(v));

  LieAlgebra H = LieAlgebra::closure(fields(ab, {"d_y", "y*d_x", "d_x"}));
  CHECK(H.structure().c[0][1] == QVec{Rat(0), Rat(0), Rat(1)});
  for (const auto &m : {H.structure().adMatrix(0), H.structure().adMatrix(1),
                        H.structure().adMatrix(2)})
    CHECK(m.isNilpotentMatrix());
}

TEST_CASE("structureConstants rejects non-closed spans") {
  auto ctx = ctxOf({"x"});
  CHECK_THROWS_AS(structureConstants(fields(ctx, {"d_x", "x^3*d_x"})), Error);
}

TEST_CASE("structure tensor sanity on the six-generator algebra") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
  CHECK(L.structure().antisymmetryHolds());
  CHECK(L.structure().jacobiHolds());
  // brackets of basis fields match the tensor exactly
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      VectorField viaTensor = L.fieldFromCoords(L.structure().c[i][j]);
      CHECK(L.basis()[i].bracket(L.basis()[j]) == viaTensor);
    }
}

TEST_CASE("lower central series of the height-3 example") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L =
      LieAlgebra::closure(fields(ctx, {"d_x", "d_y", "y*d_x", "y^2*d_x"}));
  SeriesReport r = L.lowerCentralSeries();
  CHECK(r.dims == std::vector<std::size_t>{4, 2, 1, 0});
  REQUIRE(r.height.has_value());
  CHECK(*r.height == 3);
  CHECK(L.isNilpotent());
  CHECK(L.isSolvable());
}

TEST_CASE("height-2 example from weights (1,2)") {
  auto ctx = ctxOf({"y", "z"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_y", "d_z", "y*d_z"}));
  SeriesReport r = L.lowerCentralSeries();
  REQUIRE(r.height.has_value());
  CHECK(*r.height == 2);
}

TEST_CASE("derived series of an abelian algebra stops immediately") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_x", "d_y"}));
  SeriesReport r = L.derivedSeries();
  CHECK(r.dims == std::vector<std::size_t>{2, 0});
  CHECK(L.isSolvable());
}

TEST_CASE("sl2 realization is neither solvable nor nilpotent") {
  auto ctx = ctxOf({"x"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_x", "x*d_x", "x^2*d_x"}));
  CHECK(L.dim() == 3);
  CHECK_FALSE(L.isSolvable());
  CHECK_FALSE(L.isNilpotent());
}

TEST_CASE("transitivity at the origin") {
  auto ctx = ctxOf({"x", "y"});
  CHECK(LieAlgebra::closure(fields(ctx, {"d_x", "d_y"})).isTransitiveAtOrigin());
  CHECK_FALSE(LieAlgebra::closure(fields(ctx, {"d_x", "y*d_x"}))
                  .isTransitiveAtOrigin());
}

TEST_CASE("every chain member is an ideal, dims decrease") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
  for (auto kind : {0, 1}) {
    SeriesReport r = kind == 0 ? L.derivedSeries() : L.lowerCentralSeries();
    for (std::size_t i = 0; i < r.chain.size(); ++i) {
      CHECK(L.isIdeal(r.chain[i]));
      if (i + 1 < r.chain.size())
        CHECK(r.dims[i + 1] < r.dims[i]);
    }
  }
}

TEST_CASE("quotientMap drops variables") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
  // the flag ideal generated by d_x, y*d_x lives in the x-direction
  Subspace ideal = Subspace::fromVectors(
      {*L.coordsOf(field("d_x", ctx)), *L.coordsOf(field("y*d_x", ctx))},
      L.dim());
  LieAlgebra Q = L.quotientMap(ideal, {0});
  CHECK(Q.dim() == 2);
  CHECK(Q.context().names == std::vector<std::string>{"y"});

  auto ab = ctxOf({"x", "y"});
  LieAlgebra A = LieAlgebra::closure(fields(ab, {"d_x", "d_y"}));
  Subspace ideal2 =
      Subspace::fromVectors({*A.coordsOf(field("d_y", ab))}, A.dim());
  LieAlgebra Q2 = A.quotientMap(ideal2, {1});
  CHECK(Q2.dim() == 1);

  // kept component depends on the dropped variable: rejected
  LieAlgebra B = LieAlgebra::closure(fields(ab, {"y*d_x", "d_x"}));
  Subspace ideal3 =
      Subspace::fromVectors({*B.coordsOf(field("d_x", ab))}, B.dim());
  CHECK_THROWS_AS(B.quotientMap(ideal3, {1}), Error);
}

TEST_CASE("quotientMap respects structure constants") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
  Subspace ideal = Subspace::fromVectors(
      {*L.coordsOf(field("d_x", ctx)), *L.coordsOf(field("y*d_x", ctx))},
      L.dim());
  LieAlgebra Q = L.quotientMap(ideal, {0});
  CHECK(Q.structure().antisymmetryHolds());
  CHECK(Q.structure().jacobiHolds());
}
