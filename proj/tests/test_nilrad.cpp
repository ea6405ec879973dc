#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "grading.hpp"
#include "nilrad.hpp"
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

// 4-dimensional trap: [x,v1] = v1, ad_x acts on (v2,v3) as the
// rotation-scaling with eigenvalues 1/4 +- 3/4 i, everything else commutes.
StructureTensor trapAlgebra() {
  StructureTensor t;
  t.dim = 4;
  t.c.assign(4, std::vector<QVec>(4, QVec(4, Rat(0))));
  auto setBracket = [&](std::size_t i, std::size_t j, QVec v) {
    t.c[i][j] = v;
    for (auto &q : v)
      q = -q;
    t.c[j][i] = v;
  };
  setBracket(0, 1, {Rat(0), Rat(1), Rat(0), Rat(0)});
  setBracket(0, 2, {Rat(0), Rat(0), Rat(1, 4), Rat(3, 4)});
  setBracket(0, 3, {Rat(0), Rat(0), Rat(-3, 4), Rat(1, 4)});
  return t;
}

// independent oracle: basis elements and pairwise rational combinations with
// nilpotent ad, span-reduced
Subspace adNilpotencyOracle(const StructureTensor &t) {
  std::vector<QVec> members;
  auto tryVec = [&](const QVec &v) {
    if (t.adMatrixOf(v).isNilpotentMatrix())
      members.push_back(v);
  };
  for (std::size_t i = 0; i < t.dim; ++i) {
    QVec v(t.dim, Rat(0));
    v[i] = 1;
    tryVec(v);
  }
  const Rat coeffs[] = {Rat(1), Rat(-1), Rat(1, 2), Rat(2)};
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = i + 1; j < t.dim; ++j)
      for (const Rat &a : coeffs) {
        QVec v(t.dim, Rat(0));
        v[i] = 1;
        v[j] = a;
        tryVec(v);
      }
  return Subspace::fromVectors(members, t.dim);
}

} // namespace

TEST_CASE("adjoint matrices of the affine line algebra") {
  auto ctx = ctxOf({"y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_y", "y*d_y"}));
  AdWorkspace w = adjointMatrices(L.structure());
  // [y d_y, d_y] = -d_y: entry (1,1) of ad(e2) is -1
  CHECK(w.adMatrices[1].at(0, 0) == Rat(-1));
  CHECK_FALSE(w.adMatrices[1].isNilpotentMatrix());
  CHECK(w.adMatrices[0].isNilpotentMatrix());
}

TEST_CASE("adjoint matrices of an abelian algebra vanish") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_x", "d_y"}));
  for (const auto &m : adjointMatrices(L.structure()).adMatrices)
    CHECK(m.isZero());
  AdWorkspace w = associativeEnvelope(adjointMatrices(L.structure()));
  CHECK(w.envelopeBasis.empty());
}

TEST_CASE("envelope of the affine line algebra has dimension 2") {
  auto ctx = ctxOf({"y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_y", "y*d_y"}));
  AdWorkspace w = associativeEnvelope(adjointMatrices(L.structure()));
  CHECK(w.envelopeBasis.size() == 2);
  auto radical = traceRadical(w);
  REQUIRE(radical.size() == 1);
  CHECK(radical[0].isNilpotentMatrix());
  Subspace nr = nilradical(L.structure());
  CHECK(nr.dim() == 1);
  CHECK(nr.contains(QVec{Rat(1), Rat(0)})); // d_y
}

TEST_CASE("envelope of a single nilpotent Jordan block is one-dimensional") {
  StructureTensor t;
  t.dim = 2;
  t.c.assign(2, std::vector<QVec>(2, QVec(2, Rat(0))));
  t.c[0][1] = {Rat(1), Rat(0)};
  t.c[1][0] = {Rat(-1), Rat(0)};
  AdWorkspace w = associativeEnvelope(adjointMatrices(t));
  CHECK(w.envelopeBasis.size() == 2); // ad e_1 and ad e_2 are independent
  // N^2 = 0 for each nilpotent generator alone
  AdWorkspace single;
  single.dim = 2;
  QMatrix N(2, 2);
  N.at(0, 1) = 1;
  single.adMatrices = {N};
  AdWorkspace env = associativeEnvelope(single);
  CHECK(env.envelopeBasis.size() == 1);
  auto rad = traceRadical(env);
  CHECK(rad.size() == 1);
}

TEST_CASE("nilpotent algebras are their own nilradical") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L =
      LieAlgebra::closure(fields(ctx, {"d_x", "d_y", "y*d_x", "y^2*d_x"}));
  Subspace nr = nilradical(L.structure());
  CHECK(nr.dim() == L.dim());
}

TEST_CASE("nilradical of the six-generator plane algebra") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
  Subspace nr = nilradical(L.structure());
  CHECK(nr.dim() == 4);
  for (const char *name : {"d_x", "d_y", "y^2*d_x", "y*d_x"})
    CHECK(nr.contains(*L.coordsOf(field(name, ctx))));
  CHECK_FALSE(nr.contains(*L.coordsOf(field("x*d_x", ctx))));
}

TEST_CASE("non-solvable input is rejected") {
  auto ctx = ctxOf({"x"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_x", "x*d_x", "x^2*d_x"}));
  CHECK_THROWS_AS(nilradical(L.structure()), Error);
}

TEST_CASE("trap algebra: envelope radical beats the naive trace kernel") {
  StructureTensor t = trapAlgebra();
  REQUIRE(t.jacobiHolds());
  REQUIRE(isSolvable(t));

  // the naive kernel of the trace form on L contains x ...
  QMatrix naiveGram(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      naiveGram.at(i, j) =
          t.adMatrix(i).multiply(t.adMatrix(j)).trace();
  QVec x{Rat(1), Rat(0), Rat(0), Rat(0)};
  CHECK(isZeroVec(naiveGram.apply(x)));
  // ... even though ad_x is not nilpotent: trace(ad_x^3 ad_x) = 39/32
  QMatrix adx = t.adMatrix(0);
  CHECK_FALSE(adx.isNilpotentMatrix());
  QMatrix adx2 = adx.multiply(adx);
  CHECK(adx2.multiply(adx2).trace() == Rat(39, 32));

  Subspace nr = nilradical(t);
  CHECK(nr.dim() == 3);
  CHECK_FALSE(nr.contains(x));
  for (std::size_t v = 1; v < 4; ++v) {
    QVec e(4, Rat(0));
    e[v] = 1;
    CHECK(nr.contains(e));
  }
}

TEST_CASE("nilradical series of the six-generator plane algebra") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
  SeriesReport r = nilradicalSeries(L);
  CHECK(r.dims == std::vector<std::size_t>{6, 4, 2, 1, 0});
  CHECK(r.dimsAtOrigin == std::vector<std::size_t>{2, 2, 1, 1, 0});
  REQUIRE(r.height.has_value());
  CHECK(*r.height == 3);
}

TEST_CASE("nilradical series of a nilpotent algebra repeats the top term") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L =
      LieAlgebra::closure(fields(ctx, {"d_x", "d_y", "y*d_x", "y^2*d_x"}));
  SeriesReport nil = nilradicalSeries(L);
  SeriesReport lcs = L.lowerCentralSeries();
  REQUIRE(nil.dims.size() == lcs.dims.size() + 1);
  for (std::size_t i = 0; i < lcs.dims.size(); ++i)
    CHECK(nil.dims[i + 1] == lcs.dims[i]);
}

TEST_CASE("certified maximality on random elements outside the nilradical") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
  Subspace nr = nilradical(L.structure());
  std::mt19937_64 rng(20240501);
  int tested = 0;
  while (tested < 100) {
    QVec v(L.dim());
    for (auto &q : v)
      q = randomRat(rng, 3, 2);
    if (nr.contains(v))
      continue;
    ++tested;
    REQUIRE_FALSE(L.structure().adMatrixOf(v).isNilpotentMatrix());
  }
}

TEST_CASE("oracle equivalence on random solvable instances") {
  std::mt19937_64 seeds(20240502);
  int done = 0;
  std::vector<Dilation> shapes;
  shapes.push_back({ctxOf({"y"}), {1}});
  shapes.push_back({ctxOf({"y", "z"}), {1, 2}});
  shapes.push_back({ctxOf({"x", "y"}), {1, 1}});
  shapes.push_back({ctxOf({"x", "y", "z"}), {1, 1, 2}});
  for (int iter = 0; done < 60; ++iter) {
    const Dilation &h = shapes[iter % shapes.size()];
    LieAlgebra L = randomSolvable(h, seeds());
    if (L.dim() > 6)
      continue;
    ++done;
    Subspace nr = nilradical(L.structure());
    Subspace oracle = adNilpotencyOracle(L.structure());
    REQUIRE(nr == oracle);
  }
}
