#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "pipeline.hpp"
#include "testutil.hpp"

#include <map>

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

LieAlgebra planeSixAlgebra() {
  auto ctx = ctxOf({"x", "y"});
  return LieAlgebra::closure(fields(
      ctx, {"d_x", "d_y", "x*d_x", "y*d_y", "y^2*d_x", "y*d_x"}));
}

LieAlgebra planeNilpotentAlgebra() {
  auto ctx = ctxOf({"x", "y"});
  return LieAlgebra::closure(fields(ctx, {"d_x", "d_y", "y*d_x", "y^2*d_x"}));
}

// weight of each ORIGINAL variable, read off a permutation-like chart
std::map<std::string, unsigned>
weightsByOriginalName(const NormalizationCertificate &cert) {
  std::map<std::string, unsigned> out;
  for (std::size_t i = 0; i < cert.newNames.size(); ++i)
    out[cert.newNames[i]] = cert.weights[i];
  return out;
}

} // namespace

TEST_CASE("flag profile of the six-generator plane algebra") {
  LieAlgebra L = planeSixAlgebra();
  SeriesReport series = nilradicalSeries(L);
  REQUIRE(series.dimsAtOrigin == std::vector<std::size_t>{2, 2, 1, 1, 0});
  FlagProfile p = flagProfile(series, 2);
  CHECK(p.r == std::vector<std::size_t>{1, 3});
  CHECK(p.a == std::vector<std::size_t>{1, 1});
  CHECK(p.b == std::vector<std::size_t>{1, 2});
  CHECK(p.m == 2);
  CHECK(p.k == 3);
  CHECK(deriveWeights(p) == std::vector<unsigned>{1, 3});
}

TEST_CASE("flag profile of the nilpotent example") {
  LieAlgebra L = planeNilpotentAlgebra();
  SeriesReport series = L.lowerCentralSeries();
  REQUIRE(series.dimsAtOrigin == std::vector<std::size_t>{2, 1, 1, 0});
  FlagProfile p = flagProfile(series, 2);
  CHECK(p.r == std::vector<std::size_t>{1, 3});
  CHECK(p.a == std::vector<std::size_t>{1, 1});
  CHECK(deriveWeights(p) == std::vector<unsigned>{1, 3});
}

TEST_CASE("flag profile for the affine line: single block of weight 1") {
  auto ctx = ctxOf({"y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_y", "y*d_y"}));
  SeriesReport series = nilradicalSeries(L);
  CHECK(series.dimsAtOrigin == std::vector<std::size_t>{1, 1, 0});
  FlagProfile p = flagProfile(series, 1);
  CHECK(p.r == std::vector<std::size_t>{1});
  CHECK(deriveWeights(p) == std::vector<unsigned>{1});
}

TEST_CASE("abelian transitive case: all weights 1") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_x", "d_y"}));
  FlagProfile p = flagProfile(L.lowerCentralSeries(), 2);
  CHECK(p.r == std::vector<std::size_t>{1});
  CHECK(p.a == std::vector<std::size_t>{2});
  CHECK(deriveWeights(p) == std::vector<unsigned>{1, 1});
}

TEST_CASE("flag profile requires transitivity") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_x", "y*d_x"}));
  CHECK_THROWS_AS(flagProfile(L.lowerCentralSeries(), 2), Error);
}

TEST_CASE("adapted frames pick the earliest independent fields per layer") {
  LieAlgebra L = planeSixAlgebra();
  SeriesReport series = nilradicalSeries(L);
  FlagProfile p = flagProfile(series, 2);
  AdaptedFrame frame = adaptedFrame(L, series, p);
  REQUIRE(frame.fields.size() == 2);
  auto ctx = L.context();
  CHECK(frame.fields[0] == field("d_y", ctx));
  CHECK(frame.fields[1] == field("d_x", ctx));

  auto ab = ctxOf({"x", "y"});
  LieAlgebra A = LieAlgebra::closure(fields(ab, {"d_x", "d_y"}));
  AdaptedFrame af =
      adaptedFrame(A, A.lowerCentralSeries(),
                   flagProfile(A.lowerCentralSeries(), 2));
  CHECK(af.fields == fields(ab, {"d_x", "d_y"}));
}

TEST_CASE("buildChart yields the identity in (y, x) order for the nilpotent "
          "example") {
  LieAlgebra L = planeNilpotentAlgebra();
  SeriesReport series = L.lowerCentralSeries();
  FlagProfile p = flagProfile(series, 2);
  AdaptedFrame frame = adaptedFrame(L, series, p);
  JetMap chart = buildChart(frame, p, 6);
  // new coordinates are (y, x): the chart swaps the variables
  auto ctx = L.context();
  CHECK(chart.components[0] == truncate(coeff("y", ctx), 6));
  CHECK(chart.components[1] == truncate(coeff("x", ctx), 6));
}

TEST_CASE("buildChart duality oracle: frame pushes to coordinate fields "
          "modulo the next flag level") {
  LieAlgebra L = planeSixAlgebra();
  SeriesReport series = nilradicalSeries(L);
  FlagProfile p = flagProfile(series, 2);
  AdaptedFrame frame = adaptedFrame(L, series, p);
  unsigned N = 6;
  JetMap chart = buildChart(frame, p, N);
  for (std::size_t k = 0; k < frame.fields.size(); ++k) {
    JetField img = pushforward(truncate(frame.fields[k], N), chart);
    // component k equals 1, earlier components vanish; deeper directions
    // may carry flag corrections
    CHECK(img.components[k] ==
          JetFunction::constant(2, N - 1, Rat(1)));
    for (std::size_t early = 0; early < k; ++early)
      CHECK(img.components[early].isZero());
  }
}

TEST_CASE("normalize certifies the six-generator plane algebra") {
  LieAlgebra L = planeSixAlgebra();
  NormalizationCertificate cert = normalize(L);
  REQUIRE(cert.status == CertStatus::Certified);
  CHECK(cert.pathUsed == SeriesPath::Solvable);
  CHECK(cert.weights == std::vector<unsigned>{1, 3});
  auto byName = weightsByOriginalName(cert);
  CHECK(byName.at("y") == 1);
  CHECK(byName.at("x") == 3);
  CHECK(cert.chartIsLinear);
  CHECK(cert.zeroPartCommutes);
  CHECK_FALSE(cert.zeroWeightBlock);

  // degree table {d_x: -3, d_y: -1, x d_x: 0, y d_y: 0, y^2 d_x: -1,
  // y d_x: -2} in the input basis order
  std::vector<long> expected{-3, -1, 0, 0, -1, -2};
  REQUIRE(cert.perBasisDegrees.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(*cert.perBasisDegrees[i] == expected[i]);

  // independent re-check by the grading module on the transformed fields
  REQUIRE(cert.transformedBasis.has_value());
  Dilation h{cert.newContext(), cert.weights};
  CHECK(membership(*cert.transformedBasis, h, MembershipMode::NonPositive)
            .holds);
  CHECK_FALSE(
      membership(*cert.transformedBasis, h, MembershipMode::StrictlyNegative)
          .holds);
}

TEST_CASE("normalize certifies the nilpotent example with degrees <= -1") {
  LieAlgebra L = planeNilpotentAlgebra();
  NormalizationCertificate cert = normalize(L);
  REQUIRE(cert.status == CertStatus::CertifiedNilpotent);
  auto byName = weightsByOriginalName(cert);
  CHECK(byName.at("y") == 1);
  CHECK(byName.at("x") == 3);
  for (const auto &deg : cert.perBasisDegrees) {
    REQUIRE(deg.has_value());
    CHECK(*deg <= -1);
  }
  // L^j sits in degrees <= -j
  REQUIRE(cert.seriesDegreeBounds.size() == 3);
  for (std::size_t s = 1; s <= 3; ++s)
    CHECK(*cert.seriesDegreeBounds[s - 1] <= -static_cast<long>(s));
}

TEST_CASE("n = 1 classification outcomes") {
  auto ctx = ctxOf({"y"});
  LieAlgebra trans = LieAlgebra::closure(fields(ctx, {"d_y"}));
  NormalizationCertificate c1 = normalize(trans);
  CHECK(c1.status == CertStatus::CertifiedNilpotent);
  CHECK(c1.weights == std::vector<unsigned>{1});
  CHECK(*c1.perBasisDegrees[0] == -1);

  LieAlgebra affine = LieAlgebra::closure(fields(ctx, {"d_y", "y*d_y"}));
  NormalizationCertificate c2 = normalize(affine);
  CHECK(c2.status == CertStatus::Certified);
  CHECK(c2.weights == std::vector<unsigned>{1});
  std::vector<long> degs;
  for (const auto &d : c2.perBasisDegrees)
    degs.push_back(*d);
  CHECK(degs == std::vector<long>{-1, 0});
}

TEST_CASE("non-transitive and non-solvable inputs are rejected") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra flat = LieAlgebra::closure(fields(ctx, {"d_x", "y*d_x"}));
  CHECK_THROWS_AS(normalize(flat), Error);
  auto line = ctxOf({"x"});
  LieAlgebra sl2 =
      LieAlgebra::closure(fields(line, {"d_x", "x*d_x", "x^2*d_x"}));
  CHECK_THROWS_AS(normalize(sl2), Error);
  LieAlgebra nil = planeSixAlgebra();
  NormalizeOptions wantNilpotent;
  wantNilpotent.path = SeriesPath::Nilpotent;
  CHECK_THROWS_AS(normalize(nil, wantNilpotent), Error);
}

TEST_CASE("a non-adapted abelian input needs a quadratic chart") {
  auto ctx = ctxOf({"x", "y"});
  // the pushforward of <d_x, d_y> under y -> y + x^2
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_x + 2*x*d_y", "d_y"}));
  NormalizationCertificate cert = normalize(L);
  REQUIRE(cert.status == CertStatus::CertifiedNilpotent);
  CHECK_FALSE(cert.chartIsLinear);
  CHECK(cert.weights == std::vector<unsigned>{1, 1});
  // the chart straightens the parabola: second component is y - x^2
  CHECK(cert.chart.components[1] ==
        truncate(coeff("y - x^2", ctx), cert.jetOrder));
  for (const auto &d : cert.perBasisDegrees)
    CHECK(*d <= -1);
}

TEST_CASE("the flows strategy certifies the same examples") {
  NormalizeOptions flows;
  flows.strategy = ChartStrategy::Flows;
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_x + 2*x*d_y", "d_y"}));
  NormalizationCertificate cert = normalize(L, flows);
  REQUIRE(cert.status == CertStatus::CertifiedNilpotent);
  CHECK_FALSE(cert.chartIsLinear);
}

TEST_CASE("weights are a function of the series dimensions alone") {
  // two different algebras with the same dimsAtOrigin sequence
  LieAlgebra a = planeNilpotentAlgebra();
  auto ctx = ctxOf({"u", "v"});
  LieAlgebra b = LieAlgebra::closure(
      fields(ctx, {"d_u", "d_v", "v*d_u", "v^2*d_u"}));
  NormalizationCertificate ca = normalize(a), cb = normalize(b);
  auto sortedWeights = [](const NormalizationCertificate &c) {
    auto w = c.weights;
    std::sort(w.begin(), w.end());
    return w;
  };
  CHECK(sortedWeights(ca) == sortedWeights(cb));
}

TEST_CASE("round trip on randomly generated graded algebras") {
  std::mt19937_64 seeds(20240801);
  std::vector<Dilation> shapes;
  shapes.push_back({ctxOf({"y", "z"}), {1, 2}});
  shapes.push_back({ctxOf({"x", "y"}), {0, 1}});
  shapes.push_back({ctxOf({"x", "y", "z"}), {0, 1, 2}});
  shapes.push_back({ctxOf({"y", "z", "u"}), {1, 2, 3}});
  for (int iter = 0; iter < 40; ++iter) {
    const Dilation &h = shapes[iter % shapes.size()];
    LieAlgebra L = randomSolvable(h, seeds());
    NormalizationCertificate cert = normalize(L);
    REQUIRE(cert.certified());
    // the induced flag dims match the algebra's own series dims at origin
    SeriesReport series = cert.series;
    std::vector<unsigned> sortedW = cert.weights;
    std::sort(sortedW.begin(), sortedW.end());
    std::vector<unsigned> expect;
    for (std::size_t j = 0; j < cert.profile.m; ++j)
      for (std::size_t i = 0; i < cert.profile.a[j]; ++i)
        expect.push_back(static_cast<unsigned>(cert.profile.r[j]));
    std::sort(expect.begin(), expect.end());
    REQUIRE(sortedW == expect);
    // soundness: independent membership re-check on the ring output
    if (cert.transformedBasis) {
      Dilation hw{cert.newContext(), cert.weights};
      REQUIRE(membership(*cert.transformedBasis, hw,
                         MembershipMode::NonPositive)
                  .holds);
    }
  }
}
