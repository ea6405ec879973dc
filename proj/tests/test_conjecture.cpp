#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conjecture.hpp"
#include "errors.hpp"
#include "testutil.hpp"

#include <algorithm>

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

// substitute-and-expand oracle: the recurrence annihilates every family
// member, exactly in the ring
bool annihilates(const Recurrence &rec) {
  for (const ExpPoly &f : rec.family) {
    ExpPoly acc(f.arity());
    ExpPoly der = f;
    for (std::size_t s = 0; s < rec.coefficients.size(); ++s) {
      acc = acc.plus(der.scaled(rec.coefficients[s]));
      der = der.partial(rec.direction);
    }
    if (!acc.isZero())
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("recurrence of a single exponential") {
  auto ctx = ctxOf({"x"});
  Recurrence rec = iteratedDerivativeRecurrence({coeff("exp(2*x)", ctx)}, 0);
  CHECK(rec.order() == 1);
  CHECK(rec.coefficients == std::vector<Rat>{Rat(-2), Rat(1)});
  CHECK(annihilates(rec));
}

TEST_CASE("recurrence of the harmonic pair") {
  auto ctx = ctxOf({"x"});
  Recurrence rec = iteratedDerivativeRecurrence(
      {coeff("sin(x)", ctx), coeff("cos(x)", ctx)}, 0);
  CHECK(rec.order() == 2);
  CHECK(rec.coefficients == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  CHECK(annihilates(rec));
}

TEST_CASE("recurrence of x exp(x): repeated root") {
  auto ctx = ctxOf({"x"});
  Recurrence rec = iteratedDerivativeRecurrence({coeff("x*exp(x)", ctx)}, 0);
  CHECK(rec.order() == 2);
  CHECK(rec.coefficients == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});
  CHECK(annihilates(rec));
}

TEST_CASE("recurrence minimality: the prefix rows stay independent") {
  std::mt19937_64 rng(20240901);
  auto ctx = ctxOf({"x", "y"});
  for (int iter = 0; iter < 100; ++iter) {
    ExpPoly f = randomExpPoly(rng, 2, 4);
    if (f.isZero())
      continue;
    Recurrence rec = iteratedDerivativeRecurrence({f}, iter % 2);
    REQUIRE(annihilates(rec));
    // dropping the top term leaves an inconsistent system: the derivatives
    // 0..order-1 must be linearly independent
    std::vector<ExpPoly> prefix;
    ExpPoly der = f;
    for (std::size_t s = 0; s < rec.order(); ++s) {
      prefix.push_back(der);
      der = der.partial(rec.direction);
    }
    REQUIRE(coordinateMatrix(prefix).matrix.rank() == rec.order());
  }
}

TEST_CASE("spectrum of exp(2x)") {
  auto ctx = ctxOf({"x"});
  SpectrumReport s =
      spectrum(iteratedDerivativeRecurrence({coeff("exp(2*x)", ctx)}, 0));
  REQUIRE(s.rationalRoots.size() == 1);
  CHECK(s.rationalRoots[0] == std::pair<Rat, unsigned>{Rat(2), 1});
  CHECK(s.complexPairs.empty());
  CHECK(s.fullyResolved());
}

TEST_CASE("spectrum of the harmonic pair") {
  auto ctx = ctxOf({"x"});
  SpectrumReport s = spectrum(iteratedDerivativeRecurrence(
      {coeff("sin(x)", ctx), coeff("cos(x)", ctx)}, 0));
  CHECK(s.rationalRoots.empty());
  REQUIRE(s.complexPairs.size() == 1);
  CHECK(s.complexPairs[0].first == std::pair<Rat, Rat>{Rat(0), Rat(1)});
  CHECK(s.fullyResolved());
}

TEST_CASE("spectrum with a damped pair and a repeated rational root") {
  auto ctx = ctxOf({"x"});
  Recurrence rec = iteratedDerivativeRecurrence(
      {coeff("exp(x)*sin(2*x)", ctx), coeff("x*exp(3*x)", ctx)}, 0);
  SpectrumReport s = spectrum(rec);
  REQUIRE(s.rationalRoots.size() == 1);
  CHECK(s.rationalRoots[0] == std::pair<Rat, unsigned>{Rat(3), 2});
  REQUIRE(s.complexPairs.size() == 1);
  CHECK(s.complexPairs[0].first == std::pair<Rat, Rat>{Rat(1), Rat(2)});
  CHECK(s.fullyResolved());
}

TEST_CASE("an irreducible cubic stays unresolved") {
  // synthetic recurrence f''' = 2 f: characteristic t^3 - 2
  Recurrence rec;
  rec.direction = 0;
  rec.family = {ExpPoly::constant(1, Rat(1))}; // placeholder family
  rec.coefficients = {Rat(-2), Rat(0), Rat(0), Rat(1)};
  SpectrumReport s = spectrum(rec);
  CHECK(s.rationalRoots.empty());
  CHECK(s.complexPairs.empty());
  REQUIRE(s.unresolved.size() == 1);
  CHECK(s.unresolved[0] == QPoly{Rat(-2), Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("witness for the affine line: coordinates only") {
  auto ctx = ctxOf({"y"});
  LieAlgebra L = LieAlgebra::closure(fields(ctx, {"d_y", "y*d_y"}));
  NormalizationCertificate cert = normalize(L);
  REQUIRE(cert.certified());
  LieWitness w = lieWitness(cert);
  CHECK(w.verdict == LieWitness::Verdict::Witnessed);
  CHECK(w.coordinateGenerators == std::vector<std::string>{"y"});
  CHECK(w.exponentialGenerators.empty());
}

TEST_CASE("witness for a purely polynomial nilpotent algebra") {
  auto ctx = ctxOf({"x", "y"});
  LieAlgebra L =
      LieAlgebra::closure(fields(ctx, {"d_x", "d_y", "y*d_x", "y^2*d_x"}));
  NormalizationCertificate cert = normalize(L);
  REQUIRE(cert.certified());
  LieWitness w = lieWitness(cert);
  CHECK(w.verdict == LieWitness::Verdict::Witnessed);
  CHECK(w.exponentialGenerators.empty());
  for (const auto &r : w.receipts)
    CHECK(r.covered);
}

TEST_CASE("witness with exponential and trigonometric coefficients") {
  auto ctx = ctxOf({"x", "u"});
  // dilational on (x of weight 0, u of weight 1)
  LieAlgebra L = LieAlgebra::closure(
      fields(ctx, {"d_x", "u*d_u", "exp(2*x)*d_u", "sin(x)*d_u",
                   "cos(x)*d_u", "d_u"}));
  REQUIRE(L.dim() == 6);
  NormalizationCertificate cert = normalize(L);
  REQUIRE(cert.status == CertStatus::Certified);
  LieWitness w = lieWitness(cert);
  CHECK(w.verdict == LieWitness::Verdict::Witnessed);
  std::vector<std::string> expected{"exp(2*x)", "cos(x)", "sin(x)"};
  CHECK(w.exponentialGenerators == expected);
}

TEST_CASE("witness requires a certified input") {
  NormalizationCertificate cert;
  cert.status = CertStatus::Failed;
  CHECK_THROWS_AS(lieWitness(cert), Error);
}

TEST_CASE("differential closure: derivatives of coefficients stay covered") {
  auto ctx = ctxOf({"x", "u"});
  LieAlgebra L = LieAlgebra::closure(
      fields(ctx, {"d_x", "u*d_u", "exp(2*x)*d_u", "sin(x)*d_u",
                   "cos(x)*d_u", "d_u"}));
  NormalizationCertificate cert = normalize(L);
  LieWitness w = lieWitness(cert);
  REQUIRE(w.verdict == LieWitness::Verdict::Witnessed);
  // the d_x-derivative of every receipt coefficient keeps its signatures
  // inside the realized set: closure under the derivation
  for (const auto &dir : w.perDirection)
    for (const ExpPoly &f : dir.recurrence.family) {
      ExpPoly df = f.partial(dir.direction);
      for (const RingTerm &t : df.terms()) {
        Rat lambda = t.key.expFreq.entries[dir.direction];
        Rat mu = t.key.trig == TrigKind::None
                     ? Rat(0)
                     : t.key.trigFreq.entries[dir.direction];
        bool covered = false;
        if (isZero(mu)) {
          covered = isZero(lambda);
          for (const auto &[root, mult] : dir.spectrum.rationalRoots)
            covered |= root == lambda;
        } else {
          for (const auto &[pair, mult] : dir.spectrum.complexPairs)
            covered |= pair.first == lambda && pair.second == abs(mu);
        }
        REQUIRE(covered);
      }
    }
}
