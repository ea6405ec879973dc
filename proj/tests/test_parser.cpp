#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "testutil.hpp"

using namespace lievec;
using namespace lievec::test;

TEST_CASE("grammar examples") {
  auto ctx = ctxOf({"x", "y", "u"});
  VectorField f = parseField("y^2*d_x - u*d_u", ctx);
  CHECK(f.component(0) == coeff("y^2", ctx));
  CHECK(f.component(2) == coeff("-1*u", ctx));

  VectorField g = parseField("exp(2 x)*d_u", ctx);
  CHECK(g.component(2) == coeff("exp(2*x)", ctx));

  VectorField h = parseField("sin(x)*y*d_u", ctx);
  CHECK(h.component(2) == coeff("sin(x)*y", ctx));
}

TEST_CASE("whitespace insensitivity") {
  auto ctx = ctxOf({"x", "y"});
  CHECK(parseField("y ^ 2 * d_x", ctx) == parseField("y^2*d_x", ctx));
  CHECK(parseField("exp( 1/2 * x )*d_y", ctx) ==
        parseField("exp(1/2 x)*d_y", ctx));
}

TEST_CASE("parse errors carry line and column") {
  auto ctx = ctxOf({"x", "y"});
  try {
    parseField("y^2*d_z", ctx);
    FAIL("expected a parse error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(parseField("", ctx), Error);
  CHECK_THROWS_AS(parseField("d_x +", ctx), Error);
  CHECK_THROWS_AS(parseField("sin(x*d_x", ctx), Error);
  CHECK_THROWS_AS(parseField("2*3*d_x junk", ctx), Error);
}

TEST_CASE("algebra file round trip") {
  std::string text = "vars x, y\n"
                     "weights 1, 3\n"
                     "# a comment\n"
                     "gen d_x\n"
                     "gen y^2*d_x - 1/2*d_y\n";
  AlgebraFile file = parseAlgebraFile(text);
  CHECK(file.context.names == std::vector<std::string>{"x", "y"});
  REQUIRE(file.weights.has_value());
  CHECK(*file.weights == std::vector<unsigned>{1, 3});
  REQUIRE(file.generators.size() == 2);
  AlgebraFile again = parseAlgebraFile(printAlgebraFile(file));
  CHECK(again.context == file.context);
  CHECK(again.generators == file.generators);
  CHECK(again.weights == file.weights);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(parseAlgebraFile("gen d_x\n"), Error);          // no vars
  CHECK_THROWS_AS(parseAlgebraFile("vars x, x\ngen d_x\n"), Error);
  CHECK_THROWS_AS(parseAlgebraFile("vars x\nweights 1, 2\n"), Error);
  CHECK_THROWS_AS(parseAlgebraFile("vars exp\n"), Error);
  CHECK_THROWS_AS(parseAlgebraFile("vars x\nbogus d_x\n"), Error);
}

TEST_CASE("print/parse round trip on randomized fields") {
  std::mt19937_64 rng(20240401);
  auto ctx = ctxOf({"x", "y", "z"});
  for (int iter = 0; iter < 300; ++iter) {
    VectorField f = randomField(rng, ctx, 5);
    VectorField back = parseField(printField(f), ctx);
    REQUIRE(back == f);
  }
}

TEST_CASE("zero field prints and parses") {
  auto ctx = ctxOf({"x"});
  CHECK(printField(VectorField::zero(ctx)) == "0");
  CHECK(parseField("0", ctx).isZero());
}
