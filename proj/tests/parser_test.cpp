#include <doctest.h>

#include <random>

#include "cqwa/expr.hpp"
#include "cqwa/render.hpp"
#include "oracles.hpp"

using namespace cqwa;

namespace {
std::size_t error_offset(const std::string& src, Context ctx) {
  try {
    parse(src, ctx);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    const std::string what = e.what();
    const auto at = what.rfind("at offset ");
    REQUIRE(at != std::string::npos);
    return std::stoul(what.substr(at + 10));
  }
  FAIL("no parse error for " << src);
  return 0;
}
}  // namespace

TEST_CASE("normal forms from text") {
  Presentation l3 = preset_linear(3);
  NCPoly a = eval_pbw(*parse("x3*x2*x1", Context::Pbw), l3, false);
  NCPoly b = eval_pbw(*parse("(x3*x2)*x1", Context::Pbw), l3, false);
  NCPoly c = eval_pbw(*parse("x3*(x2*x1)", Context::Pbw), l3, false);
  CHECK(a == b);
  CHECK(b == c);
  CHECK(a == multiply(l3, multiply(l3, gen(l3, 2), gen(l3, 1)), gen(l3, 0)));
  CHECK(render(a) == "q^-1*x1*x2*x3 + (1 - q^-1)*x1 + (1 - q^-1)*x3");
  CHECK(eval_pbw(*parse("x1*x2 - q*x2*x1", Context::Pbw), l3, false) == scalar(l3, 1 - LaurentScalar::q()));
  CHECK(eval_pbw(*parse("z2", Context::Pbw), l3, false) == z_element(l3, 2));
  Presentation c5 = preset_cyclic(5);
  CHECK(eval_pbw(*parse("Omega", Context::Pbw), c5, true) == omega(c5));
  CHECK(eval_pbw(*parse("q^(1/2)*x1", Context::Pbw), l3, false) == gen(l3, 0).scaled(LaurentScalar::v()));
  CHECK(eval_pbw(*parse("-x1^2", Context::Pbw), l3, false) == -power(l3, gen(l3, 0), 2));
}

TEST_CASE("torus and commutative text") {
  SkewMatrix l = alternating_skew(2);
  auto names = indexed_names("w", 2, 0);
  TorusElement e = eval_torus(*parse("w1*w0^-1", Context::Torus), l, names);
  CHECK(e == torus_mul(l, torus_gen(2, 1), torus_gen(2, 0, -1)));
  CPoly f = eval_poisson(*parse("2/3*x1^2 - x2", Context::Poisson), indexed_names("x", 2));
  CHECK(f == (cgen(2, 0) * cgen(2, 0)).scaled(Rational(2, 3)) - cgen(2, 1));
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_offset("x1 x2", Context::Pbw) == 3);
  CHECK(error_offset("x1*", Context::Pbw) == 3);
  CHECK(error_offset("x1*y2", Context::Pbw) == 3);
  CHECK(error_offset("x1^(1/2)", Context::Pbw) == 2);
  CHECK(error_offset("x1^-1", Context::Pbw) == 2);
  CHECK(error_offset("q*x1", Context::Poisson) == 0);
  CHECK(error_offset("(x1 + x2", Context::Pbw) == 8);
  CHECK(error_offset("q^(1/3)", Context::Pbw) == 1);
  CHECK_NOTHROW(parse("q^(-1/2)*x1", Context::Pbw));
  Presentation l3 = preset_linear(3);
  CHECK_THROWS_AS(eval_pbw(*parse("x4", Context::Pbw), l3, false), Error);
  CHECK_THROWS_AS(eval_pbw(*parse("Omega", Context::Pbw), l3, false), Error);
}

TEST_CASE("render then parse is the identity") {
  std::mt19937 rng(31);
  Presentation p = preset_linear(4);
  SkewMatrix l = parity_skew(4);
  auto wn = indexed_names("w", 4, 0);
  auto xn = indexed_names("x", 4);
  for (int t = 0; t < 120; ++t) {
    NCPoly f(4);
    TorusElement g(4);
    CPoly h(4);
    std::uniform_int_distribution<int> terms(0, 4), co(-5, 5), den(1, 4);
    for (int k = terms(rng); k > 0; --k) {
      f.add_term(oracle::random_exponent(rng, 4, 3), oracle::random_scalar(rng));
      g.add_term(oracle::random_exponent(rng, 4, 2, -2), oracle::random_scalar(rng));
      h.add_term(oracle::random_exponent(rng, 4, 2, -2), Rational(co(rng)) / den(rng));
    }
    CHECK(eval_pbw(*parse(render(f), Context::Pbw), p, false) == f);
    CHECK(eval_torus(*parse(render(g, wn), Context::Torus), l, wn) == g);
    CHECK(eval_poisson(*parse(render(h, xn), Context::Poisson), xn) == h);
  }
}
