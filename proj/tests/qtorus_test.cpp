#include <doctest.h>

#include <random>

#include "cqwa/qtorus.hpp"
#include "oracles.hpp"

using namespace cqwa;

namespace {
const LaurentScalar q = LaurentScalar::q(), qi = LaurentScalar::q(-1);
TorusElement mono(const Exponent& e, const LaurentScalar& c = 1) {
  TorusElement t(e.size());
  t.add_term(e, c);
  return t;
}
SkewMatrix random_skew(std::mt19937& rng, std::size_t m) {
  std::uniform_int_distribution<long> d(-2, 2);
  IntMatrix u(m, m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) u(i, j) = d(rng);
  return SkewMatrix::from_upper(u);
}
TorusElement random_element(std::mt19937& rng, std::size_t m) {
  TorusElement t(m);
  std::uniform_int_distribution<int> terms(1, 3);
  for (int k = terms(rng); k > 0; --k) t.add_term(oracle::random_exponent(rng, m, 3, -3), oracle::random_scalar(rng));
  return t;
}
}  // namespace

TEST_CASE("generator swap") {
  SkewMatrix l = SkewMatrix::from_upper([] {
    IntMatrix u(2, 2, 0);
    u(0, 1) = 1;
    return u;
  }());
  CHECK(torus_mul(l, torus_gen(2, 1), torus_gen(2, 0)) == mono({1, 1}, qi));
  Exponent a{2, -1};
  TorusElement xa = mono(a), xna = mono({-2, 1});
  TorusElement p1 = torus_mul(l, xa, xna), p2 = torus_mul(l, xna, xa);
  CHECK(p1.size() == 1);
  CHECK(p1.leading().first == Exponent{0, 0});
  // x0^2 x1^-1 x0^-2 x1 and x0^-2 x1 x0^2 x1^-1 both pick up q^-2
  CHECK(p1 == p2);
  CHECK(p1 == torus_constant(2, LaurentScalar::q(-2)));
}

TEST_CASE("skew matrix validation") {
  IntMatrix m(2, 2, 0);
  m(0, 1) = 1;
  m(1, 0) = 1;
  CHECK_THROWS_AS(SkewMatrix{m}, Error);
}

TEST_CASE("torus products agree with letter-by-letter swapping") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = 2 + t % 5;
    SkewMatrix l = random_skew(rng, m);
    Exponent a = oracle::random_exponent(rng, m, 3, -3), b = oracle::random_exponent(rng, m, 3, -3);
    long k = oracle::torus_twist_by_swaps(l, a, b);
    CHECK(torus_mul(l, mono(a), mono(b)) == mono(a + b, qpow(int(k))));
    CHECK(ordered_twist(l, a, b) == k);
  }
}

TEST_CASE("associativity and unit on random elements") {
  std::mt19937 rng(12);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = 2 + t % 5;
    SkewMatrix l = random_skew(rng, m);
    TorusElement f = random_element(rng, m), g = random_element(rng, m), h = random_element(rng, m);
    CHECK(torus_mul(l, torus_mul(l, f, g), h) == torus_mul(l, f, torus_mul(l, g, h)));
    CHECK(torus_mul(l, f, torus_constant(m, 1)) == f);
    CHECK(torus_mul(l, torus_constant(m, 1), f) == f);
    CHECK(torus_mul(l, f + g, h) == torus_mul(l, f, h) + torus_mul(l, g, h));
  }
}

TEST_CASE("normalised monomials multiply with half the form") {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = 2 + t % 5;
    SkewMatrix l = random_skew(rng, m);
    Exponent a = oracle::random_exponent(rng, m, 3, -3), b = oracle::random_exponent(rng, m, 3, -3);
    TorusElement lhs = torus_mul(l, normalized_monomial(l, a), normalized_monomial(l, b));
    TorusElement rhs = normalized_monomial(l, a + b).scaled(qpow(Rational(l.form(a, b), 2)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("normalised monomial examples") {
  CHECK(normalized_monomial(parity_skew(4), {0, 0, 1, 0}) == torus_gen(4, 2));
  // a = -e_0 + e_1 + e_n on the cycle torus, n = 5
  SkewMatrix p = parity_skew(6);
  CHECK(normalized_monomial(p, {-1, 1, 0, 0, 0, 1}) == mono({-1, 1, 0, 0, 0, 1}, q));
  for (std::size_t i = 1; i < 6; ++i) {
    Exponent a(6, 0);
    a[i] = -1;
    a[i - 1] = 1;
    CHECK(normalized_monomial(p, a) == mono(a, LaurentScalar::v()));
  }
}

TEST_CASE("division in the torus") {
  std::mt19937 rng(14);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = 2 + t % 4;
    SkewMatrix l = random_skew(rng, m);
    TorusElement d = random_element(rng, m), x = random_element(rng, m);
    if (d.is_zero() || x.is_zero()) continue;
    CHECK(left_divide(l, d, torus_mul(l, d, x)) == x);
    CHECK(right_divide(l, d, torus_mul(l, x, d)) == x);
  }
  SkewMatrix p = parity_skew(2);
  TorusElement two = torus_constant(2, 1) + torus_gen(2, 0);
  CHECK_THROWS_AS(left_divide(p, two, torus_gen(2, 1)), Error);
  CHECK_THROWS_AS(torus_inverse(p, two), Error);
}

TEST_CASE("embedding of the linear algebra") {
  for (std::size_t n = 2; n <= 7; ++n) {
    Report r = check_v_embedding(n);
    CHECK_MESSAGE(r.passed(), format_report(r, true));
  }
}

TEST_CASE("splitting identity") {
  for (std::size_t n : {3, 5, 7})
    for (int lam : {0, 1, -2}) {
      Report r = check_splitting(n, lam);
      CHECK_MESSAGE(r.passed(), format_report(r, true));
    }
}

TEST_CASE("matrices used by the z-torus") {
  SkewMatrix a3 = alternating_skew(3);
  CHECK(a3(0, 1) == 1);
  CHECK(a3(0, 2) == 0);
  CHECK(a3(1, 2) == 0);
  SkewMatrix p6 = parity_skew(6);
  CHECK(p6(0, 3) == 1);
  CHECK(p6(0, 2) == 0);
  CHECK(p6(3, 0) == -1);
}
