#include <doctest.h>

#include <random>

#include "cqwa/pbw.hpp"
#include "oracles.hpp"

using namespace cqwa;

namespace {
const LaurentScalar q = LaurentScalar::q(), qi = LaurentScalar::q(-1), k1 = 1;
NCPoly mono(std::size_t n, Exponent e, const LaurentScalar& c = 1) {
  NCPoly p(n);
  p.add_term(e, c);
  return p;
}
}  // namespace

TEST_CASE("linear preset relations") {
  Presentation l2 = preset_linear(2);
  CHECK(l2.q(0, 1) == q);
  CHECK(l2.r(0, 1) == k1 - q);
  Presentation l3 = preset_linear(3);
  CHECK(l3.q(0, 2) == qi);
  CHECK(l3.r(0, 2).is_zero());
  auto g = generator_graph(preset_linear(5));
  CHECK(g.edge_count() == 4);
  CHECK(g.max_degree() == 2);
  CHECK(g.connected());
}

TEST_CASE("cyclic preset relations") {
  Presentation c3 = preset_cyclic(3);
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t j = (i + 1) % 3;
    CHECK(c3.q(i, j) == q);
    CHECK(c3.r(i, j) == k1 - q);
  }
  auto g = generator_graph(preset_cyclic(5));
  CHECK(g.edge_count() == 5);
  CHECK(g.max_degree() == 2);
  CHECK_THROWS_AS(preset_cyclic(4), Error);
}

TEST_CASE("products of generators") {
  Presentation l2 = preset_linear(2), l3 = preset_linear(3);
  CHECK(multiply(l2, gen(l2, 1), gen(l2, 0)) == mono(2, {1, 1}, qi) + scalar(l2, k1 - qi));
  CHECK(multiply(l3, gen(l3, 2), gen(l3, 0)) == mono(3, {1, 0, 1}, q));
  NCPoly left = multiply(l3, multiply(l3, gen(l3, 2), gen(l3, 1)), gen(l3, 0));
  NCPoly right = multiply(l3, gen(l3, 2), multiply(l3, gen(l3, 1), gen(l3, 0)));
  CHECK(left == right);
  CHECK(left == oracle::rightmost_reduce(l3, {2, 1, 0}));
  CHECK(left == free_reduce(l3, {2, 1, 0}));
}

TEST_CASE("q-commutators in the cyclic algebra") {
  Presentation c5 = preset_cyclic(5);
  CHECK(q_commutator(c5, gen(c5, 0), gen(c5, 1), q) == scalar(c5, k1 - q));
  for (std::size_t k = 1; k < 5; ++k)
    CHECK(q_commutator(c5, gen(c5, k), gen(c5, k - 1), q) ==
          multiply(c5, gen(c5, k - 1), gen(c5, k)).scaled(qi - q) + scalar(c5, k1 - qi));
  NCPoly f = gen(c5, 0) + multiply(c5, gen(c5, 2), gen(c5, 3));
  CHECK(commutator(c5, f, f).is_zero());
}

TEST_CASE("PBW check and the overlap oracle on examples") {
  CHECK(pbw_check(preset_linear(5)));
  CHECK(pbw_check(preset_cyclic(5)));
  CHECK(diamond_oracle(preset_cyclic(3)).resolvable);
  CHECK(diamond_oracle(preset_linear(2)).resolvable);

  Presentation l3 = preset_linear(3);
  Matrix<LaurentScalar> qt = l3.q_table(), rt = l3.r_table();
  qt(0, 2) = q;
  qt(2, 0) = qi;
  Presentation broken(qt, rt);
  CHECK_FALSE(pbw_check(broken));
  DiamondResult d = diamond_oracle(broken);
  CHECK_FALSE(d.resolvable);
  CHECK(d.failing.size() == 1);
  CHECK_THROWS_AS(multiply(broken, gen(broken, 2), gen(broken, 0)), Error);
}

TEST_CASE("presentation validation") {
  Matrix<LaurentScalar> qt(2, 2, k1), rt(2, 2, LaurentScalar(0));
  qt(0, 1) = q;
  qt(1, 0) = q;  // should be q^-1
  CHECK_THROWS_AS(Presentation(qt, rt), Error);
  qt(1, 0) = qi;
  rt(0, 1) = k1 - q;
  rt(1, 0) = k1 - q;  // should be -q^-1 (1 - q)
  CHECK_THROWS_AS(Presentation(qt, rt), Error);
}

TEST_CASE("single parameter") {
  CHECK(single_parameter(preset_linear(4)) == q);
  CHECK(single_parameter(preset_cyclic(5)) == q);
  // two disconnected blocks with parameters q and q^3
  Matrix<LaurentScalar> qt(4, 4, k1), rt(4, 4, LaurentScalar(0));
  qt(0, 1) = q;
  rt(0, 1) = k1 - q;
  qt(2, 3) = LaurentScalar::q(3);
  rt(2, 3) = k1 - LaurentScalar::q(3);
  Presentation p = Presentation::from_upper(qt, rt);
  try {
    single_parameter(p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConnected);
  }
}

TEST_CASE("multiply is associative and matches word rewriting") {
  for (auto [fam, n] : {std::pair{Family::Linear, 3}, {Family::Linear, 5}, {Family::Cyclic, 3}, {Family::Cyclic, 5}}) {
    Presentation p = preset(fam, std::size_t(n));
    std::mt19937 rng(100 + n);
    for (int t = 0; t < 25; ++t) {
      Exponent a = oracle::random_exponent(rng, p.n(), 2), b = oracle::random_exponent(rng, p.n(), 1),
               c = oracle::random_exponent(rng, p.n(), 1);
      NCPoly fa = mono(p.n(), a), fb = mono(p.n(), b), fc = mono(p.n(), c);
      NCPoly ab = multiply(p, fa, fb);
      CHECK(ab == oracle::word_product(p, a, b));
      CHECK(multiply(p, ab, fc) == multiply(p, fa, multiply(p, fb, fc)));
      // normal forms are fixed points
      CHECK(multiply(p, ab, one(p)) == ab);
    }
  }
}

TEST_CASE("z elements") {
  Presentation l3 = preset_linear(3);
  CHECK(z_element(l3, 1) == gen(l3, 0));
  CHECK(z_element(l3, 2) == mono(3, {1, 1, 0}) - one(l3));
  CHECK(z_element(l3, 3) == mono(3, {1, 1, 1}) - gen(l3, 0) - gen(l3, 2));
  CHECK(z_element(l3, -1).is_zero());
}

TEST_CASE("z_i z_j quasi-commute in the linear algebra") {
  for (std::size_t n : {3, 4, 5}) {
    Presentation p = preset_linear(n);
    auto z = z_sequence(p, n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        int lam = (j % 2 == 0 && i % 2 == 1) ? 1 : 0;
        CHECK(multiply(p, z[i], z[j]) == multiply(p, z[j], z[i]).scaled(qpow(lam)));
      }
  }
}

TEST_CASE("omega is central and theta-fixed") {
  Presentation c3 = preset_cyclic(3);
  NCPoly om = omega(c3);
  NCPoly expect = multiply(c3, mono(3, {1, 1, 0}) - one(c3), gen(c3, 2)) - gen(c3, 0) - gen(c3, 1).scaled(q);
  CHECK(om == expect);
  for (std::size_t n : {3, 5}) {
    Presentation c = preset_cyclic(n);
    NCPoly o = omega(c);
    for (std::size_t i = 0; i < n; ++i) CHECK(commutator(c, o, gen(c, i)).is_zero());
    CHECK(apply_hom(theta_cyclic(n), o) == o);
  }
}

TEST_CASE("z_4 is normal in L_4") {
  Presentation l4 = preset_linear(4);
  NCPoly z4 = z_element(l4, 4);
  CHECK(multiply(l4, z4, gen(l4, 0)) == multiply(l4, gen(l4, 0), z4).scaled(qi));
}

TEST_CASE("named homomorphisms") {
  std::string why;
  CHECK(check_hom(theta_cyclic(5), &why));
  CHECK(check_hom(iota_linear(4, LaurentScalar::v()), &why));
  CHECK(check_hom(reversal(Family::Linear, 4), &why));
  CHECK(check_hom(reversal(Family::Cyclic, 5), &why));
  CHECK(check_hom(theta_linear(4), &why));
  CHECK(order_on_generators(theta_cyclic(5), 20) == 5);
  CHECK(order_on_generators(compose(iota_cyclic(5), theta_cyclic(5)), 30) == 10);
  // a map that breaks a relation
  HomSpec bad = theta_cyclic(5);
  bad.images[0] = bad.images[0].scaled(2);
  CHECK_FALSE(check_hom(bad, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("transform rescales and reorders") {
  Presentation l3 = preset_linear(3);
  Presentation t = transform(l3, {1, 0, 2}, {1, 1, 1});
  CHECK(t.q(0, 1) == qi);
  CHECK(t.r(0, 1) == l3.r(1, 0));
  Presentation s = transform(l3, {0, 1, 2}, {2, 1, 1});
  CHECK(s.r(0, 1) == (k1 - q) * LaurentScalar(2));
}
