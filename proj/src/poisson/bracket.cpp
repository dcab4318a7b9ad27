#include "cqwa/poisson.hpp"

namespace cqwa {

BracketTable::BracketTable(std::size_t m, Ambient ambient, const Matrix<CPoly>& upper)
    : m_(m), ambient_(ambient), entries_(m, m, CPoly(m)) {
  if (upper.rows() != m || upper.cols() != m) throw Error(ErrorKind::DimensionMismatch, "bracket table size");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const CPoly& e = upper(i, j);
      if (e.nvars() != m) throw Error(ErrorKind::DimensionMismatch, "bracket entry ring");
      if (ambient == Ambient::Polynomial)
        for (const auto& [x, c] : e.terms())
          for (int a : x)
            if (a < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in a polynomial bracket");
      entries_(i, j) = e;
      entries_(j, i) = -e;
    }
}

CPoly bracket(const BracketTable& t, const CPoly& f, const CPoly& g) {
  const std::size_t m = t.m();
  if (f.nvars() != m || g.nvars() != m) throw Error(ErrorKind::DimensionMismatch, "bracket operand ring");
  std::vector<CPoly> df, dg;
  for (std::size_t i = 0; i < m; ++i) {
    df.push_back(derivative(f, i));
    dg.push_back(derivative(g, i));
  }
  CPoly out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (df[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || dg[j].is_zero() || t.entry(i, j).is_zero()) continue;
      out += df[i] * dg[j] * t.entry(i, j);
    }
  }
  return out;
}

JacobiResult jacobi_check(const BracketTable& t) {
  JacobiResult res;
  const std::size_t m = t.m();
  auto x = [&](std::size_t i) { return cgen(m, i); };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        CPoly s = bracket(t, t.entry(a, b), x(c)) + bracket(t, t.entry(b, c), x(a)) + bracket(t, t.entry(c, a), x(b));
        if (!s.is_zero()) {
          res.ok = false;
          res.failing.push_back({a, b, c});
          res.witnesses.push_back(s);
        }
      }
  return res;
}

CPoly divided_commutator(const Presentation& p, const NCPoly& f, const NCPoly& g) {
  const LaurentScalar q_minus_one = LaurentScalar::q() - 1;
  CPoly out(p.n());
  const NCPoly comm = commutator(p, f, g);
  for (const auto& [e, c] : comm.terms()) {
    auto d = try_divide(c, q_minus_one);
    if (!d) throw Error(ErrorKind::NotCommutativeAtOne, "commutator coefficient " + to_string(c) + " is not a multiple of q - 1");
    out.add_term(e, specialize(*d, 1));
  }
  return out;
}

BracketTable semiclassical_limit(const Presentation& p) {
  const std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && specialize(p.q(i, j), 1) != 1)
        throw Error(ErrorKind::NotCommutativeAtOne, "q_ij does not specialise to 1");
  Matrix<CPoly> up(n, n, CPoly(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) up(i, j) = divided_commutator(p, gen(p, i), gen(p, j));
  return BracketTable(n, Ambient::Polynomial, up);
}

BracketTable bracket_linear(std::size_t n) {
  Matrix<CPoly> up(n, n, CPoly(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      CPoly xx = cgen(n, i) * cgen(n, j);
      if (j == i + 1)
        up(i, j) = xx - cconst(n, 1);
      else
        up(i, j) = (j - i) % 2 == 1 ? xx : -xx;
    }
  return BracketTable(n, Ambient::Polynomial, up);
}

BracketTable bracket_cyclic(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "cyclic bracket needs odd n >= 3");
  Matrix<CPoly> up(n, n, CPoly(n));
  BracketTable lin = bracket_linear(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) up(i, j) = lin.entry(i, j);
  // {x_n, x_1} = x_n x_1 - 1
  up(0, n - 1) = cconst(n, 1) - cgen(n, 0) * cgen(n, n - 1);
  return BracketTable(n, Ambient::Polynomial, up);
}

BracketTable bracket_cluster(std::size_t n, Ambient ambient) {
  const std::size_t m = n + 2;
  Matrix<CPoly> up(m, m, CPoly(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if ((j - i) % 2 == 1) up(i, j) = cgen(m, i) * cgen(m, j);
    }
  up(0, n + 1) = (cgen(m, 1) * cgen(m, n)).scaled(2);
  return BracketTable(m, ambient, up);
}

BracketTable log_canonical(const SkewMatrix& lambda, Ambient ambient) {
  const std::size_t m = lambda.size();
  Matrix<CPoly> up(m, m, CPoly(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (lambda(i, j) != 0) up(i, j) = (cgen(m, i) * cgen(m, j)).scaled(Rational(lambda(i, j)));
  return BracketTable(m, ambient, up);
}

}  // namespace cqwa
