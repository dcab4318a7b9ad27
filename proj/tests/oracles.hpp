#pragma once

// Reference implementations used only by the tests. Each one takes a
// different route from the library code it checks.

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "cqwa/pbw.hpp"
#include "cqwa/poisson.hpp"
#include "cqwa/qtorus.hpp"

namespace oracle {

using cqwa::Exponent;
using cqwa::LaurentScalar;
using cqwa::Rational;

// Normal form of a word by repeatedly fixing the rightmost descent
// x_a x_b (a > b) with x_a x_b = q_ab x_b x_a + r_ab.
inline cqwa::NCPoly rightmost_reduce(const cqwa::Presentation& p, const std::vector<std::size_t>& word) {
  std::map<std::vector<std::size_t>, LaurentScalar> todo{{word, LaurentScalar(1)}};
  cqwa::NCPoly out(p.n());
  while (!todo.empty()) {
    auto it = std::prev(todo.end());  // longest words sort last among equal prefixes; any order works
    std::vector<std::size_t> w = it->first;
    LaurentScalar c = it->second;
    todo.erase(it);
    if (c.is_zero()) continue;
    std::size_t pos = w.size();
    for (std::size_t i = w.size(); i-- > 1;)
      if (w[i - 1] > w[i]) {
        pos = i - 1;
        break;
      }
    if (pos == w.size()) {
      Exponent e(p.n(), 0);
      for (std::size_t g : w) ++e[g];
      out.add_term(e, c);
      continue;
    }
    const std::size_t a = w[pos], b = w[pos + 1];
    std::vector<std::size_t> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    todo[swapped] += c * p.q(a, b);
    if (!p.r(a, b).is_zero()) {
      std::vector<std::size_t> shorter(w.begin(), w.begin() + long(pos));
      shorter.insert(shorter.end(), w.begin() + long(pos) + 2, w.end());
      todo[shorter] += c * p.r(a, b);
    }
  }
  return out;
}

inline std::vector<std::size_t> word_of(const Exponent& e) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) w.push_back(i);
  return w;
}

// Product of standard monomials via the word oracle.
inline cqwa::NCPoly word_product(const cqwa::Presentation& p, const Exponent& a, const Exponent& b) {
  std::vector<std::size_t> w = word_of(a), wb = word_of(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return rightmost_reduce(p, w);
}

// x^a x^b = q^k x^(a+b) in a quantum torus, computed by spelling both
// monomials as letters x_i^(+-1) and bubble-sorting, one swap at a time.
inline long torus_twist_by_swaps(const cqwa::SkewMatrix& lambda, const Exponent& a, const Exponent& b) {
  std::vector<std::pair<std::size_t, int>> letters;
  for (const Exponent* e : {&a, &b})
    for (std::size_t i = 0; i < e->size(); ++i)
      for (int k = 0; k < std::abs((*e)[i]); ++k) letters.push_back({i, (*e)[i] > 0 ? 1 : -1});
  long k = 0;
  for (std::size_t pass = 0; pass < letters.size(); ++pass)
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      auto [x, s] = letters[i];
      auto [y, t] = letters[i + 1];
      if (x > y) {
        // x^s y^t = q^(s t lambda_xy) y^t x^s
        k += long(s) * t * lambda(x, y);
        std::swap(letters[i], letters[i + 1]);
      }
    }
  return k;
}

// Gaussian elimination over Q; rank of the matrix.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Solvability of A x = b over Q.
inline bool rational_solvable(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  std::vector<std::vector<Rational>> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  return rational_rank(a) == rational_rank(aug);
}

inline std::size_t nullity(const cqwa::SkewMatrix& lambda) {
  std::vector<std::vector<Rational>> m(lambda.size(), std::vector<Rational>(lambda.size()));
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda.size(); ++j) m[i][j] = lambda(i, j);
  return lambda.size() - rational_rank(m);
}

// z_k built by hand for the brute-force membership oracle.
inline cqwa::CPoly z_by_hand(std::size_t m, std::size_t k) {
  cqwa::CPoly prev(m), cur = cqwa::cconst(m, 1);
  for (std::size_t i = 1; i <= k; ++i) {
    cqwa::CPoly next = cur * cqwa::cgen(m, i - 1) - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// f in (z_k - lambda) Q[x_1..x_m]: solve f = h (z_k - lambda) for h over all
// monomials of degree <= deg f - k.
inline bool membership_by_linear_algebra(const cqwa::CPoly& f, std::size_t k, const Rational& lambda) {
  const std::size_t m = f.nvars();
  if (f.is_zero()) return true;
  const cqwa::CPoly g = z_by_hand(m, k) - cqwa::cconst(m, lambda);
  long deg = 0;
  for (const auto& [e, c] : f.terms()) deg = std::max(deg, cqwa::total_degree(e));
  const long hdeg = deg - long(k);
  if (hdeg < 0) return false;
  std::vector<Exponent> cand;
  Exponent e(m, 0);
  std::function<void(std::size_t, long)> gen = [&](std::size_t i, long left) {
    if (i == m) {
      cand.push_back(e);
      return;
    }
    for (long a = 0; a <= left; ++a) {
      e[i] = int(a);
      gen(i + 1, left - a);
    }
    e[i] = 0;
  };
  gen(0, hdeg);
  std::map<Exponent, std::size_t> row;
  std::vector<cqwa::CPoly> cols;
  for (const Exponent& c : cand) cols.push_back(cqwa::CPoly::monomial(c, 1) * g);
  for (const auto& col : cols)
    for (const auto& [ex, c] : col.terms()) row.emplace(ex, row.size());
  for (const auto& [ex, c] : f.terms())
    if (!row.count(ex)) return false;
  std::vector<std::vector<Rational>> a(row.size(), std::vector<Rational>(cols.size(), 0));
  std::vector<Rational> b(row.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [ex, c] : cols[j].terms()) a[row.at(ex)][j] = c;
  for (const auto& [ex, c] : f.terms()) b[row.at(ex)] = c;
  return rational_solvable(a, b);
}

// Standard monomial with total degree <= max_deg.
inline Exponent random_exponent(std::mt19937& rng, std::size_t n, int max_deg, int lo = 0) {
  Exponent e(n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  if (lo < 0) {
    std::uniform_int_distribution<int> val(lo, max_deg);
    for (auto& a : e) a = val(rng);
    return e;
  }
  for (int t = 0; t < d; ++t) ++e[pick(rng)];
  return e;
}

inline LaurentScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(-3, 3), co(-3, 3), terms(0, 3);
  LaurentScalar s;
  int t = terms(rng);
  for (int i = 0; i < t; ++i) s = s + LaurentScalar::monomial(Rational(co(rng)) / (1 + (i % 2)), ex(rng));
  return s;
}

}  // namespace oracle
