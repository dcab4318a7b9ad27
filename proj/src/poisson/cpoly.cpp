#include <map>

#include "cqwa/poisson.hpp"

namespace cqwa {

CPoly operator*(const CPoly& f, const CPoly& g) {
  if (f.nvars() != g.nvars()) throw Error(ErrorKind::DimensionMismatch, "polynomials in different rings");
  CPoly out(f.nvars());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add_term(a + b, ca * cb);
  return out;
}

CPoly cconst(std::size_t m, const Rational& c) { return CPoly::constant(m, c); }

CPoly cgen(std::size_t m, std::size_t i) { return CPoly::generator(m, i); }

CPoly cpow(const CPoly& f, int k) {
  if (k < 0) {
    if (f.size() != 1) throw Error(ErrorKind::NotDivisible, "only single-term polynomials are invertible");
    const auto& [e, c] = f.leading();
    Exponent neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i] * -k;
    Rational inv = 1 / c, p = 1;
    for (int t = 0; t < -k; ++t) p *= inv;
    return CPoly::monomial(neg, p);
  }
  CPoly r = cconst(f.nvars(), 1), base = f;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

CPoly derivative(const CPoly& f, std::size_t i) {
  CPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e.at(i) == 0) continue;
    Exponent d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

CPoly substitute(const CPoly& f, const std::vector<CPoly>& images) {
  if (images.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "one image per variable");
  if (images.empty()) return f;
  const std::size_t m = images.front().nvars();
  std::map<std::pair<std::size_t, int>, CPoly> powers;
  CPoly out(m);
  for (const auto& [e, c] : f.terms()) {
    CPoly t = cconst(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto key = std::make_pair(i, e[i]);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, cpow(images[i], e[i])).first;
      t = t * it->second;
    }
    out += t;
  }
  return out;
}

CPoly exact_quotient(const CPoly& f, const CPoly& d) {
  if (d.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
  if (f.nvars() != d.nvars()) throw Error(ErrorKind::DimensionMismatch, "polynomials in different rings");
  CPoly quotient(f.nvars());
  if (f.is_zero()) return quotient;
  const auto [dlo, dhi] = d.exponent_box();
  const auto [flo, fhi] = f.exponent_box();
  const Exponent lo = flo - dlo, hi = fhi - dhi;
  const auto& [ed, cd] = d.leading();
  CPoly rest = f;
  while (!rest.is_zero()) {
    const auto& [ef, cf] = rest.leading();
    Exponent ex = ef - ed;
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (ex[i] < lo[i] || ex[i] > hi[i]) throw Error(ErrorKind::NotDivisible, "polynomial is not a multiple");
    CPoly t = CPoly::monomial(ex, cf / cd);
    quotient += t;
    rest -= d * t;
  }
  return quotient;
}

CPoly specialize_at_one(const NCPoly& f) {
  CPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, specialize(c, 1));
  return out;
}

CPoly specialize_at_one(const TorusElement& f) {
  CPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, specialize(c, 1));
  return out;
}

std::vector<CPoly> commutative_z(std::size_t m, std::size_t upto) {
  if (upto > m) throw Error(ErrorKind::InvalidArgument, "z_i needs i <= number of variables");
  std::vector<CPoly> z{cconst(m, 1)};
  for (std::size_t i = 1; i <= upto; ++i) {
    CPoly prev2 = i >= 2 ? z[i - 2] : CPoly(m);
    z.push_back(z[i - 1] * cgen(m, i - 1) - prev2);
  }
  return z;
}

bool principal_membership(const CPoly& f, std::size_t k, const Rational& lambda) {
  const std::size_t m = f.nvars();
  if (k < 1 || k > m) throw Error(ErrorKind::InvalidArgument, "need 1 <= k <= number of variables");
  auto z = commutative_z(m, k);
  const CPoly num = cconst(m, lambda) + (k >= 2 ? z[k - 2] : CPoly(m));
  const CPoly den = z[k - 1];
  // f = sum_j f_j x_k^j
  std::map<int, CPoly> parts;
  int top = 0;
  for (const auto& [e, c] : f.terms()) {
    if (e[k - 1] < 0) throw Error(ErrorKind::InvalidArgument, "membership needs a polynomial in x_k");
    Exponent rest = e;
    rest[k - 1] = 0;
    auto it = parts.try_emplace(e[k - 1], CPoly(m)).first;
    it->second.add_term(rest, c);
    top = std::max(top, e[k - 1]);
  }
  CPoly cleared(m);
  for (const auto& [j, fj] : parts) cleared += fj * cpow(num, j) * cpow(den, top - j);
  return cleared.is_zero();
}

}  // namespace cqwa
