#include "cqwa/scalar.hpp"

#include <sstream>
#include <vector>

#include "cqwa/error.hpp"

namespace cqwa {

LaurentScalar::LaurentScalar(int c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

LaurentScalar::LaurentScalar(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(0, c);
}

LaurentScalar LaurentScalar::monomial(const Rational& c, int v_exponent) {
  LaurentScalar s;
  s.add_term(v_exponent, c);
  return s;
}

bool LaurentScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentScalar::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "exponent of zero scalar");
  return terms_.begin()->first;
}

int LaurentScalar::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "exponent of zero scalar");
  return terms_.rbegin()->first;
}

Rational LaurentScalar::coefficient(int v_exponent) const {
  auto it = terms_.find(v_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentScalar::add_term(int e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) it->second.canonicalize();  // callers may hand in 2/2
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentScalar LaurentScalar::unit_inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotDivisible, "scalar " + to_string(*this) + " is not a unit");
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e);
}

LaurentScalar LaurentScalar::pow(int e) const {
  if (e < 0) return unit_inverse().pow(-e);
  LaurentScalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar s = *this;
  for (auto& [e, c] : s.terms_) c = -c;
  return s;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
  *this = *this * o;
  return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentScalar qpow(int e) { return LaurentScalar::q(e); }

LaurentScalar qpow(const Rational& e) {
  Rational twice = 2 * e;
  twice.canonicalize();
  if (twice.get_den() != 1) throw Error(ErrorKind::InvalidExponent, "q^" + to_string(e) + " is not a power of v");
  return LaurentScalar::v(static_cast<int>(twice.get_num().get_si()));
}

std::optional<LaurentScalar> try_divide(const LaurentScalar& f, const LaurentScalar& g) {
  if (g.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
  if (f.is_zero()) return LaurentScalar();
  // Shift both to polynomials with nonzero constant term; the shift of g is a
  // unit and v does not divide the shifted g, so divisibility is polynomial.
  const int fs = f.min_exponent(), gs = g.min_exponent();
  std::vector<Rational> num(f.max_exponent() - fs + 1), den(g.max_exponent() - gs + 1);
  for (const auto& [e, c] : f.terms()) num[e - fs] = c;
  for (const auto& [e, c] : g.terms()) den[e - gs] = c;
  if (num.size() < den.size()) return std::nullopt;
  std::vector<Rational> quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational c = num[i + den.size() - 1] / lead;
    quot[i] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (sgn(c) != 0) return std::nullopt;
  LaurentScalar r;
  for (std::size_t i = 0; i < quot.size(); ++i)
    r += LaurentScalar::monomial(quot[i], static_cast<int>(i) + fs - gs);
  return r;
}

LaurentScalar exact_divide(const LaurentScalar& f, const LaurentScalar& g) {
  auto r = try_divide(f, g);
  if (!r) throw Error(ErrorKind::NotDivisible, to_string(f) + " by " + to_string(g));
  return *r;
}

Rational specialize(const LaurentScalar& f, const Rational& c) {
  if (sgn(c) == 0 && !f.is_zero() && f.min_exponent() < 0)
    throw Error(ErrorKind::InvalidArgument, "negative power evaluated at zero");
  Rational sum = 0;
  for (const auto& [e, coef] : f.terms()) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(den.get_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rational p = e < 0 ? Rational(den, num) : Rational(num, den);
    p.canonicalize();
    sum += coef * p;
  }
  return sum;
}

std::optional<LaurentScalar> unit_sqrt(const LaurentScalar& f) {
  if (!f.is_unit()) return std::nullopt;
  const auto& [e, c] = *f.terms().begin();
  if (e % 2 != 0 || sgn(c) <= 0) return std::nullopt;
  mpz_class n = c.get_num(), d = c.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return LaurentScalar::monomial(Rational(rn, rd), e / 2);
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

std::string power_text(int e) {
  if (e % 2 == 0) {
    int k = e / 2;
    if (k == 1) return "q";
    return "q^" + std::to_string(k);
  }
  if (e == 1) return "v";
  return "v^" + std::to_string(e);
}

}  // namespace

std::string to_string(const LaurentScalar& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      out << power_text(e);
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& f) { return os << to_string(f); }

}  // namespace cqwa
