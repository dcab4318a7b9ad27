#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace cqwa {

using Rational = mpq_class;

// Element of Q[v, v^-1]. The quantum parameter is q = v^2, so half-integer
// powers of q are ordinary powers of v.
class LaurentScalar {
 public:
  using Terms = std::map<int, Rational>;

  LaurentScalar() = default;
  LaurentScalar(int c);  // NOLINT: integer constants are scalars
  LaurentScalar(const Rational& c);  // NOLINT

  static LaurentScalar monomial(const Rational& c, int v_exponent);
  static LaurentScalar v(int k = 1) { return monomial(1, k); }
  static LaurentScalar q(int k = 1) { return monomial(1, 2 * k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const { return terms_.size() == 1; }
  bool is_one() const;
  int min_exponent() const;
  int max_exponent() const;
  Rational coefficient(int v_exponent) const;

  // Inverse of a single-term scalar; throws NotDivisible otherwise.
  LaurentScalar unit_inverse() const;
  LaurentScalar pow(int e) const;

  LaurentScalar operator-() const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

 private:
  void add_term(int e, const Rational& c);
  Terms terms_;
};

// q^e for e a half-integer.
LaurentScalar qpow(const Rational& e);
LaurentScalar qpow(int e);

// f / g when the quotient lies in Q[v, v^-1].
LaurentScalar exact_divide(const LaurentScalar& f, const LaurentScalar& g);
std::optional<LaurentScalar> try_divide(const LaurentScalar& f, const LaurentScalar& g);

// Evaluate at v = c.
Rational specialize(const LaurentScalar& f, const Rational& c);

// Square root of a single-term scalar, if one exists in Q[v, v^-1].
std::optional<LaurentScalar> unit_sqrt(const LaurentScalar& f);

std::string to_string(const Rational& r);
std::string to_string(const LaurentScalar& f);
std::ostream& operator<<(std::ostream& os, const LaurentScalar& f);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const LaurentScalar& s) { return s.is_zero(); }

}  // namespace cqwa
