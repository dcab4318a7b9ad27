#include "cqwa/qtorus.hpp"

namespace cqwa {

SkewMatrix::SkewMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorKind::DimensionMismatch, "skew matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.rows(); ++j)
      if (m_(i, j) != -m_(j, i)) throw Error(ErrorKind::InvalidArgument, "matrix is not skew-symmetric");
}

SkewMatrix SkewMatrix::from_upper(const IntMatrix& m) {
  IntMatrix full(m.rows(), m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      full(i, j) = m(i, j);
      full(j, i) = -m(i, j);
    }
  return SkewMatrix(full);
}

long SkewMatrix::form(const Exponent& a, const Exponent& b) const {
  long s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j) s += a[i] * m_(i, j) * b[j];
  }
  return s;
}

SkewMatrix alternating_skew(std::size_t n) {
  IntMatrix m(n, n, 0);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (i % 2 == 1 && j % 2 == 0) m(i - 1, j - 1) = 1;
  return SkewMatrix::from_upper(m);
}

SkewMatrix parity_skew(std::size_t m) {
  IntMatrix l(m, m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if ((i + j) % 2 == 1) l(i, j) = 1;
  return SkewMatrix::from_upper(l);
}

long ordered_twist(const SkewMatrix& lambda, const Exponent& a, const Exponent& b) {
  long s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < i; ++j) s += a[i] * b[j] * lambda(i, j);
  }
  return s;
}

namespace {

void check_ring(const SkewMatrix& lambda, const TorusElement& f) {
  if (f.nvars() != lambda.size()) throw Error(ErrorKind::DimensionMismatch, "element not in this torus");
}

}  // namespace

TorusElement torus_constant(std::size_t m, const LaurentScalar& c) { return TorusElement::constant(m, c); }

TorusElement torus_gen(std::size_t m, std::size_t i, int power) {
  Exponent e(m, 0);
  e.at(i) = power;
  return TorusElement::monomial(e);
}

TorusElement torus_mul(const SkewMatrix& lambda, const TorusElement& f, const TorusElement& g) {
  check_ring(lambda, f);
  check_ring(lambda, g);
  TorusElement out(lambda.size());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add_term(a + b, ca * cb * qpow(static_cast<int>(ordered_twist(lambda, a, b))));
  return out;
}

TorusElement torus_inverse(const SkewMatrix& lambda, const TorusElement& f) {
  check_ring(lambda, f);
  if (f.size() != 1) throw Error(ErrorKind::NotDivisible, "only single-term elements are invertible");
  const auto& [a, c] = f.leading();
  Exponent neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  // x^a x^-a = q^s(a,-a)
  return TorusElement::monomial(neg, (c * qpow(static_cast<int>(ordered_twist(lambda, a, neg)))).unit_inverse());
}

TorusElement torus_pow(const SkewMatrix& lambda, const TorusElement& f, int k) {
  if (k < 0) return torus_pow(lambda, torus_inverse(lambda, f), -k);
  TorusElement r = torus_constant(lambda.size(), LaurentScalar(1));
  for (int i = 0; i < k; ++i) r = torus_mul(lambda, r, f);
  return r;
}

TorusElement torus_commutator(const SkewMatrix& lambda, const TorusElement& f, const TorusElement& g) {
  return torus_mul(lambda, f, g) - torus_mul(lambda, g, f);
}

TorusElement torus_q_commutator(const SkewMatrix& lambda, const TorusElement& f, const TorusElement& g,
                                const LaurentScalar& c) {
  return torus_mul(lambda, f, g) - torus_mul(lambda, g, f).scaled(c);
}

TorusElement normalized_monomial(const SkewMatrix& lambda, const Exponent& a) {
  if (a.size() != lambda.size()) throw Error(ErrorKind::DimensionMismatch, "exponent length");
  long twice = 0;  // sum_{i<j} a_i a_j lambda_ji, an integer power of v
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) twice += a[i] * a[j] * lambda(j, i);
  return TorusElement::monomial(a, LaurentScalar::v(static_cast<int>(twice)));
}

namespace {

// Leading-term division. Every exact quotient has its support inside the box
// [min(y) - min(d), max(y) - max(d)], which bounds the loop.
TorusElement divide(const SkewMatrix& lambda, const TorusElement& d, const TorusElement& y, bool left) {
  check_ring(lambda, d);
  check_ring(lambda, y);
  if (d.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
  TorusElement quotient(lambda.size());
  if (y.is_zero()) return quotient;
  const auto [dlo, dhi] = d.exponent_box();
  const auto [ylo, yhi] = y.exponent_box();
  const Exponent lo = ylo - dlo, hi = yhi - dhi;
  const auto& [ed, cd] = d.leading();
  TorusElement rest = y;
  while (!rest.is_zero()) {
    const auto& [ey, cy] = rest.leading();
    Exponent ex = ey - ed;
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (ex[i] < lo[i] || ex[i] > hi[i]) throw Error(ErrorKind::NotDivisible, "torus element is not a multiple");
    long s = left ? ordered_twist(lambda, ed, ex) : ordered_twist(lambda, ex, ed);
    auto c = try_divide(cy, cd * qpow(static_cast<int>(s)));
    if (!c) throw Error(ErrorKind::NotDivisible, "coefficient is not a multiple");
    TorusElement t = TorusElement::monomial(ex, *c);
    quotient += t;
    rest -= left ? torus_mul(lambda, d, t) : torus_mul(lambda, t, d);
  }
  return quotient;
}

}  // namespace

TorusElement left_divide(const SkewMatrix& lambda, const TorusElement& d, const TorusElement& y) {
  return divide(lambda, d, y, true);
}

TorusElement right_divide(const SkewMatrix& lambda, const TorusElement& d, const TorusElement& y) {
  return divide(lambda, d, y, false);
}

}  // namespace cqwa
