#pragma once

#include <vector>

#include "cqwa/report.hpp"
#include "cqwa/scalar.hpp"
#include "cqwa/sparse.hpp"

namespace cqwa {

// Integer skew-symmetric matrix; generators satisfy x_i x_j = q^lambda_ij x_j x_i.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(IntMatrix m);
  static SkewMatrix from_upper(const IntMatrix& m);

  std::size_t size() const { return m_.rows(); }
  long operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }
  // a^T Lambda b
  long form(const Exponent& a, const Exponent& b) const;

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.m_ == b.m_; }
  friend bool operator!=(const SkewMatrix& a, const SkewMatrix& b) { return !(a == b); }

 private:
  IntMatrix m_;
};

// lambda_ij = 1 when i < j, i odd and j even (1-based), skew-extended: the
// commutation matrix of z_1, ..., z_n.
SkewMatrix alternating_skew(std::size_t n);
// lambda_ij = 1 when i < j and i + j is odd (0-based), skew-extended.
SkewMatrix parity_skew(std::size_t m);

struct TorusTag {};
// Linear combination of ordered monomials x_1^a_1 ... x_m^a_m, a in Z^m.
using TorusElement = SparsePoly<LaurentScalar, TorusTag>;

// s(a, b) = sum_{i > j} a_i b_j lambda_ij: x^a x^b = q^s(a,b) x^(a+b).
long ordered_twist(const SkewMatrix& lambda, const Exponent& a, const Exponent& b);

TorusElement torus_mul(const SkewMatrix& lambda, const TorusElement& f, const TorusElement& g);
// Negative k needs a single-term f.
TorusElement torus_pow(const SkewMatrix& lambda, const TorusElement& f, int k);
TorusElement torus_inverse(const SkewMatrix& lambda, const TorusElement& f);
TorusElement torus_commutator(const SkewMatrix& lambda, const TorusElement& f, const TorusElement& g);
// f g - c g f
TorusElement torus_q_commutator(const SkewMatrix& lambda, const TorusElement& f, const TorusElement& g,
                                const LaurentScalar& c);

// q^((1/2) sum_{i<j} a_i a_j lambda_ji) x^a, the bar-invariant monomial.
TorusElement normalized_monomial(const SkewMatrix& lambda, const Exponent& a);

// The X with d X = y (left) or X d = y (right). Throws NotDivisible when no
// Laurent quotient exists.
TorusElement left_divide(const SkewMatrix& lambda, const TorusElement& d, const TorusElement& y);
TorusElement right_divide(const SkewMatrix& lambda, const TorusElement& d, const TorusElement& y);

TorusElement torus_constant(std::size_t m, const LaurentScalar& c);
TorusElement torus_gen(std::size_t m, std::size_t i, int power = 1);

// Checks that v_i = z_{i-1}^-1 (z_i + z_{i-2}) satisfy the relations of L_n^q
// inside the quantum torus on z_1, ..., z_n.
Report check_v_embedding(std::size_t n);
// For odd n: u - alpha(u) = v for u = q^((n-3)/2) z^-1 + lambda + q z,
// alpha(z) = q^-1 z, z = z_{n-2}.
Report check_splitting(std::size_t n, const Rational& lambda);

}  // namespace cqwa
