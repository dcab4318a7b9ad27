#pragma once

#include <array>
#include <vector>

#include "cqwa/pbw.hpp"
#include "cqwa/qtorus.hpp"
#include "cqwa/report.hpp"
#include "cqwa/sparse.hpp"

namespace cqwa {

struct CommTag {};
// Commutative (Laurent) polynomial over Q in m variables.
using CPoly = SparsePoly<Rational, CommTag>;

CPoly operator*(const CPoly& f, const CPoly& g);
CPoly cconst(std::size_t m, const Rational& c);
CPoly cgen(std::size_t m, std::size_t i);
// Negative k needs a single-term f.
CPoly cpow(const CPoly& f, int k);
CPoly derivative(const CPoly& f, std::size_t i);
// f(images[0], ..., images[m-1]); all images live in one ring.
CPoly substitute(const CPoly& f, const std::vector<CPoly>& images);
// The h with d h = f in the Laurent ring; throws NotDivisible.
CPoly exact_quotient(const CPoly& f, const CPoly& d);

// Coefficientwise v = 1.
CPoly specialize_at_one(const NCPoly& f);
CPoly specialize_at_one(const TorusElement& f);

enum class Ambient { Polynomial, Laurent };

class BracketTable {
 public:
  BracketTable() = default;
  // Reads entries above the diagonal; the rest follows by antisymmetry.
  BracketTable(std::size_t m, Ambient ambient, const Matrix<CPoly>& upper);

  std::size_t m() const { return m_; }
  Ambient ambient() const { return ambient_; }
  const CPoly& entry(std::size_t i, std::size_t j) const { return entries_(i, j); }

  friend bool operator==(const BracketTable& a, const BracketTable& b) {
    return a.m_ == b.m_ && a.ambient_ == b.ambient_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t m_ = 0;
  Ambient ambient_ = Ambient::Polynomial;
  Matrix<CPoly> entries_;
};

// Leibniz extension: sum_{i,j} d_i f d_j g {x_i, x_j}.
CPoly bracket(const BracketTable& t, const CPoly& f, const CPoly& g);

struct JacobiResult {
  bool ok = true;
  std::vector<std::array<std::size_t, 3>> failing;
  std::vector<CPoly> witnesses;
};
JacobiResult jacobi_check(const BracketTable& t);

// {x_i, x_j} = ((x_i x_j - x_j x_i) / (q - 1)) at v = 1.
BracketTable semiclassical_limit(const Presentation& p);
// (f g - g f) / (q - 1) at v = 1.
CPoly divided_commutator(const Presentation& p, const NCPoly& f, const NCPoly& g);

// {x_i, x_{i+1}} = x_i x_{i+1} - 1, other pairs +-x_i x_j by parity of j - i.
BracketTable bracket_linear(std::size_t n);
// bracket_linear plus {x_n, x_1} = x_n x_1 - 1.
BracketTable bracket_cyclic(std::size_t n);
// On W_0, ..., W_{n+1}: log-canonical by parity except {W_0, W_{n+1}} = 2 W_1 W_n.
BracketTable bracket_cluster(std::size_t n, Ambient ambient = Ambient::Polynomial);
// {x_i, x_j} = lambda_ij x_i x_j
BracketTable log_canonical(const SkewMatrix& lambda, Ambient ambient = Ambient::Laurent);

// Integer basis of { m : Lambda m = 0 }.
std::vector<std::vector<long>> lambda_kernel(const SkewMatrix& lambda);

// z_0, ..., z_upto built from the commutative recurrence in m variables.
std::vector<CPoly> commutative_z(std::size_t m, std::size_t upto);
// Whether f lies in (z_k - lambda) in Q[x_1, ..., x_m], decided by substituting
// x_k = (lambda + z_{k-2}) / z_{k-1}.
bool principal_membership(const CPoly& f, std::size_t k, const Rational& lambda);

Report suite_poisson(std::size_t n);

}  // namespace cqwa
