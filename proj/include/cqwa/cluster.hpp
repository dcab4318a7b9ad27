#pragma once

#include <vector>

#include "cqwa/qtorus.hpp"
#include "cqwa/report.hpp"

namespace cqwa {

// Skew-symmetric integer exchange matrix; b_ij counts arrows i -> j.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(IntMatrix b);
  std::size_t size() const { return b_.rows(); }
  long operator()(std::size_t i, std::size_t j) const { return b_(i, j); }
  const IntMatrix& matrix() const { return b_; }
  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.b_ == b.b_; }
  friend bool operator!=(const ExchangeMatrix& a, const ExchangeMatrix& b) { return !(a == b); }

 private:
  IntMatrix b_;
};

// Cluster variables live in a fixed ambient torus (the torus of the initial
// seed); lambda describes how the current variables quasi-commute.
struct QuantumSeed {
  ExchangeMatrix b;
  SkewMatrix lambda;
  long d = 1;
  SkewMatrix ambient;
  std::vector<TorusElement> vars;
  std::vector<std::string> names;  // ambient generator names for rendering
};

// B^T Lambda = d I
bool compatible(const ExchangeMatrix& b, const SkewMatrix& lambda, long d);

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);
// Exchange relation at k. Throws IncompatibleSeed when Lambda(a+, e_j) and
// Lambda(a-, e_j) disagree for some j != k.
QuantumSeed mutate_seed(const QuantumSeed& s, std::size_t k);

// Odd n. Path 1 -> 2 -> ... -> n-1 with Lambda from z_i z_j = q^lambda_ij z_j z_i and
// variables y_i = q^((1-i)/4) z_i (i odd), q^(-i/4) z_i (i even). d = 1.
QuantumSeed preset_dynkin_a(std::size_t n);
// Cycle on vertices 0..n with arrows i -> i+1 and 0 -> n, parity Lambda, d = 2.
QuantumSeed preset_cycle(std::size_t n);

// w_lo, ..., w_hi from w_i w_{i-n-1} recursions starting at w_0, ..., w_n.
class WFamily {
 public:
  WFamily(std::size_t n, int lo, int hi);
  std::size_t n() const { return n_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const SkewMatrix& lambda() const { return lambda_; }
  const TorusElement& operator[](int i) const;

 private:
  std::size_t n_;
  int lo_, hi_;
  SkewMatrix lambda_;
  std::vector<TorusElement> w_;
};

WFamily generate_w(std::size_t n, int lo, int hi);

// Mutating the cycle at its source equals relabelling i -> i+1 mod (n+1).
bool rotation_check(std::size_t n);

Report suite_cluster(std::size_t n);

}  // namespace cqwa
