#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "cqwa/error.hpp"
#include "cqwa/scalar.hpp"

namespace cqwa {

using Exponent = std::vector<int>;

inline long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

// Higher total degree first, then lexicographically larger first. This is a
// total order on Z^m compatible with addition, so the first term of a product
// is the product of first terms.
struct ExponentOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Exponent unit_exponent(std::size_t m, std::size_t i) {
  Exponent e(m, 0);
  e.at(i) = 1;
  return e;
}

// Finite sum of coefficient * monomial. The tag keeps noncommutative,
// quantum torus and commutative polynomials from mixing by accident.
template <class Coeff, class Tag>
class SparsePoly {
 public:
  using Terms = std::map<Exponent, Coeff, ExponentOrder>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Coeff& c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static SparsePoly monomial(const Exponent& e, const Coeff& c = Coeff(1)) {
    SparsePoly p(e.size());
    p.add_term(e, c);
    return p;
  }
  static SparsePoly generator(std::size_t nvars, std::size_t i) { return monomial(unit_exponent(nvars, i)); }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }
  const std::pair<const Exponent, Coeff>& leading() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero");
    return *terms_.begin();
  }

  void add_term(const Exponent& e, const Coeff& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent length");
    if (cqwa::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (cqwa::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly scaled(const Coeff& c) const {
    SparsePoly r(nvars_);
    if (cqwa::is_zero(c)) return r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
  }

  SparsePoly operator-() const { return scaled(Coeff(-1)); }
  SparsePoly& operator+=(const SparsePoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const Coeff& c, const SparsePoly& p) { return p.scaled(c); }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  // Per-variable exponent range over the support.
  std::pair<Exponent, Exponent> exponent_box() const {
    Exponent lo(nvars_, 0), hi(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) {
        lo[i] = first ? e[i] : std::min(lo[i], e[i]);
        hi[i] = first ? e[i] : std::max(hi[i], e[i]);
      }
      first = false;
    }
    return {lo, hi};
  }

 private:
  void check_same(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomials in different rings");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const T& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long>;

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  IntMatrix r(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
  return r;
}

inline IntMatrix transpose(const IntMatrix& a) {
  IntMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

inline IntMatrix scalar_identity(std::size_t n, long d) {
  IntMatrix r(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = d;
  return r;
}

}  // namespace cqwa
