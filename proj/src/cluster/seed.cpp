#include "cqwa/cluster.hpp"
#include "cqwa/render.hpp"

namespace cqwa {

ExchangeMatrix::ExchangeMatrix(IntMatrix b) : b_(std::move(b)) {
  if (b_.rows() != b_.cols()) throw Error(ErrorKind::DimensionMismatch, "exchange matrix must be square");
  for (std::size_t i = 0; i < b_.rows(); ++i)
    for (std::size_t j = 0; j < b_.rows(); ++j)
      if (b_(i, j) != -b_(j, i)) throw Error(ErrorKind::InvalidArgument, "exchange matrix is not skew-symmetric");
}

bool compatible(const ExchangeMatrix& b, const SkewMatrix& lambda, long d) {
  if (b.size() != lambda.size()) return false;
  return transpose(b.matrix()) * lambda.matrix() == scalar_identity(b.size(), d);
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t m = b.size();
  if (k >= m) throw Error(ErrorKind::InvalidArgument, "mutation vertex out of range");
  auto pos = [](long x) { return x > 0 ? x : 0L; };
  IntMatrix out(m, m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == k || j == k)
        out(i, j) = -b(i, j);
      else
        out(i, j) = b(i, j) + pos(b(i, k)) * pos(b(k, j)) - pos(-b(i, k)) * pos(-b(k, j));
    }
  return ExchangeMatrix(out);
}

namespace {

// Ordered product of current variables with nonnegative exponents.
TorusElement realize(const QuantumSeed& s, const Exponent& e, const LaurentScalar& c) {
  TorusElement t = torus_constant(s.ambient.size(), c);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) t = torus_mul(s.ambient, t, torus_pow(s.ambient, s.vars[i], e[i]));
  return t;
}

}  // namespace

QuantumSeed mutate_seed(const QuantumSeed& s, std::size_t k) {
  const std::size_t m = s.b.size();
  if (k >= m) throw Error(ErrorKind::InvalidArgument, "mutation vertex out of range");
  if (s.lambda.size() != m || s.vars.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "seed parts have different sizes");
  if (!compatible(s.b, s.lambda, s.d)) throw Error(ErrorKind::IncompatibleSeed, "B^T Lambda is not d I");

  Exponent plus(m, 0), minus(m, 0);
  plus[k] = minus[k] = -1;
  for (std::size_t i = 0; i < m; ++i) {
    if (s.b(i, k) > 0) plus[i] += static_cast<int>(s.b(i, k));
    if (s.b(i, k) < 0) minus[i] += static_cast<int>(-s.b(i, k));
  }
  IntMatrix lam = s.lambda.matrix();
  for (std::size_t j = 0; j < m; ++j) {
    if (j == k) continue;
    long lp = s.lambda.form(plus, unit_exponent(m, j)), lm = s.lambda.form(minus, unit_exponent(m, j));
    if (lp != lm)
      throw Error(ErrorKind::IncompatibleSeed, "exchange monomials commute differently with variable " +
                                                   std::to_string(j));
    lam(k, j) = lp;
    lam(j, k) = -lp;
  }

  // x_k (X^{a+} + X^{a-}) has nonnegative exponents; evaluate it on the
  // current variables, then divide x_k back out on the left.
  const Exponent ek = unit_exponent(m, k);
  TorusElement lifted(s.ambient.size());
  for (const Exponent& a : {plus, minus}) {
    const TorusElement xa = normalized_monomial(s.lambda, a);
    const auto& [e, c] = xa.leading();
    LaurentScalar coeff = c * qpow(static_cast<int>(ordered_twist(s.lambda, ek, e)));
    lifted += realize(s, e + ek, coeff);
  }
  QuantumSeed out = s;
  out.vars[k] = left_divide(s.ambient, s.vars[k], lifted);
  out.lambda = SkewMatrix(lam);
  out.b = mutate_matrix(s.b, k);
  return out;
}

QuantumSeed preset_dynkin_a(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "type A seed needs odd n >= 3");
  const std::size_t m = n - 1;
  IntMatrix b(m, m, 0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    b(i, i + 1) = 1;
    b(i + 1, i) = -1;
  }
  QuantumSeed s;
  s.b = ExchangeMatrix(b);
  s.lambda = alternating_skew(m);
  s.ambient = s.lambda;
  s.d = 1;
  s.names = indexed_names("z", m);
  for (std::size_t i = 1; i <= m; ++i) {
    int v_exp = i % 2 == 1 ? (1 - int(i)) / 2 : -int(i) / 2;
    s.vars.push_back(torus_gen(m, i - 1).scaled(LaurentScalar::v(v_exp)));
  }
  return s;
}

QuantumSeed preset_cycle(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "cycle seed needs odd n >= 3");
  const std::size_t m = n + 1;
  IntMatrix b(m, m, 0);
  auto arrow = [&](std::size_t i, std::size_t j) {
    b(i, j) = 1;
    b(j, i) = -1;
  };
  for (std::size_t i = 0; i + 1 < m; ++i) arrow(i, i + 1);
  arrow(0, n);
  QuantumSeed s;
  s.b = ExchangeMatrix(b);
  s.lambda = parity_skew(m);
  s.ambient = s.lambda;
  s.d = 2;
  s.names = indexed_names("w", m, 0);
  for (std::size_t i = 0; i < m; ++i) s.vars.push_back(torus_gen(m, i));
  return s;
}

WFamily::WFamily(std::size_t n, int lo, int hi) : n_(n), lo_(lo), hi_(hi), lambda_(parity_skew(n + 1)) {
  if (lo > 0 || hi < int(n)) throw Error(ErrorKind::InvalidArgument, "window must contain 0..n");
  const std::size_t m = n + 1;
  w_.resize(static_cast<std::size_t>(hi - lo + 1));
  auto slot = [&](int i) -> TorusElement& { return w_[static_cast<std::size_t>(i - lo_)]; };
  for (std::size_t i = 0; i < m; ++i) slot(int(i)) = torus_gen(m, i);
  const TorusElement one = torus_constant(m, LaurentScalar(1));
  const int N = int(n);
  for (int i = N + 1; i <= hi; ++i) {
    TorusElement num = one + torus_mul(lambda_, slot(i - N), slot(i - 1)).scaled(LaurentScalar::q());
    slot(i) = left_divide(lambda_, slot(i - N - 1), num);
  }
  for (int i = -1; i >= lo; --i) {
    TorusElement num = one + torus_mul(lambda_, slot(i + 1), slot(i + N)).scaled(LaurentScalar::q(-1));
    slot(i) = left_divide(lambda_, slot(i + N + 1), num);
  }
}

const TorusElement& WFamily::operator[](int i) const {
  if (i < lo_ || i > hi_) throw Error(ErrorKind::InvalidArgument, "w_" + std::to_string(i) + " outside the window");
  return w_[static_cast<std::size_t>(i - lo_)];
}

WFamily generate_w(std::size_t n, int lo, int hi) { return WFamily(n, lo, hi); }

bool rotation_check(std::size_t n) {
  const QuantumSeed s = preset_cycle(n);
  const ExchangeMatrix mutated = mutate_matrix(s.b, 0);
  const std::size_t m = n + 1;
  // old vertex i now plays the role of vertex i+1 mod m
  IntMatrix relabelled(m, m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) relabelled((i + 1) % m, (j + 1) % m) = s.b(i, j);
  return mutated.matrix() == relabelled;
}

}  // namespace cqwa
