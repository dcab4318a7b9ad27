#include <deque>

#include "cqwa/pbw.hpp"

namespace cqwa {

Presentation::Presentation(Matrix<LaurentScalar> q, Matrix<LaurentScalar> r)
    : n_(q.rows()), q_(std::move(q)), r_(std::move(r)) {
  if (q_.cols() != n_ || r_.rows() != n_ || r_.cols() != n_)
    throw Error(ErrorKind::DimensionMismatch, "relation tables must be n x n");
  for (std::size_t i = 0; i < n_; ++i) {
    if (!q_(i, i).is_one() || !r_(i, i).is_zero())
      throw Error(ErrorKind::InvalidArgument, "diagonal must read q_ii = 1, r_ii = 0");
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (!q_(i, j).is_unit())
        throw Error(ErrorKind::InvalidArgument, "q_ij must be a unit, got " + to_string(q_(i, j)));
      if (q_(j, i) != q_(i, j).unit_inverse() || r_(j, i) != -(q_(j, i) * r_(i, j)))
        throw Error(ErrorKind::InvalidArgument, "tables disagree for pair (" + std::to_string(i + 1) + ", " +
                                                    std::to_string(j + 1) + ")");
    }
  }
  pbw_ = pbw_check(*this);
}

Presentation Presentation::from_upper(const Matrix<LaurentScalar>& q, const Matrix<LaurentScalar>& r) {
  const std::size_t n = q.rows();
  if (q.cols() != n || r.rows() != n || r.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "relation tables must be n x n");
  Matrix<LaurentScalar> fq(n, n), fr(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    fq(i, i) = LaurentScalar(1);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!q(i, j).is_unit())
        throw Error(ErrorKind::InvalidArgument, "q_ij must be a unit, got " + to_string(q(i, j)));
      fq(i, j) = q(i, j);
      fr(i, j) = r(i, j);
      fq(j, i) = q(i, j).unit_inverse();
      fr(j, i) = -(fq(j, i) * r(i, j));
    }
  }
  return Presentation(std::move(fq), std::move(fr));
}

Presentation preset_linear(std::size_t n, const LaurentScalar& q) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one generator");
  Matrix<LaurentScalar> tq(n, n), tr(n, n);
  const LaurentScalar qi = q.unit_inverse();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      tq(i, j) = (j - i) % 2 == 1 ? q : qi;
      if (j == i + 1) tr(i, j) = LaurentScalar(1) - q;
    }
  return Presentation::from_upper(tq, tr);
}

Presentation preset_cyclic(std::size_t n, const LaurentScalar& q) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "cyclic family needs odd n >= 3");
  Presentation lin = preset_linear(n, q);
  Matrix<LaurentScalar> tq = lin.q_table(), tr = lin.r_table();
  // x_n x_1 = q x_1 x_n + (1 - q)
  tq(n - 1, 0) = q;
  tr(n - 1, 0) = LaurentScalar(1) - q;
  tq(0, n - 1) = q.unit_inverse();
  tr(0, n - 1) = -(tq(0, n - 1) * tr(n - 1, 0));
  return Presentation(std::move(tq), std::move(tr));
}

Presentation preset(Family family, std::size_t n, const LaurentScalar& q) {
  return family == Family::Linear ? preset_linear(n, q) : preset_cyclic(n, q);
}

Presentation transform(const Presentation& p, const std::vector<std::size_t>& order,
                       const std::vector<LaurentScalar>& rescale) {
  const std::size_t n = p.n();
  if (order.size() != n || rescale.size() != n) throw Error(ErrorKind::DimensionMismatch, "transform size");
  std::vector<bool> seen(n, false);
  for (auto o : order) {
    if (o >= n || seen[o]) throw Error(ErrorKind::InvalidArgument, "order is not a permutation");
    seen[o] = true;
  }
  Matrix<LaurentScalar> tq(n, n), tr(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      tq(i, j) = p.q(order[i], order[j]);
      tr(i, j) = rescale[i] * rescale[j] * p.r(order[i], order[j]);
    }
  return Presentation(std::move(tq), std::move(tr));
}

bool pbw_check(const Presentation& p) {
  const std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || p.r(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (p.q(i, k) != p.q(k, j)) return false;
      }
    }
  return true;
}

std::size_t GeneratorGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& a : adjacency) e += a.size();
  return e / 2;
}

std::size_t GeneratorGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adjacency) d = std::max(d, a.size());
  return d;
}

bool GeneratorGraph::connected() const {
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> todo{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop_front();
    for (auto w : adjacency[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push_back(w);
      }
  }
  return count == n;
}

GeneratorGraph generator_graph(const Presentation& p) {
  GeneratorGraph g;
  g.n = p.n();
  g.adjacency.resize(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      if (i != j && !p.r(i, j).is_zero()) g.adjacency[i].push_back(j);
  return g;
}

LaurentScalar single_parameter(const Presentation& p) {
  if (!p.is_pbw()) throw Error(ErrorKind::NonPBW, "presentation fails the PBW criterion");
  if (!generator_graph(p).connected()) throw Error(ErrorKind::NotConnected, "generator graph is disconnected");
  if (p.n() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two generators");
  const LaurentScalar q = p.q(0, 1), qi = q.unit_inverse();
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j)
      if (p.q(i, j) != q && p.q(i, j) != qi)
        throw Error(ErrorKind::NotSingleParameter, "q_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                                                       to_string(p.q(i, j)) + " is not " + to_string(q) +
                                                       " or its inverse");
  return q;
}

}  // namespace cqwa
