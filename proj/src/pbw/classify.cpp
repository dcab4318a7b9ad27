#include "cqwa/pbw.hpp"

namespace cqwa {

namespace {

std::vector<std::size_t> walk(const GeneratorGraph& g, bool cyclic) {
  std::size_t start = 0;
  if (!cyclic) {
    while (g.adjacency[start].size() > 1) ++start;  // smallest-index endpoint
  }
  std::vector<std::size_t> order{start};
  std::vector<bool> seen(g.n, false);
  seen[start] = true;
  while (order.size() < g.n) {
    std::size_t next = g.n;
    for (auto w : g.adjacency[order.back()])
      if (!seen[w]) {
        next = w;  // adjacency lists are sorted, so this is the smaller neighbour
        break;
      }
    if (next == g.n) throw Error(ErrorKind::NotConnected, "walk stopped before visiting every generator");
    seen[next] = true;
    order.push_back(next);
  }
  return order;
}

}  // namespace

ClassificationResult classify(const Presentation& p) {
  const std::size_t n = p.n();
  if (!p.is_pbw()) throw Error(ErrorKind::NonPBW, "presentation fails the PBW criterion");
  GeneratorGraph g = generator_graph(p);
  if (!g.connected()) throw Error(ErrorKind::NotConnected, "generator graph is disconnected");
  if (g.max_degree() > 2) throw Error(ErrorKind::DegreeExceeded, "a generator has more than two neighbours");
  single_parameter(p);

  ClassificationResult res;
  const bool cyclic = n >= 3 && g.edge_count() == n;
  res.shape = cyclic ? Shape::Cyclic : Shape::Linear;
  res.order = walk(g, cyclic);
  const auto& o = res.order;

  const LaurentScalar q = n >= 2 ? p.q(o[0], o[1]) : LaurentScalar::q();
  res.parameter = q;
  if (q == LaurentScalar(1) || q == LaurentScalar(-1))
    throw Error(ErrorKind::InvalidArgument, "parameter must not be 1 or -1");
  const LaurentScalar qi = q.unit_inverse();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const LaurentScalar& want = (j - i) % 2 == 1 ? q : qi;
      if (p.q(o[i], o[j]) != want)
        throw Error(ErrorKind::NotSingleParameter, "reordered q_ij do not alternate between q and q^-1");
    }

  // Scale so that every path relation reads x_i x_{i+1} - q x_{i+1} x_i = 1 - q.
  const LaurentScalar target = LaurentScalar(1) - q;
  res.rescale.assign(n, LaurentScalar(1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const LaurentScalar& rij = p.r(o[i], o[i + 1]);
    res.rescale[i + 1] = exact_divide(target, res.rescale[i] * rij);
  }

  if (cyclic) {
    // Remaining freedom: x_i -> rho^((-1)^(i-1)) x_i keeps the path relations
    // and multiplies the closing one by rho^2.
    LaurentScalar closing = res.rescale[n - 1] * res.rescale[0] * p.r(o[n - 1], o[0]);
    LaurentScalar lambda = exact_divide(closing, target);
    if (!lambda.is_unit()) {
      res.cyclic_obstruction = lambda;
    } else if (auto root = unit_sqrt(lambda)) {
      LaurentScalar rho = root->unit_inverse(), rho_inv = *root;
      for (std::size_t i = 0; i < n; ++i) res.rescale[i] *= i % 2 == 0 ? rho : rho_inv;
    } else {
      res.cyclic_obstruction = lambda;
    }
  }
  return res;
}

Presentation apply_classification(const Presentation& p, const ClassificationResult& c) {
  return transform(p, c.order, c.rescale);
}

Presentation classification_target(const ClassificationResult& c) {
  const std::size_t n = c.order.size();
  return c.shape == Shape::Linear ? preset_linear(n, c.parameter) : preset_cyclic(n, c.parameter);
}

}  // namespace cqwa
