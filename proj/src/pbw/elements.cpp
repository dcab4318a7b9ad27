#include <map>

#include "cqwa/pbw.hpp"
#include "cqwa/render.hpp"

namespace cqwa {

std::vector<NCPoly> z_sequence(const Presentation& p, std::size_t upto) {
  if (upto > p.n()) throw Error(ErrorKind::InvalidArgument, "z_i needs i <= n");
  std::vector<NCPoly> z{one(p)};
  NCPoly before(p.n());  // z_-1
  for (std::size_t i = 1; i <= upto; ++i) {
    NCPoly next = multiply(p, z.back(), gen(p, i - 1)) - (i == 1 ? before : z[i - 2]);
    z.push_back(std::move(next));
  }
  return z;
}

NCPoly z_element(const Presentation& p, int i) {
  if (i < -1) throw Error(ErrorKind::InvalidArgument, "z_i needs i >= -1");
  if (i == -1) return NCPoly(p.n());
  return z_sequence(p, static_cast<std::size_t>(i)).back();
}

NCPoly shift_generators(const NCPoly& f, unsigned by) {
  const std::size_t n = f.nvars();
  NCPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    Exponent s(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (i + by >= n) throw Error(ErrorKind::InvalidArgument, "shift runs past the last generator");
      s[i + by] = e[i];
    }
    out.add_term(s, c);
  }
  return out;
}

NCPoly omega(const Presentation& cyclic, const LaurentScalar& q) {
  const std::size_t n = cyclic.n();
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "omega needs n >= 3");
  auto z = z_sequence(cyclic, n - 1);
  return multiply(cyclic, z[n - 1], gen(cyclic, n - 1)) - z[n - 2] - shift_generators(z[n - 2]).scaled(q);
}

NCPoly apply_hom(const HomSpec& h, const NCPoly& f) {
  const std::size_t n = h.source.n();
  if (f.nvars() != n || h.images.size() != n) throw Error(ErrorKind::DimensionMismatch, "hom source");
  std::map<std::pair<std::size_t, int>, NCPoly> powers;
  auto image_power = [&](std::size_t i, int k) -> const NCPoly& {
    auto key = std::make_pair(i, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    NCPoly v = power(h.target, h.images[i], static_cast<unsigned>(k));
    return powers.emplace(key, std::move(v)).first->second;
  };
  NCPoly out(h.target.n());
  for (const auto& [e, c] : f.terms()) {
    NCPoly term = scalar(h.target, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0) term = multiply(h.target, term, image_power(i, e[i]));
    out += term;
  }
  return out;
}

bool check_hom(const HomSpec& h, std::string* witness) {
  const auto& s = h.source;
  for (std::size_t i = 0; i < s.n(); ++i)
    for (std::size_t j = i + 1; j < s.n(); ++j) {
      NCPoly rel = q_commutator(h.target, h.images[i], h.images[j], s.q(i, j)) - scalar(h.target, s.r(i, j));
      if (!rel.is_zero()) {
        if (witness)
          *witness = "relation (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") maps to " + render(rel);
        return false;
      }
    }
  return true;
}

HomSpec compose(const HomSpec& outer, const HomSpec& inner) {
  if (inner.target != outer.source) throw Error(ErrorKind::DimensionMismatch, "composition of unrelated maps");
  HomSpec h{inner.source, outer.target, {}};
  for (const auto& img : inner.images) h.images.push_back(apply_hom(outer, img));
  return h;
}

unsigned order_on_generators(const HomSpec& h, unsigned limit) {
  if (h.source != h.target) throw Error(ErrorKind::InvalidArgument, "order needs an endomorphism");
  HomSpec cur = h;
  for (unsigned k = 1; k <= limit; ++k) {
    bool identity = true;
    for (std::size_t i = 0; i < h.source.n() && identity; ++i) identity = cur.images[i] == gen(h.source, i);
    if (identity) return k;
    cur = compose(h, cur);
  }
  return 0;
}

HomSpec theta_linear(std::size_t n, const LaurentScalar& q) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "theta needs n >= 2");
  HomSpec h{preset_linear(n - 1, q), preset_linear(n, q), {}};
  for (std::size_t i = 0; i + 1 < n; ++i) h.images.push_back(gen(h.target, i + 1));
  return h;
}

HomSpec theta_cyclic(std::size_t n, const LaurentScalar& q) {
  Presentation c = preset_cyclic(n, q);
  HomSpec h{c, c, {}};
  for (std::size_t i = 0; i < n; ++i) h.images.push_back(gen(c, (i + 1) % n));
  return h;
}

HomSpec iota_linear(std::size_t n, const LaurentScalar& nu, const LaurentScalar& q) {
  Presentation l = preset_linear(n, q);
  HomSpec h{l, l, {}};
  // x_i -> nu^((-1)^i) x_i with 1-based i
  for (std::size_t i = 0; i < n; ++i) h.images.push_back(gen(l, i).scaled(i % 2 == 0 ? nu.unit_inverse() : nu));
  return h;
}

HomSpec iota_cyclic(std::size_t n, const LaurentScalar& q) {
  Presentation c = preset_cyclic(n, q);
  HomSpec h{c, c, {}};
  for (std::size_t i = 0; i < n; ++i) h.images.push_back(-gen(c, i));
  return h;
}

HomSpec reversal(Family family, std::size_t n, const LaurentScalar& q) {
  HomSpec h{preset(family, n, q), preset(family, n, q.unit_inverse()), {}};
  for (std::size_t i = 0; i < n; ++i) h.images.push_back(gen(h.target, n - 1 - i));
  return h;
}

}  // namespace cqwa
