#include "cqwa/pbw.hpp"
#include "cqwa/render.hpp"

namespace cqwa {

namespace {

std::string idx(const char* stem, std::size_t i) { return std::string(stem) + std::to_string(i); }

// 1-based helpers around one presentation.
struct Ctx {
  const Presentation& p;
  std::vector<NCPoly> z;  // z[k] = z_k
  LaurentScalar q = LaurentScalar::q();

  NCPoly x(std::size_t i) const { return gen(p, i - 1); }
  NCPoly Z(int i) const { return i < 0 ? NCPoly(p.n()) : z.at(static_cast<std::size_t>(i)); }
  NCPoly c(const LaurentScalar& s) const { return scalar(p, s); }
  NCPoly mul(const NCPoly& a, const NCPoly& b) const { return multiply(p, a, b); }
  NCPoly mul(const NCPoly& a, const NCPoly& b, const NCPoly& d) const { return mul(mul(a, b), d); }
};

void zero_check(Report& r, const std::string& id, const std::string& tag, const NCPoly& diff) {
  r.record(id, tag, diff.is_zero(), diff.is_zero() ? "" : "difference " + render(diff));
}

void common_checks(Report& r, const std::string& pre, const Presentation& p) {
  r.record(pre + "/pbw", "ordered monomials form a basis", pbw_check(p), "PBW criterion fails");
  auto d = diamond_oracle(p);
  r.record(pre + "/overlaps", "every overlap x_k x_j x_i resolves", d.resolvable,
           d.resolvable ? "" : "first failure " + render(d.witnesses.front()));
}

void linear_checks(Report& r, std::size_t n) {
  const std::string pre = "L" + std::to_string(n);
  Presentation p = preset_linear(n);
  common_checks(r, pre, p);
  Ctx c{p, z_sequence(p, n)};
  const auto& q = c.q;
  const LaurentScalar qi = q.unit_inverse();

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const bool jodd = j % 2 == 1, iodd = i % 2 == 1;
      const LaurentScalar sign_q = iodd ? q : qi;  // q^((-1)^(i-1))
      NCPoly lhs = c.mul(c.x(i), c.Z(j)), zx = c.mul(c.Z(j), c.x(i)), rhs;
      std::string tag;
      if (j + 1 < i) {
        rhs = jodd ? zx.scaled(sign_q) : zx;
        tag = jodd ? "x_i z_j = q^((-1)^(i-1)) z_j x_i, j odd, j < i-1" : "x_i z_j = z_j x_i, j even, j < i-1";
      } else if (j + 1 == i) {
        if (iodd) {
          rhs = zx + c.Z(int(i) - 2).scaled(q - 1);
          tag = "x_i z_{i-1} = z_{i-1} x_i + (q-1) z_{i-2}, i odd";
        } else {
          rhs = zx.scaled(qi) + c.Z(int(i) - 2).scaled(LaurentScalar(1) - qi);
          tag = "x_i z_{i-1} = q^-1 z_{i-1} x_i + (1-q^-1) z_{i-2}, i even";
        }
      } else {
        rhs = jodd ? zx : zx.scaled(sign_q);
        tag = jodd ? "x_i z_j = z_j x_i, j odd, j >= i" : "x_i z_j = q^((-1)^(i-1)) z_j x_i, j even, j >= i";
      }
      zero_check(r, pre + "/x-z/" + idx("x", i) + "*" + idx("z", j), tag, lhs - rhs);
    }

  for (std::size_t i = 2; i <= n; ++i) {
    NCPoly lhs = c.mul(c.x(i), c.Z(int(i) - 1)), zx = c.mul(c.Z(int(i) - 1), c.x(i));
    NCPoly rhs = i % 2 == 1 ? zx.scaled(q) + c.Z(int(i)).scaled(LaurentScalar(1) - q)
                            : zx + c.Z(int(i)).scaled(qi - 1);
    zero_check(r, pre + "/x-z-next/" + idx("x", i), "x_i z_{i-1} in terms of z_{i-1} x_i and z_i", lhs - rhs);
  }

  for (std::size_t i = 1; i <= n; ++i) {
    LaurentScalar rho = n % 2 == 1 ? LaurentScalar(1) : (i % 2 == 0 ? q : qi);
    NCPoly diff = c.mul(c.Z(int(n)), c.x(i)) - c.mul(c.x(i), c.Z(int(n))).scaled(rho);
    zero_check(r, pre + "/z_n-normal/" + idx("x", i), "z_n x_i = rho_i x_i z_n", diff);
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      LaurentScalar t = (i % 2 == 1 && j % 2 == 0) ? q : LaurentScalar(1);
      NCPoly diff = c.mul(c.Z(int(i)), c.Z(int(j))) - c.mul(c.Z(int(j)), c.Z(int(i))).scaled(t);
      zero_check(r, pre + "/z-z/" + idx("z", i) + "*" + idx("z", j), "z_i z_j = q^lambda_ij z_j z_i", diff);
    }

  for (std::size_t i = 1; i <= n; ++i) {
    NCPoly th1 = shift_generators(c.Z(int(i) - 1), 1), th2 = shift_generators(c.Z(int(i) - 2), 2);
    NCPoly diff = c.Z(int(i)) - (c.mul(c.x(1), th1) - th2);
    zero_check(r, pre + "/z-from-left/" + idx("z", i), "z_i = x_1 theta(z_{i-1}) - theta^2(z_{i-2})", diff);
  }

  std::string w;
  if (n >= 2) {
    bool ok = check_hom(theta_linear(n), &w);
    r.record(pre + "/hom/theta", "x_i -> x_{i+1} embeds L_{n-1} in L_n", ok, w);
  }
  for (const LaurentScalar& nu : {LaurentScalar::v(), LaurentScalar(2), -LaurentScalar::q(-1)}) {
    bool ok = check_hom(iota_linear(n, nu), &w);
    r.record(pre + "/hom/iota[" + to_string(nu) + "]", "x_i -> nu^((-1)^i) x_i is an automorphism", ok, w);
  }
  {
    LaurentScalar nu = LaurentScalar::v(), mu = LaurentScalar(3);
    HomSpec lhs = compose(iota_linear(n, nu), iota_linear(n, mu)), rhs = iota_linear(n, nu * mu);
    r.record(pre + "/hom/iota-compose", "iota_nu iota_mu = iota_{nu mu}", lhs.images == rhs.images,
             "images differ");
  }
  bool ok = check_hom(reversal(Family::Linear, n), &w);
  r.record(pre + "/hom/reversal", "x_i -> x_{n-i+1} maps L_n^q to L_n^{q^-1}", ok, w);
}

void cyclic_checks(Report& r, std::size_t n) {
  const std::string pre = "C" + std::to_string(n);
  Presentation p = preset_cyclic(n);
  common_checks(r, pre, p);
  Ctx c{p, z_sequence(p, n - 1)};
  const auto& q = c.q;
  const LaurentScalar one_minus_q = LaurentScalar(1) - q;
  auto theta = [](const NCPoly& f) { return shift_generators(f, 1); };

  for (std::size_t j = 1; j + 2 <= n; ++j) {
    NCPoly zx = c.mul(c.Z(int(j)), c.x(n));
    NCPoly rhs = (j % 2 == 1 ? zx.scaled(q) : zx) + theta(c.Z(int(j) - 1)).scaled(one_minus_q);
    zero_check(r, pre + "/x_n-z/" + idx("z", j), "x_n z_j = (q or 1) z_j x_n + (1-q) theta(z_{j-1})",
               c.mul(c.x(n), c.Z(int(j))) - rhs);
  }
  {
    NCPoly rhs = c.mul(c.Z(int(n) - 1), c.x(n)) + (theta(c.Z(int(n) - 2)) - c.Z(int(n) - 2)).scaled(one_minus_q);
    zero_check(r, pre + "/x_n-z/" + idx("z", n - 1), "x_n z_{n-1} = z_{n-1} x_n + (1-q)(theta(z_{n-2}) - z_{n-2})",
               c.mul(c.x(n), c.Z(int(n) - 1)) - rhs);
  }

  NCPoly om = omega(p);
  HomSpec th = theta_cyclic(n);
  zero_check(r, pre + "/omega/theta-fixed", "theta(Omega) = Omega", apply_hom(th, om) - om);
  for (std::size_t i = 1; i <= n; ++i)
    zero_check(r, pre + "/omega/central/" + idx("x", i), "Omega commutes with x_i", commutator(p, c.x(i), om));

  for (std::size_t i = 1; i + 1 <= n; ++i) {
    NCPoly a = c.mul(c.Z(int(i)), i >= 2 ? theta(c.Z(int(i) - 2)) : NCPoly(n));
    NCPoly b = c.mul(c.Z(int(i) - 1), theta(c.Z(int(i) - 1)));
    NCPoly lhs = i % 2 == 1 ? a.scaled(q) - b : a - b;
    NCPoly rhs = c.c(-qpow(int(i % 2 == 1 ? i - 1 : i - 2) / 2));
    zero_check(r, pre + "/w-identity/" + idx("i=", i), "(q) z_i theta(z_{i-2}) - z_{i-1} theta(z_{i-1}) = -q^k",
               lhs - rhs);
  }

  std::string w;
  r.record(pre + "/hom/theta", "x_i -> x_{i+1 mod n} is an automorphism", check_hom(th, &w), w);
  unsigned ord = order_on_generators(th, 2 * n);
  r.record(pre + "/hom/theta-order", "theta has order n", ord == n, "order " + std::to_string(ord));
  HomSpec io = iota_cyclic(n);
  r.record(pre + "/hom/iota", "x_i -> -x_i is an automorphism", check_hom(io, &w), w);
  HomSpec it = compose(io, th);
  unsigned ord2 = order_on_generators(it, 4 * n);
  r.record(pre + "/hom/iota-theta-order", "iota theta has order 2n", ord2 == 2 * n, "order " + std::to_string(ord2));
  r.record(pre + "/hom/reversal", "x_i -> x_{n-i+1} maps C_n^q to C_n^{q^-1}",
           check_hom(reversal(Family::Cyclic, n), &w), w);
}

}  // namespace

Report suite_structure(Family family, std::size_t n) {
  Report r(std::string("structure/") + (family == Family::Linear ? "L" : "C") + std::to_string(n));
  if (family == Family::Linear)
    linear_checks(r, n);
  else
    cyclic_checks(r, n);
  return r;
}

}  // namespace cqwa
