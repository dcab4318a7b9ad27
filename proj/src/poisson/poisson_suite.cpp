#include <map>

#include "cqwa/cluster.hpp"
#include "cqwa/poisson.hpp"
#include "cqwa/render.hpp"

namespace cqwa {

namespace {

std::string num(long i) { return std::to_string(i); }

struct Ring {
  std::size_t m;
  std::vector<std::string> names;
  BracketTable table;

  CPoly x(std::size_t i) const { return cgen(m, i - 1); }  // 1-based
  CPoly c(const Rational& r) const { return cconst(m, r); }
  CPoly br(const CPoly& f, const CPoly& g) const { return bracket(table, f, g); }
  void zero(Report& r, const std::string& id, const std::string& tag, const CPoly& diff) const {
    r.record(id, tag, diff.is_zero(), diff.is_zero() ? "" : "difference " + render(diff, names));
  }
  void equal(Report& r, const std::string& id, const std::string& tag, const CPoly& a, const CPoly& b) const {
    zero(r, id, tag, a - b);
  }
};

// x_i -> x_{i+k} on polynomials not involving the last k variables.
CPoly shift(const CPoly& f, unsigned k) {
  CPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent s(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i + k >= e.size()) throw Error(ErrorKind::InvalidArgument, "shift runs past the last variable");
      s[i + k] = e[i];
    }
    out.add_term(s, c);
  }
  return out;
}

void linear_side(Report& r, std::size_t n) {
  const std::string pre = "FL" + num(long(n));
  const Ring R{n, indexed_names("x", n), bracket_linear(n)};
  auto zs = commutative_z(n, n);
  auto Z = [&](int i) { return i < 0 ? CPoly(n) : zs.at(std::size_t(i)); };

  for (int i = 1; i <= int(n); ++i)
    R.equal(r, pre + "/z-from-left/" + num(i), "z_i = x_1 theta(z_{i-1}) - theta^2(z_{i-2})", Z(i),
            R.x(1) * shift(Z(i - 1), 1) - shift(Z(i - 2), 2));

  for (int i = 1; i <= int(n); ++i)
    for (int j = 1; j <= int(n); ++j) {
      const bool jodd = j % 2 == 1;
      const Rational sign = i % 2 == 1 ? 1 : -1;  // (-1)^(i+1) = (-1)^(i-1)
      CPoly rhs;
      std::string tag;
      if (j < i - 1) {
        rhs = jodd ? (R.x(i) * Z(j)).scaled(sign) : CPoly(n);
        tag = jodd ? "{x_i, z_j} = (-1)^(i+1) x_i z_j, j odd, j < i-1" : "{x_i, z_j} = 0, j even, j < i-1";
      } else if (j == i - 1) {
        rhs = jodd ? -Z(i) : Z(i - 2);
        tag = jodd ? "{x_i, z_{i-1}} = -z_i, i-1 odd" : "{x_i, z_{i-1}} = z_{i-2}, i-1 even";
      } else {
        rhs = jodd ? CPoly(n) : (R.x(i) * Z(j)).scaled(sign);
        tag = jodd ? "{x_i, z_j} = 0, j odd, j >= i" : "{x_i, z_j} = (-1)^(i-1) x_i z_j, j even, j >= i";
      }
      R.equal(r, pre + "/x-z/" + num(i) + "," + num(j), tag, R.br(R.x(i), Z(j)), rhs);
    }

  for (int i = 1; i <= int(n); ++i)
    for (int j = i + 1; j <= int(n); ++j) {
      CPoly rhs = (j % 2 == 0 && i % 2 == 1) ? Z(i) * Z(j) : CPoly(n);
      R.equal(r, pre + "/z-z/" + num(i) + "," + num(j), "{z_i, z_j} = z_i z_j for i odd, j even, else 0",
              R.br(Z(i), Z(j)), rhs);
    }

  const std::vector<Rational> lambdas{0, 1, -2, Rational(1, 3)};
  if (n % 2 == 1) {
    for (const auto& lam : lambdas)
      for (int i = 1; i <= int(n); ++i) {
        bool ok = principal_membership(R.br(R.x(i), Z(int(n)) - R.c(lam)), n, lam);
        r.record(pre + "/ideal/z_n-" + to_string(lam) + "/" + num(i), "(z_n - lambda) is a Poisson ideal", ok,
                 "{x_i, z_n - lambda} not in the ideal");
      }
  } else {
    for (int i = 1; i <= int(n); ++i) {
      bool ok = principal_membership(R.br(R.x(i), Z(int(n))), n, 0);
      r.record(pre + "/ideal/z_n/" + num(i), "(z_n) is a Poisson ideal", ok, "{x_i, z_n} not in (z_n)");
    }
    for (const auto& lam : lambdas) {
      if (lam == 0) continue;
      // modulo z_n and z_{n-1} - lambda, x_n = lambda^-1 z_{n-2}
      std::vector<CPoly> images;
      for (std::size_t i = 1; i <= n; ++i) images.push_back(i < n ? R.x(i) : Z(int(n) - 2).scaled(1 / lam));
      for (int i = 1; i <= int(n); ++i) {
        CPoly f = substitute(R.br(R.x(i), Z(int(n) - 1) - R.c(lam)), images);
        bool ok = principal_membership(f, n - 1, lam);
        r.record(pre + "/ideal/z_n,z_{n-1}-" + to_string(lam) + "/" + num(i),
                 "(z_n, z_{n-1} - lambda) is a Poisson ideal", ok, "{x_i, z_{n-1} - lambda} not in the ideal");
      }
    }
  }
}

void cyclic_side(Report& r, std::size_t n) {
  const std::string pre = "FC" + num(long(n));
  const Ring R{n, indexed_names("x", n), bracket_cyclic(n)};
  const int N = int(n);
  auto zs = commutative_z(n, n - 1);
  auto Z = [&](int i) { return i < 0 ? CPoly(n) : zs.at(std::size_t(i)); };
  std::vector<CPoly> rot;
  for (std::size_t i = 0; i < n; ++i) rot.push_back(cgen(n, (i + 1) % n));
  auto theta = [&](const CPoly& f) { return substitute(f, rot); };
  auto theta_k = [&](CPoly f, int k) {
    for (int t = 0; t < k; ++t) f = theta(f);
    return f;
  };

  for (int j = 1; j <= N - 2; ++j) {
    CPoly rhs = j % 2 == 1 ? Z(j) * R.x(n) - theta(Z(j - 1)) : -theta(Z(j - 1));
    R.equal(r, pre + "/x_n-z/" + num(j), "{x_n, z_j} = (z_j x_n) - theta(z_{j-1})", R.br(R.x(n), Z(j)), rhs);
  }
  R.equal(r, pre + "/x_n-z/" + num(N - 1), "{x_n, z_{n-1}} = z_{n-2} - theta(z_{n-2})", R.br(R.x(n), Z(N - 1)),
          Z(N - 2) - theta(Z(N - 2)));
  const CPoly om = Z(N - 1) * R.x(n) - Z(N - 2) - theta(Z(N - 2));
  R.equal(r, pre + "/omega/theta-fixed", "theta(Omega) = Omega", theta(om), om);
  for (std::size_t i = 1; i <= n; ++i)
    R.zero(r, pre + "/omega/central/" + num(long(i)), "{x_i, Omega} = 0", R.br(R.x(i), om));

  const CPoly t3 = theta(Z(N - 3));
  R.equal(r, pre + "/theta-z/x1/a", "{x_1, theta(z_{n-3})} = -theta^2(z_{n-4})", R.br(R.x(1), t3),
          -theta_k(Z(N - 4), 2));
  R.equal(r, pre + "/theta-z/x1/b", "{x_1, theta(z_{n-3})} = -x_1 theta(z_{n-3}) + z_{n-2}", R.br(R.x(1), t3),
          Z(N - 2) - R.x(1) * t3);
  for (int i = 2; i <= N - 2; ++i)
    R.equal(r, pre + "/theta-z/x/" + num(i), "{x_i, theta(z_{n-3})} = (-1)^i x_i theta(z_{n-3})",
            R.br(R.x(std::size_t(i)), t3), (R.x(std::size_t(i)) * t3).scaled(i % 2 == 0 ? 1 : -1));
  for (int i = 0; i <= N - 3; ++i) {
    CPoly tail = theta_k(Z(N - i - 3), i + 1);
    CPoly rhs = i % 2 == 1 ? -tail : Z(i) * t3 - tail;
    R.equal(r, pre + "/theta-z/z/" + num(i), "{z_i, theta(z_{n-3})} by parity of i", R.br(Z(i), t3), rhs);
  }
  R.equal(r, pre + "/theta-z/last", "{z_{n-3}, theta(z_{n-3})} = z_{n-3} theta(z_{n-3}) - 1", R.br(Z(N - 3), t3),
          Z(N - 3) * t3 - R.c(1));

  // x_{n-1} -> lambda z_{n-3}, x_n -> lambda theta(z_{n-3}) into F_{n-2}.
  const std::size_t k = n - 2;
  const Ring S{k, indexed_names("x", k), bracket_linear(k)};
  auto zk = commutative_z(k, k);
  for (const Rational& lam : {Rational(1), Rational(-1)}) {
    std::vector<CPoly> tau;
    for (std::size_t i = 1; i <= k; ++i) tau.push_back(S.x(i));
    tau.push_back(zk[k - 1].scaled(lam));
    tau.push_back(shift(zk[k - 1], 1).scaled(lam));
    auto T = [&](const CPoly& f) { return substitute(f, tau); };
    const std::string lp = pre + "/exceptional[" + to_string(lam) + "]";
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        CPoly diff = T(R.br(R.x(i), R.x(j))) - S.br(tau[i - 1], tau[j - 1]);
        r.record(lp + "/hom/" + num(long(i)) + "," + num(long(j)), "rho_lambda preserves {x_i, x_j}",
                 principal_membership(diff, k, lam), "difference " + render(diff, S.names));
      }
    const std::vector<std::pair<std::string, CPoly>> members{
        {"z_{n-1}", Z(N - 1)}, {"theta(z_{n-2}) - lambda", theta(Z(N - 2)) - R.c(lam)}, {"Omega + 2 lambda", om + R.c(2 * lam)}};
    for (const auto& [name, f] : members)
      r.record(lp + "/member/" + name, name + " lies in M_lambda", principal_membership(T(f), k, lam),
               "image " + render(T(f), S.names));
    bool omega_out = !principal_membership(T(om), k, lam);
    r.record(lp + "/nonmember/Omega", "Omega itself is not in M_lambda", omega_out, "Omega maps into the ideal");
  }
}

// Laurent ring on w_0..w_n with the parity log-canonical bracket.
void cluster_side(Report& r, std::size_t n) {
  const std::string pre = "R" + num(long(n));
  const std::size_t m = n + 1;
  const int N = int(n);
  const SkewMatrix par = parity_skew(m);
  const Ring R{m, indexed_names("w", m, 0), log_canonical(par)};
  const CPoly one = R.c(1);

  std::map<int, CPoly> w;
  for (int i = 0; i <= N; ++i) w[i] = cgen(m, std::size_t(i));
  for (int i = N + 1; i <= 2 * N + 2; ++i) w[i] = exact_quotient(one + w[i - N] * w[i - 1], w[i - N - 1]);
  for (int i = -1; i >= -N; --i) w[i] = exact_quotient(one + w[i + 1] * w[i + N], w[i + N + 1]);
  std::map<int, CPoly> x;
  for (int i = -1; i <= 2 * N + 1; ++i) x[i] = exact_quotient(w[i - 1] + w[i + 1], w[i]);

  for (int i = 0; i <= N; ++i)
    R.equal(r, pre + "/x-x/adjacent/" + num(i), "{x_i, x_{i+1}} = 2 (x_i x_{i+1} - 1)", R.br(x[i], x[i + 1]),
            (x[i] * x[i + 1] - one).scaled(2));
  for (int i = 1; i <= N; ++i)
    for (int d = 2; d <= N - 2; ++d)
      R.equal(r, pre + "/x-x/gap/" + num(i) + "," + num(i + d), "{x_i, x_{i+d}} = -+2 x_{i+d} x_i by parity of d",
              R.br(x[i], x[i + d]), (x[i + d] * x[i]).scaled(d % 2 == 0 ? -2 : 2));
  for (int i = -1; i <= N + 1; ++i) {
    R.equal(r, pre + "/x-w/own/" + num(i) + "/product", "w_i x_i = w_{i-1} + w_{i+1}", w[i] * x[i], w[i - 1] + w[i + 1]);
    CPoly b = R.br(x[i], w[i]);
    R.equal(r, pre + "/x-w/own/" + num(i) + "/a", "{x_i, w_i} = w_{i-1} - w_{i+1}", b, w[i - 1] - w[i + 1]);
    R.equal(r, pre + "/x-w/own/" + num(i) + "/b", "{x_i, w_i} = x_i w_i - 2 w_{i+1}", b, x[i] * w[i] - w[i + 1].scaled(2));
    bool stated = b == w[i + 1].scaled(2) - x[i] * w[i], other = b == w[i - 1].scaled(2) - x[i] * w[i];
    const std::string id = pre + "/resolution/x-w-own-third-form/" + num(i);
    const std::string tag = "third form of {x_i, w_i}";
    if (stated && !other)
      r.pass(id, tag, "holds as 2 w_{i+1} - x_i w_i");
    else if (!stated && other)
      r.pass(id, tag, "2 w_{i+1} - x_i w_i fails; 2 w_{i-1} - x_i w_i holds");
    else
      r.fail(id, tag, std::string("2 w_{i+1} - x_i w_i ") + (stated ? "holds" : "fails") + ", 2 w_{i-1} - x_i w_i " +
                          (other ? "holds" : "fails"));
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      if (i == j || (i == N && j == 0)) continue;
      bool up = (i < j && (i + j) % 2 == 0) || (i > j && (i + j) % 2 == 1);
      R.equal(r, pre + "/x-w/other/" + num(i) + "," + num(j), "{x_i, w_j} = +-x_i w_j by position and parity",
              R.br(x[i], w[j]), (x[i] * w[j]).scaled(up ? 1 : -1));
    }
  {
    // x_n = x_0, so the pair (n, 0) obeys the own-w relation instead.
    const CPoly b = R.br(x[N], w[0]);
    const bool stated = b == x[N] * w[0], other = b == x[N] * w[0] - w[1].scaled(2);
    const std::string id = pre + "/resolution/x-w-pair-n-0", tag = "{x_n, w_0} under the position and parity rule";
    if (stated && !other)
      r.pass(id, tag, "holds as x_n w_0");
    else if (!stated && other)
      r.pass(id, tag, "x_n w_0 fails; x_n w_0 - 2 w_1 holds");
    else
      r.fail(id, tag, std::string("x_n w_0 ") + (stated ? "holds" : "fails") + ", x_n w_0 - 2 w_1 " +
                          (other ? "holds" : "fails"));
  }
  for (int i = -1; i <= N + 1; ++i) R.equal(r, pre + "/x-periodic/" + num(i), "x_{n+i} = x_i", x[N + i], x[i]);

  for (int i = -1; i <= N + 1; ++i)
    for (int j = i + 1; j <= i + N; ++j)
      R.equal(r, pre + "/w-w/" + num(i) + "," + num(j), "{w_i, w_j} = w_i w_j for i+j odd, 0 for i+j even",
              R.br(w[i], w[j]), (i + j) % 2 != 0 ? w[i] * w[j] : CPoly(m));
  R.equal(r, pre + "/w-w/0," + num(N + 1), "{w_0, w_{n+1}} = 2 w_1 w_n", R.br(w[0], w[N + 1]), (w[1] * w[N]).scaled(2));

  // On x_1..x_n this bracket is twice the cyclic one.
  const BracketTable fc = bracket_cyclic(n);
  std::vector<CPoly> xs;
  for (int i = 1; i <= N; ++i) xs.push_back(x[i]);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      R.equal(r, pre + "/twice-cyclic/" + num(i) + "," + num(j), "{x_i, x_j} = 2 {x_i, x_j}_cyclic at x = x(w)",
              R.br(x[i], x[j]), substitute(fc.entry(std::size_t(i - 1), std::size_t(j - 1)), xs).scaled(2));

  // The quantum torus specialises to this ring at v = 1.
  const WFamily W = generate_w(n, -N, 2 * N + 2);
  const LaurentScalar qm1 = LaurentScalar::q() - 1;
  auto divided = [&](const TorusElement& f, const TorusElement& g) {
    CPoly out(m);
    const TorusElement comm = torus_commutator(W.lambda(), f, g);
    for (const auto& [e, c] : comm.terms()) out.add_term(e, specialize(exact_divide(c, qm1), 1));
    return out;
  };
  std::map<int, TorusElement> qx;
  for (int i = -1; i <= N + 1; ++i) {
    qx[i] = left_divide(W.lambda(), W[i], W[i - 1].scaled(LaurentScalar::v(-1)) + W[i + 1].scaled(LaurentScalar::v()));
    R.equal(r, pre + "/specialise/w/" + num(i), "w_i at v = 1 is the commutative w_i", specialize_at_one(W[i]), w[i]);
    R.equal(r, pre + "/specialise/x/" + num(i), "x_i at v = 1 is the commutative x_i", specialize_at_one(qx[i]), x[i]);
  }
  for (int i = 0; i <= N; ++i) {
    R.equal(r, pre + "/specialise/bracket/x" + num(i) + ",x" + num(i + 1),
            "(x_i x_{i+1} - x_{i+1} x_i)/(q-1) at v = 1 is {x_i, x_{i+1}}", divided(qx[i], qx[i + 1]),
            R.br(x[i], x[i + 1]));
    R.equal(r, pre + "/specialise/bracket/x" + num(i) + ",w" + num(i), "(x_i w_i - w_i x_i)/(q-1) at v = 1 is {x_i, w_i}",
            divided(qx[i], W[i]), R.br(x[i], w[i]));
  }
}

void cluster_bracket_side(Report& r, std::size_t n) {
  const std::string pre = "D" + num(long(n));
  const std::size_t m = n + 2;
  const Ring D{m, indexed_names("W", m, 0), bracket_cluster(n)};
  auto jac = jacobi_check(D.table);
  r.record(pre + "/jacobi", "Jacobi identity on every generator triple", jac.ok,
           jac.ok ? "" : "triple " + num(long(jac.failing[0][0])) + "," + num(long(jac.failing[0][1])) + "," +
                             num(long(jac.failing[0][2])) + ": " + render(jac.witnesses[0], D.names));
  const CPoly delta = cgen(m, 0) * cgen(m, n + 1) - cgen(m, 1) * cgen(m, n) - D.c(1);
  for (std::size_t i = 0; i < m; ++i)
    D.zero(r, pre + "/delta-central/" + num(long(i)), "{W_i, Delta} = 0", D.br(cgen(m, i), delta));
}

void kernel_side(Report& r, std::size_t n) {
  auto show = [](const std::vector<std::vector<long>>& b) {
    std::string s = "{";
    for (const auto& v : b) {
      s += "(";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      s += ")";
    }
    return s + "}";
  };
  auto odd = lambda_kernel(alternating_skew(n));
  std::vector<long> en(n, 0);
  en[n - 1] = 1;
  r.record("kernel/z-matrix/n" + num(long(n)), "kernel of the z commutation matrix is Z e_n for odd n",
           odd == std::vector<std::vector<long>>{en}, show(odd));
  auto even = lambda_kernel(alternating_skew(n - 1));
  r.record("kernel/z-matrix/n" + num(long(n - 1)), "kernel of the z commutation matrix is 0 for even n", even.empty(),
           show(even));
  auto par = lambda_kernel(parity_skew(n + 1));
  r.record("kernel/parity/n" + num(long(n)), "kernel of the parity matrix on w_0..w_n is 0", par.empty(), show(par));
}

}  // namespace

Report suite_poisson(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "Poisson suite needs odd n >= 3");
  Report r("poisson/n" + std::to_string(n));
  linear_side(r, n);
  linear_side(r, n - 1);
  cyclic_side(r, n);
  cluster_side(r, n);
  cluster_bracket_side(r, n);
  kernel_side(r, n);
  const bool lin = semiclassical_limit(preset_linear(n)) == bracket_linear(n);
  const bool cyc = semiclassical_limit(preset_cyclic(n)) == bracket_cyclic(n);
  r.record("limit/linear", "divided commutators of L_n^q at v = 1 give the linear bracket", lin, "tables differ");
  r.record("limit/cyclic", "divided commutators of C_n^q at v = 1 give the cyclic bracket", cyc, "tables differ");
  return r;
}

}  // namespace cqwa
