#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include "cqwa/expr.hpp"

namespace cqwa {

namespace {

[[noreturn]] void fail(std::size_t at, const std::string& what) {
  throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(at));
}

bool known_symbol(const std::string& s, Context ctx) {
  if (s == "q" || s == "v") return ctx != Context::Poisson;
  auto indexed = [&](char stem) {
    return s.size() > 1 && s[0] == stem && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(c); });
  };
  switch (ctx) {
    case Context::Pbw: return indexed('x') || indexed('z') || s == "Omega";
    case Context::Torus: return indexed('w') || indexed('x') || indexed('z');
    case Context::Poisson:
      return indexed('x') || indexed('z') || indexed('w') || indexed('W') || s == "Omega" || s == "Delta";
  }
  return false;
}

class Parser {
 public:
  Parser(const std::string& src, Context ctx) : s_(src), ctx_(ctx) {}

  ExprPtr run() {
    ExprPtr e = sum();
    skip();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')') fail(pos_, "unbalanced ')'");
      fail(pos_, "expected an operator (juxtaposition is not multiplication)");
    }
    return e;
  }

 private:
  const std::string& s_;
  Context ctx_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static ExprPtr node(Expr::Kind k, std::size_t at, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->offset = at;
    e->args = std::move(args);
    return e;
  }

  ExprPtr sum() {
    ExprPtr left = product();
    while (true) {
      skip();
      std::size_t at = pos_;
      if (eat('+'))
        left = node(Expr::Kind::Add, at, {left, product()});
      else if (eat('-'))
        left = node(Expr::Kind::Sub, at, {left, product()});
      else
        return left;
    }
  }

  ExprPtr product() {
    ExprPtr left = unary();
    while (true) {
      skip();
      std::size_t at = pos_;
      if (!eat('*')) return left;
      left = node(Expr::Kind::Mul, at, {left, unary()});
    }
  }

  ExprPtr unary() {
    skip();
    std::size_t at = pos_;
    if (eat('-')) return node(Expr::Kind::Neg, at, {unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    skip();
    std::size_t at = pos_;
    if (!eat('^')) return base;
    Rational ex = exponent();
    if (ex.get_den() != 1) {
      if (base->kind != Expr::Kind::Q) fail(at, "fractional exponents are only allowed on q");
      if (ex.get_den() != 2) fail(at, "exponents on q must be half-integers");
    }
    if (ctx_ == Context::Pbw && ex < 0 && base->kind != Expr::Kind::Q && base->kind != Expr::Kind::V &&
        base->kind != Expr::Kind::Number)
      fail(at, "negative exponent on a noncommutative element");
    auto e = node(Expr::Kind::Pow, at, {base});
    std::const_pointer_cast<Expr>(e)->value = ex;
    return e;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(start, "expected an integer");
    if (pos_ - start > 9) fail(start, "integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }

  // -k, k, or a parenthesised rational (a/b), (-a/b).
  Rational exponent() {
    skip();
    if (eat('(')) {
      bool neg = eat('-');
      Rational r(integer());
      if (eat('/')) {
        skip();
        std::size_t at = pos_;
        long d = integer();
        if (d == 0) fail(at, "zero denominator");
        r /= d;
      }
      if (!eat(')')) fail(pos_, "expected ')'");
      r.canonicalize();
      return neg ? Rational(-r) : r;
    }
    bool neg = eat('-');
    Rational r(integer());
    return neg ? Rational(-r) : r;
  }

  ExprPtr atom() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) fail(at, "unexpected end of input");
    char c = s_[pos_];
    if (eat('(')) {
      ExprPtr inner = sum();
      if (!eat(')')) fail(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r(integer());
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::size_t dat = pos_;
        long d = integer();
        if (d == 0) fail(dat, "zero denominator");
        r /= d;
        r.canonicalize();
      }
      auto e = node(Expr::Kind::Number, at);
      std::const_pointer_cast<Expr>(e)->value = r;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(at, pos_ - at);
      if (!known_symbol(name, ctx_)) fail(at, "unknown identifier '" + name + "'");
      if (name == "q") return node(Expr::Kind::Q, at);
      if (name == "v") return node(Expr::Kind::V, at);
      auto e = node(Expr::Kind::Symbol, at);
      std::const_pointer_cast<Expr>(e)->name = name;
      return e;
    }
    fail(at, std::string("unexpected character '") + c + "'");
  }
};

// Ring operations for one evaluation target.
template <class R, class Scalar>
struct Ops {
  std::function<R(const Scalar&)> constant;
  std::function<R(const Expr&)> symbol;
  std::function<R(const R&, const R&)> mul;
  std::function<R(const R&, int)> pow;
  std::function<std::optional<Scalar>(const R&)> as_scalar;
  std::function<Scalar(const Rational&)> q_power;  // q^e
  std::function<Scalar(int)> v_power;
};

int small_int(const Rational& r, std::size_t at) {
  if (r.get_den() != 1 || !r.get_num().fits_sint_p()) fail(at, "exponent must be an integer");
  return static_cast<int>(r.get_num().get_si());
}

template <class R, class Scalar>
R evaluate(const Expr& e, const Ops<R, Scalar>& ops) {
  switch (e.kind) {
    case Expr::Kind::Number: return ops.constant(Scalar(e.value));
    case Expr::Kind::Symbol: return ops.symbol(e);
    case Expr::Kind::Q: return ops.constant(ops.q_power(Rational(1)));
    case Expr::Kind::V: return ops.constant(ops.v_power(1));
    case Expr::Kind::Neg: return -evaluate(*e.args[0], ops);
    case Expr::Kind::Add: return evaluate(*e.args[0], ops) + evaluate(*e.args[1], ops);
    case Expr::Kind::Sub: return evaluate(*e.args[0], ops) - evaluate(*e.args[1], ops);
    case Expr::Kind::Mul: return ops.mul(evaluate(*e.args[0], ops), evaluate(*e.args[1], ops));
    case Expr::Kind::Pow: {
      const Expr& base = *e.args[0];
      if (base.kind == Expr::Kind::Q) return ops.constant(ops.q_power(e.value));
      int k = small_int(e.value, e.offset);
      if (base.kind == Expr::Kind::V) return ops.constant(ops.v_power(k));
      R b = evaluate(base, ops);
      if (k < 0) {
        if (auto s = ops.as_scalar(b)) {
          Scalar inv = *s;
          if constexpr (std::is_same_v<Scalar, Rational>) {
            if (inv == 0) fail(e.offset, "zero to a negative power");
            inv = 1 / inv;
            Scalar p = 1;
            for (int t = 0; t < -k; ++t) p *= inv;
            return ops.constant(p);
          } else {
            if (!inv.is_unit()) fail(e.offset, "scalar is not invertible");
            return ops.constant(inv.pow(k));
          }
        }
      }
      return ops.pow(b, k);
    }
  }
  fail(e.offset, "malformed expression");
}

std::optional<int> index_of(const std::string& name, char stem) {
  if (name.size() < 2 || name[0] != stem) return std::nullopt;
  if (name.size() > 6) return std::nullopt;
  return std::stoi(name.substr(1));
}

template <class Poly>
std::optional<LaurentScalar> laurent_constant(const Poly& f) {
  if (f.is_zero()) return LaurentScalar(0);
  if (f.size() != 1) return std::nullopt;
  const auto& [e, c] = f.leading();
  if (std::any_of(e.begin(), e.end(), [](int a) { return a != 0; })) return std::nullopt;
  return c;
}

}  // namespace

ExprPtr parse(const std::string& src, Context context) { return Parser(src, context).run(); }

NCPoly eval_pbw(const Expr& e, const Presentation& p, bool cyclic) {
  const int n = static_cast<int>(p.n());
  std::map<int, NCPoly> zcache;
  Ops<NCPoly, LaurentScalar> ops;
  ops.constant = [&](const LaurentScalar& c) { return scalar(p, c); };
  ops.symbol = [&](const Expr& s) -> NCPoly {
    if (auto i = index_of(s.name, 'x')) {
      if (*i < 1 || *i > n) fail(s.offset, "generator " + s.name + " out of range");
      return gen(p, std::size_t(*i - 1));
    }
    if (auto i = index_of(s.name, 'z')) {
      if (*i > n) fail(s.offset, "element " + s.name + " out of range");
      auto it = zcache.find(*i);
      if (it == zcache.end()) it = zcache.emplace(*i, z_element(p, *i)).first;
      return it->second;
    }
    if (s.name == "Omega") {
      if (!cyclic) fail(s.offset, "Omega needs the cyclic family");
      return omega(p);
    }
    fail(s.offset, "unknown identifier '" + s.name + "'");
  };
  ops.mul = [&](const NCPoly& a, const NCPoly& b) { return multiply(p, a, b); };
  ops.pow = [&](const NCPoly& a, int k) { return power(p, a, unsigned(k)); };
  ops.as_scalar = [](const NCPoly& f) { return laurent_constant(f); };
  ops.q_power = [](const Rational& r) { return qpow(r); };
  ops.v_power = [](int k) { return LaurentScalar::v(k); };
  return evaluate(e, ops);
}

TorusElement eval_torus(const Expr& e, const SkewMatrix& lambda, const std::vector<std::string>& names) {
  const std::size_t m = lambda.size();
  if (names.size() != m) throw Error(ErrorKind::DimensionMismatch, "one name per torus generator");
  Ops<TorusElement, LaurentScalar> ops;
  ops.constant = [&](const LaurentScalar& c) { return torus_constant(m, c); };
  ops.symbol = [&](const Expr& s) -> TorusElement {
    auto it = std::find(names.begin(), names.end(), s.name);
    if (it == names.end()) fail(s.offset, "generator " + s.name + " not in this torus");
    return torus_gen(m, std::size_t(it - names.begin()));
  };
  ops.mul = [&](const TorusElement& a, const TorusElement& b) { return torus_mul(lambda, a, b); };
  ops.pow = [&](const TorusElement& a, int k) { return torus_pow(lambda, a, k); };
  ops.as_scalar = [](const TorusElement& f) { return laurent_constant(f); };
  ops.q_power = [](const Rational& r) { return qpow(r); };
  ops.v_power = [](int k) { return LaurentScalar::v(k); };
  return evaluate(e, ops);
}

CPoly eval_poisson(const Expr& e, const std::vector<std::string>& names, const std::map<std::string, CPoly>& extra) {
  const std::size_t m = names.size();
  Ops<CPoly, Rational> ops;
  ops.constant = [&](const Rational& c) { return cconst(m, c); };
  ops.symbol = [&](const Expr& s) -> CPoly {
    auto it = std::find(names.begin(), names.end(), s.name);
    if (it != names.end()) return cgen(m, std::size_t(it - names.begin()));
    auto x = extra.find(s.name);
    if (x != extra.end()) return x->second;
    fail(s.offset, "unknown identifier '" + s.name + "'");
  };
  ops.mul = [](const CPoly& a, const CPoly& b) { return a * b; };
  ops.pow = [](const CPoly& a, int k) { return cpow(a, k); };
  ops.as_scalar = [](const CPoly& f) -> std::optional<Rational> {
    if (f.is_zero()) return Rational(0);
    if (f.size() != 1) return std::nullopt;
    const auto& [ex, c] = f.leading();
    if (std::any_of(ex.begin(), ex.end(), [](int a) { return a != 0; })) return std::nullopt;
    return c;
  };
  ops.q_power = [](const Rational&) -> Rational { throw Error(ErrorKind::ParseError, "q is not available here"); };
  ops.v_power = [](int) -> Rational { throw Error(ErrorKind::ParseError, "v is not available here"); };
  return evaluate(e, ops);
}

}  // namespace cqwa
