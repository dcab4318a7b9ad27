#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cqwa/pbw.hpp"
#include "cqwa/poisson.hpp"
#include "cqwa/qtorus.hpp"

namespace cqwa {

enum class Context { Pbw, Torus, Poisson };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Symbol, Q, V, Neg, Add, Sub, Mul, Pow };
  Kind kind;
  std::size_t offset = 0;  // byte offset of the node in the source
  Rational value;          // Number literal, or the exponent of Pow
  std::string name;        // Symbol
  std::vector<ExprPtr> args;
};

// Precedence ^ > unary minus > * > binary +/-. Throws ParseError with the
// byte offset of the problem.
ExprPtr parse(const std::string& src, Context context);

// Symbols: x1..xn, z0..zn, and Omega for the cyclic family.
NCPoly eval_pbw(const Expr& e, const Presentation& p, bool cyclic);
// Symbols: the given generator names.
TorusElement eval_torus(const Expr& e, const SkewMatrix& lambda, const std::vector<std::string>& names);
// Symbols: the given generator names plus any named extras.
CPoly eval_poisson(const Expr& e, const std::vector<std::string>& names,
                   const std::map<std::string, CPoly>& extra = {});

}  // namespace cqwa
