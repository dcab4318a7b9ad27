#include "cqwa/render.hpp"

#include <sstream>

namespace cqwa {

std::vector<std::string> indexed_names(const std::string& stem, std::size_t count, int first) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(first + static_cast<int>(i)));
  return names;
}

namespace {

std::string monomial_text(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Sign and body of one term; the body never starts with a minus.
std::pair<bool, std::string> term_text(const LaurentScalar& c, const std::string& mono) {
  if (c.is_unit()) {
    bool negative = sgn(c.terms().begin()->second) < 0;
    std::string mag = to_string(negative ? -c : c);
    if (mono.empty()) return {negative, mag};
    if (mag == "1") return {negative, mono};
    return {negative, mag + "*" + mono};
  }
  std::string paren = "(" + to_string(c) + ")";
  return {false, mono.empty() ? paren : paren + "*" + mono};
}

std::pair<bool, std::string> term_text(const Rational& c, const std::string& mono) {
  bool negative = sgn(c) < 0;
  std::string mag = to_string(Rational(abs(c)));
  if (mono.empty()) return {negative, mag};
  if (mag == "1") return {negative, mono};
  return {negative, mag + "*" + mono};
}

template <class Poly>
std::string render_poly(const Poly& f, std::vector<std::string> names) {
  if (names.empty()) names = indexed_names("x", f.nvars());
  if (names.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "name list length");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    auto [negative, body] = term_text(c, monomial_text(e, names));
    if (first)
      out << (negative ? "-" : "") << body;
    else
      out << (negative ? " - " : " + ") << body;
    first = false;
  }
  return out.str();
}

}  // namespace

std::string render(const NCPoly& f, const std::vector<std::string>& names) { return render_poly(f, names); }
std::string render(const TorusElement& f, const std::vector<std::string>& names) { return render_poly(f, names); }
std::string render(const CPoly& f, const std::vector<std::string>& names) { return render_poly(f, names); }

}  // namespace cqwa
