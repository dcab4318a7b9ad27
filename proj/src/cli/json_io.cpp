#include "cqwa/json_io.hpp"

#include "cqwa/render.hpp"

namespace cqwa {

namespace {

Json int_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json scalar_matrix(const Matrix<LaurentScalar>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix<LaurentScalar> scalar_matrix_from(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorKind::ParseError, std::string(what) + " must have n rows");
  Matrix<LaurentScalar> m(n, n, LaurentScalar(0));
  for (std::size_t a = 0; a < n; ++a) {
    if (!j[a].is_array() || j[a].size() != n)
      throw Error(ErrorKind::ParseError, std::string(what) + " must have n columns");
    for (std::size_t b = 0; b < n; ++b) m(a, b) = laurent_from_json(j[a][b]);
  }
  return m;
}

}  // namespace

Json to_json(const LaurentScalar& c) {
  Json out = Json::array();
  for (const auto& [e, r] : c.terms()) out.push_back(Json::array({e, to_string(r)}));
  return out;
}

LaurentScalar laurent_from_json(const Json& j) {
  if (j.is_number_integer()) return LaurentScalar(Rational(j.get<long>()));
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "scalar must be a list of [exponent, coefficient] pairs");
  LaurentScalar out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw Error(ErrorKind::ParseError, "scalar term must be [exponent, coefficient]");
    Rational c;
    if (t[1].is_number_integer()) {
      c = t[1].get<long>();
    } else if (t[1].is_string()) {
      if (c.set_str(t[1].get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad rational coefficient");
      c.canonicalize();
    } else {
      throw Error(ErrorKind::ParseError, "coefficient must be a string or integer");
    }
    out = out + LaurentScalar::monomial(c, t[0].get<int>());
  }
  return out;
}

Json to_json(const Presentation& p) {
  Json out;
  out["n"] = p.n();
  out["q"] = scalar_matrix(p.q_table());
  out["r"] = scalar_matrix(p.r_table());
  return out;
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("q") || !j.contains("r"))
    throw Error(ErrorKind::ParseError, "presentation needs n, q and r");
  const std::size_t n = j.at("n").get<std::size_t>();
  return Presentation(scalar_matrix_from(j.at("q"), n, "q"), scalar_matrix_from(j.at("r"), n, "r"));
}

Json to_json(const QuantumSeed& s) {
  Json out;
  out["B"] = int_matrix(s.b.matrix());
  out["Lambda"] = int_matrix(s.lambda.matrix());
  out["d"] = s.d;
  Json vars = Json::array();
  for (const auto& v : s.vars) {
    Json terms = Json::array();
    for (const auto& [e, c] : v.terms()) terms.push_back({{"exponent", e}, {"coefficient", to_json(c)}});
    vars.push_back({{"text", render(v, s.names)}, {"terms", terms}});
  }
  out["vars"] = vars;
  return out;
}

Json to_json(const BracketTable& t, const std::vector<std::string>& names) {
  Json out;
  out["m"] = t.m();
  out["ambient"] = t.ambient() == Ambient::Polynomial ? "polynomial" : "laurent";
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.m(); ++i)
    for (std::size_t j = i + 1; j < t.m(); ++j)
      if (!t.entry(i, j).is_zero()) entries.push_back({{"i", i}, {"j", j}, {"poly", render(t.entry(i, j), names)}});
  out["entries"] = entries;
  return out;
}

Json to_json(const Report& r) {
  Json out;
  out["suite"] = r.suite();
  out["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json item;
    item["id"] = c.id;
    item["tag"] = c.tag;
    item["status"] = c.status == CheckStatus::Pass ? "pass" : "fail";
    item["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    checks.push_back(item);
  }
  out["checks"] = checks;
  return out;
}

}  // namespace cqwa
