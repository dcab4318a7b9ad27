#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cqwa/cluster.hpp"
#include "cqwa/expr.hpp"
#include "cqwa/json_io.hpp"
#include "cqwa/poisson.hpp"
#include "cqwa/render.hpp"

using namespace cqwa;

namespace {

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::ParseError, "bad vertex list '" + text + "'");
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty vertex list");
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << "]\n";
  }
  return out.str();
}

int run_nf(const std::string& family, std::size_t n, const std::string& text) {
  const bool cyclic = family == "C";
  const Presentation p = preset(cyclic ? Family::Cyclic : Family::Linear, n);
  std::cout << render(eval_pbw(*parse(text, Context::Pbw), p, cyclic)) << "\n";
  return 0;
}

int run_mutate(const std::string& quiver, std::size_t n, const std::string& at, bool json) {
  QuantumSeed s = quiver == "A" ? preset_dynkin_a(n) : preset_cycle(n);
  for (std::size_t k : parse_indices(at)) {
    if (k >= s.b.size()) throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(k) + " out of range");
    s = mutate_seed(s, k);
  }
  if (json) {
    std::cout << to_json(s).dump(2) << "\n";
    return 0;
  }
  std::cout << "B =\n" << matrix_text(s.b.matrix()) << "Lambda =\n" << matrix_text(s.lambda.matrix());
  std::cout << "d = " << s.d << "\n";
  for (std::size_t i = 0; i < s.vars.size(); ++i) std::cout << "var " << i << " = " << render(s.vars[i], s.names) << "\n";
  return 0;
}

int run_bracket(const std::string& name, std::size_t n, const std::string& f, const std::string& g) {
  BracketTable t;
  std::vector<std::string> names;
  std::map<std::string, CPoly> extra;
  if (name == "D") {
    t = bracket_cluster(n);
    names = indexed_names("W", n + 2, 0);
    extra["Delta"] = cgen(n + 2, 0) * cgen(n + 2, n + 1) - cgen(n + 2, 1) * cgen(n + 2, n) - cconst(n + 2, 1);
  } else {
    t = name == "FC" ? bracket_cyclic(n) : bracket_linear(n);
    names = indexed_names("x", n);
    auto z = commutative_z(n, n);
    for (std::size_t i = 0; i <= n; ++i) extra["z" + std::to_string(i)] = z[i];
    if (name == "FC") {
      std::vector<CPoly> rot;
      for (std::size_t i = 0; i < n; ++i) rot.push_back(cgen(n, (i + 1) % n));
      extra["Omega"] = z[n - 1] * cgen(n, n - 1) - z[n - 2] - substitute(z[n - 2], rot);
    }
  }
  CPoly a = eval_poisson(*parse(f, Context::Poisson), names, extra);
  CPoly b = eval_poisson(*parse(g, Context::Poisson), names, extra);
  std::cout << render(bracket(t, a, b), names) << "\n";
  return 0;
}

Report run_suites(const std::string& name, const std::string& family, std::size_t n) {
  const bool odd = n >= 3 && n % 2 == 1;
  auto need_odd = [&](const std::string& what) {
    if (!odd) throw Error(ErrorKind::InvalidArgument, what + " suite needs odd n >= 3");
  };
  auto embedding = [&] {
    Report r("embedding/n" + std::to_string(n));
    r.append(check_v_embedding(n));
    if (odd)
      for (int lam : {0, 1, -2}) r.append(check_splitting(n, lam));
    return r;
  };
  if (name == "structure") return suite_structure(family == "C" ? Family::Cyclic : Family::Linear, n);
  if (name == "embedding") return embedding();
  if (name == "cluster") {
    need_odd("cluster");
    return suite_cluster(n);
  }
  if (name == "poisson") {
    need_odd("poisson");
    return suite_poisson(n);
  }
  Report all("all/n" + std::to_string(n));
  all.append(suite_structure(Family::Linear, n));
  all.append(embedding());
  if (odd) {
    all.append(suite_structure(Family::Cyclic, n));
    all.append(suite_cluster(n));
    all.append(suite_poisson(n));
  }
  return all;
}

int run_suite(const std::string& name, const std::string& family, std::size_t n, bool json) {
  Report r = run_suites(name, family, n);
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << format_report(r);
  return r.passed() ? 0 : 1;
}

int run_classify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  const Presentation p = presentation_from_json(j);
  const ClassificationResult c = classify(p);
  std::cout << "shape: " << (c.shape == Shape::Linear ? "linear" : "cyclic") << "\n";
  std::cout << "parameter: " << to_string(c.parameter) << "\n";
  for (std::size_t i = 0; i < c.order.size(); ++i)
    std::cout << "y" << i + 1 << " = " << to_string(c.rescale[i]) << " * x" << c.order[i] + 1 << "\n";
  if (c.cyclic_obstruction) {
    std::cout << "closing relation not normalisable: factor " << to_string(*c.cyclic_obstruction) << "\n";
    return 1;
  }
  const bool ok = apply_classification(p, c) == classification_target(c);
  std::cout << (ok ? "verified: relations match the preset\n" : "NOT verified\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, seed mutation and identity suites for connected quantized Weyl algebras"};
  app.require_subcommand(1);

  std::string family = "L", quiver = "A", at, preset_name = "FL", suite_name = "all", file, expr, f, g;
  std::size_t n = 3;
  bool json = false;

  auto* nf = app.add_subcommand("nf", "normal form of an expression in L_n or C_n");
  nf->add_option("--family", family)->check(CLI::IsMember({"L", "C"}));
  nf->add_option("--n", n)->required();
  nf->add_option("expr", expr)->required();

  auto* mu = app.add_subcommand("mutate", "mutate a preset seed at a sequence of vertices");
  mu->add_option("--quiver", quiver)->check(CLI::IsMember({"A", "P"}));
  mu->add_option("--n", n)->required();
  mu->add_option("--at", at, "comma-separated vertices")->required();
  mu->add_flag("--json", json);

  auto* br = app.add_subcommand("bracket", "Poisson bracket of two polynomials");
  br->add_option("--preset", preset_name)->check(CLI::IsMember({"FL", "FC", "D"}));
  br->add_option("--n", n)->required();
  br->add_option("f", f)->required();
  br->add_option("g", g)->required();

  auto* su = app.add_subcommand("suite", "run identity suites");
  su->add_option("--name", suite_name)->check(CLI::IsMember({"structure", "cluster", "poisson", "embedding", "all"}));
  su->add_option("--family", family)->check(CLI::IsMember({"L", "C"}));
  su->add_option("--n", n)->required();
  su->add_flag("--json", json);

  auto* cl = app.add_subcommand("classify", "classify a presentation given as JSON");
  cl->add_option("--file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*nf) return run_nf(family, n, expr);
    if (*mu) return run_mutate(quiver, n, at, json);
    if (*br) return run_bracket(preset_name, n, f, g);
    if (*su) return run_suite(suite_name, family, n, json);
    if (*cl) return run_classify(file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
