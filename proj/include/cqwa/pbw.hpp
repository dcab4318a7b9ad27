#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cqwa/report.hpp"
#include "cqwa/scalar.hpp"
#include "cqwa/sparse.hpp"

namespace cqwa {

struct PbwTag {};
// Linear combination of ordered monomials x_1^a_1 ... x_n^a_n.
using NCPoly = SparsePoly<LaurentScalar, PbwTag>;

// Relations x_i x_j = q_ij x_j x_i + r_ij for all i != j. Generator indices
// are 0-based here; rendered names are x1..xn.
class Presentation {
 public:
  Presentation() = default;
  // Full tables. Throws unless q_ji = q_ij^-1 and r_ji = -q_ij^-1 r_ij.
  Presentation(Matrix<LaurentScalar> q, Matrix<LaurentScalar> r);
  // Reads entries above the diagonal only.
  static Presentation from_upper(const Matrix<LaurentScalar>& q, const Matrix<LaurentScalar>& r);

  std::size_t n() const { return n_; }
  const LaurentScalar& q(std::size_t i, std::size_t j) const { return q_(i, j); }
  const LaurentScalar& r(std::size_t i, std::size_t j) const { return r_(i, j); }
  const Matrix<LaurentScalar>& q_table() const { return q_; }
  const Matrix<LaurentScalar>& r_table() const { return r_; }
  bool is_pbw() const { return pbw_; }

  friend bool operator==(const Presentation& a, const Presentation& b) { return a.q_ == b.q_ && a.r_ == b.r_; }
  friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  Matrix<LaurentScalar> q_, r_;
  bool pbw_ = false;
};

// L_n^q: adjacent generators x_i x_{i+1} - q x_{i+1} x_i = 1 - q, the rest
// skew-commute with q or q^-1 by parity of j - i.
Presentation preset_linear(std::size_t n, const LaurentScalar& q = LaurentScalar::q());
// C_n^q for odd n: L_n^q plus x_n x_1 - q x_1 x_n = 1 - q.
Presentation preset_cyclic(std::size_t n, const LaurentScalar& q = LaurentScalar::q());

enum class Family { Linear, Cyclic };
Presentation preset(Family family, std::size_t n, const LaurentScalar& q = LaurentScalar::q());

// Generators y_i = rescale[i] * x_order[i].
Presentation transform(const Presentation& p, const std::vector<std::size_t>& order,
                       const std::vector<LaurentScalar>& rescale);

bool pbw_check(const Presentation& p);

struct DiamondResult {
  bool resolvable = true;
  std::vector<std::array<std::size_t, 3>> failing;  // (i, j, k) with i < j < k
  std::vector<NCPoly> witnesses;                     // route difference per failure
};
// Reduces x_k x_j x_i along both association orders with free-word rewriting.
DiamondResult diamond_oracle(const Presentation& p);
// Normal form of a word by leftmost rewriting, independent of multiply().
NCPoly free_reduce(const Presentation& p, const std::vector<std::size_t>& word);

NCPoly one(const Presentation& p);
NCPoly scalar(const Presentation& p, const LaurentScalar& c);
NCPoly gen(const Presentation& p, std::size_t i);
// Throws NonPBW when p fails pbw_check.
NCPoly multiply(const Presentation& p, const NCPoly& f, const NCPoly& g);
NCPoly power(const Presentation& p, const NCPoly& f, unsigned k);
NCPoly commutator(const Presentation& p, const NCPoly& f, const NCPoly& g);
// f g - c g f
NCPoly q_commutator(const Presentation& p, const NCPoly& f, const NCPoly& g, const LaurentScalar& c);

struct GeneratorGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour lists
  std::size_t edge_count() const;
  std::size_t max_degree() const;
  bool connected() const;
};
// Edge {i, j} whenever r_ij != 0.
GeneratorGraph generator_graph(const Presentation& p);

// The q with every q_ij in {q, q^-1}. Requires a connected PBW presentation.
LaurentScalar single_parameter(const Presentation& p);

enum class Shape { Linear, Cyclic };

struct ClassificationResult {
  Shape shape = Shape::Linear;
  std::vector<std::size_t> order;      // new generator i is old generator order[i]
  std::vector<LaurentScalar> rescale;  // ... multiplied by rescale[i]
  LaurentScalar parameter;             // q of the matching preset
  // Set when the closing relation cannot be normalised over Q[v, v^-1]:
  // the remaining factor on its constant term.
  std::optional<LaurentScalar> cyclic_obstruction;
};

ClassificationResult classify(const Presentation& p);
Presentation apply_classification(const Presentation& p, const ClassificationResult& c);
Presentation classification_target(const ClassificationResult& c);

// z_-1 = 0, z_0 = 1, z_i = z_{i-1} x_i - z_{i-2}. Entry k holds z_k.
std::vector<NCPoly> z_sequence(const Presentation& p, std::size_t upto);
NCPoly z_element(const Presentation& p, int i);
// x_i -> x_{i+1} on ordered monomials not involving x_n.
NCPoly shift_generators(const NCPoly& f, unsigned by = 1);
// z_{n-1} x_n - z_{n-2} - q theta(z_{n-2}) in C_n^q.
NCPoly omega(const Presentation& cyclic, const LaurentScalar& q = LaurentScalar::q());

struct HomSpec {
  Presentation source;
  Presentation target;
  std::vector<NCPoly> images;  // image of each source generator
};

NCPoly apply_hom(const HomSpec& h, const NCPoly& f);
// Sends every defining relation of the source to zero in the target.
bool check_hom(const HomSpec& h, std::string* witness = nullptr);
HomSpec compose(const HomSpec& outer, const HomSpec& inner);
// Number of compositions h^k needed to fix every generator, up to limit; 0 if none.
unsigned order_on_generators(const HomSpec& h, unsigned limit);

HomSpec theta_linear(std::size_t n, const LaurentScalar& q = LaurentScalar::q());  // L_{n-1} -> L_n
HomSpec theta_cyclic(std::size_t n, const LaurentScalar& q = LaurentScalar::q());
HomSpec iota_linear(std::size_t n, const LaurentScalar& nu, const LaurentScalar& q = LaurentScalar::q());
HomSpec iota_cyclic(std::size_t n, const LaurentScalar& q = LaurentScalar::q());
// x_i -> x_{n-i+1}, landing in the family with parameter q^-1.
HomSpec reversal(Family family, std::size_t n, const LaurentScalar& q = LaurentScalar::q());

Report suite_structure(Family family, std::size_t n);

}  // namespace cqwa
