#include <map>

#include "cqwa/pbw.hpp"

namespace cqwa {

namespace {

// 1 + c + ... + c^(a-1)
LaurentScalar geometric(const LaurentScalar& c, int a) {
  LaurentScalar sum, p(1);
  for (int t = 0; t < a; ++t) {
    sum += p;
    p *= c;
  }
  return sum;
}

// x^a * x_j, accumulated into out. Moving x_j left past x_k^a_k (k > j) uses
// x_k^a x_j = q_kj^a x_j x_k^a + r_kj (1 + q_kj + ... + q_kj^(a-1)) x_k^(a-1).
void times_generator(const Presentation& p, const Exponent& a, const LaurentScalar& c, std::size_t j, NCPoly& out) {
  LaurentScalar running = c;
  for (std::size_t k = p.n(); k-- > j + 1;) {
    if (a[k] == 0) continue;
    const LaurentScalar& rk = p.r(k, j);
    if (!rk.is_zero()) {
      Exponent lower = a;
      --lower[k];
      out.add_term(lower, running * rk * geometric(p.q(k, j), a[k]));
    }
    running *= p.q(k, j).pow(a[k]);
  }
  Exponent top = a;
  ++top[j];
  out.add_term(top, running);
}

NCPoly times_generator(const Presentation& p, const NCPoly& f, std::size_t j) {
  NCPoly out(p.n());
  for (const auto& [e, c] : f.terms()) times_generator(p, e, c, j, out);
  return out;
}

using Word = std::vector<std::size_t>;

struct LongerFirst {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

using WordSum = std::map<Word, LaurentScalar, LongerFirst>;

void add_word(WordSum& s, const Word& w, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = s.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

// Leftmost rewriting x_j x_i -> q_ji x_i x_j + r_ji for j > i until every word is sorted.
WordSum reduce_words(const Presentation& p, WordSum pending) {
  WordSum done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const LaurentScalar& c = node.mapped();
    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      add_word(done, w, c);
      continue;
    }
    const std::size_t hi = w[pos], lo = w[pos + 1];
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    add_word(pending, swapped, c * p.q(hi, lo));
    if (!p.r(hi, lo).is_zero()) {
      Word shorter;
      shorter.reserve(w.size() - 2);
      shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      add_word(pending, shorter, c * p.r(hi, lo));
    }
  }
  return done;
}

NCPoly words_to_poly(std::size_t n, const WordSum& s) {
  NCPoly out(n);
  for (const auto& [w, c] : s) {
    Exponent e(n, 0);
    for (auto g : w) ++e[g];
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

NCPoly one(const Presentation& p) { return NCPoly::constant(p.n(), LaurentScalar(1)); }

NCPoly scalar(const Presentation& p, const LaurentScalar& c) { return NCPoly::constant(p.n(), c); }

NCPoly gen(const Presentation& p, std::size_t i) {
  if (i >= p.n()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  return NCPoly::generator(p.n(), i);
}

NCPoly multiply(const Presentation& p, const NCPoly& f, const NCPoly& g) {
  if (!p.is_pbw()) throw Error(ErrorKind::NonPBW, "ordered monomials are not a basis for this presentation");
  if (f.nvars() != p.n() || g.nvars() != p.n()) throw Error(ErrorKind::DimensionMismatch, "operand ring");
  NCPoly out(p.n());
  // Right factors sharing a prefix reuse the partial product.
  std::map<Exponent, NCPoly> prefix;
  for (const auto& [b, c] : g.terms()) {
    NCPoly cur = f;
    Exponent done(p.n(), 0);
    for (std::size_t j = 0; j < p.n(); ++j)
      for (int t = 0; t < b[j]; ++t) {
        ++done[j];
        auto it = prefix.find(done);
        if (it != prefix.end()) {
          cur = it->second;
        } else {
          cur = times_generator(p, cur, j);
          prefix.emplace(done, cur);
        }
      }
    out += cur.scaled(c);
  }
  return out;
}

NCPoly power(const Presentation& p, const NCPoly& f, unsigned k) {
  NCPoly r = one(p);
  for (unsigned i = 0; i < k; ++i) r = multiply(p, r, f);
  return r;
}

NCPoly commutator(const Presentation& p, const NCPoly& f, const NCPoly& g) {
  return multiply(p, f, g) - multiply(p, g, f);
}

NCPoly q_commutator(const Presentation& p, const NCPoly& f, const NCPoly& g, const LaurentScalar& c) {
  return multiply(p, f, g) - multiply(p, g, f).scaled(c);
}

NCPoly free_reduce(const Presentation& p, const std::vector<std::size_t>& word) {
  for (auto g : word)
    if (g >= p.n()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  WordSum s;
  add_word(s, word, LaurentScalar(1));
  return words_to_poly(p.n(), reduce_words(p, std::move(s)));
}

DiamondResult diamond_oracle(const Presentation& p) {
  DiamondResult res;
  const std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // (x_k x_j) x_i
        WordSum left;
        for (const auto& [w, c] : reduce_words(p, WordSum{{Word{k, j}, LaurentScalar(1)}})) {
          Word ext = w;
          ext.push_back(i);
          add_word(left, ext, c);
        }
        // x_k (x_j x_i)
        WordSum right;
        for (const auto& [w, c] : reduce_words(p, WordSum{{Word{j, i}, LaurentScalar(1)}})) {
          Word ext{k};
          ext.insert(ext.end(), w.begin(), w.end());
          add_word(right, ext, c);
        }
        NCPoly diff = words_to_poly(n, reduce_words(p, left)) - words_to_poly(n, reduce_words(p, right));
        if (!diff.is_zero()) {
          res.resolvable = false;
          res.failing.push_back({i, j, k});
          res.witnesses.push_back(diff);
        }
      }
  return res;
}

}  // namespace cqwa
