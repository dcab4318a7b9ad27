#include "cqwa/poisson.hpp"

namespace cqwa {

// Unimodular row reduction of [Lambda^T | I]. Rows whose left half vanishes
// carry a lattice basis of { m : m Lambda^T = 0 } = { m : Lambda m = 0 }.
std::vector<std::vector<long>> lambda_kernel(const SkewMatrix& lambda) {
  const std::size_t m = lambda.size();
  std::vector<std::vector<mpz_class>> rows(m, std::vector<mpz_class>(2 * m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = lambda(j, i);
    rows[i][m + i] = 1;
  }
  auto sub = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t c = 0; c < 2 * m; ++c) rows[dst][c] -= f * rows[src][c];
  };
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m && pivot_row < m; ++col) {
    // Euclid on the column until a single nonzero entry remains at pivot_row.
    while (true) {
      std::size_t best = m;
      for (std::size_t r = pivot_row; r < m; ++r)
        if (rows[r][col] != 0 && (best == m || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      if (best == m) break;
      std::swap(rows[pivot_row], rows[best]);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
        sub(r, pivot_row, f);
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot_row;
        break;
      }
    }
  }
  std::vector<std::vector<long>> basis;
  for (std::size_t r = pivot_row; r < m; ++r) {
    std::vector<long> v(m);
    int sign = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (sign == 0 && rows[r][m + c] != 0) sign = rows[r][m + c] > 0 ? 1 : -1;
      if (!rows[r][m + c].fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "kernel entry overflows");
    }
    for (std::size_t c = 0; c < m; ++c) v[c] = sign * rows[r][m + c].get_si();
    basis.push_back(v);
  }
  return basis;
}

}  // namespace cqwa
