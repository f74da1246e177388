#include "snf_oracle.hpp"

#include <algorithm>

namespace cybar::testing {

std::vector<mpz_class> reference_snf(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = static_cast<long>(a(r, c));
  std::vector<mpz_class> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows && pr == rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    for (;;) {
      // column t: combine rows t and r with Bezout coefficients
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        if (m[r][t] % m[t][t] == 0) {
          const mpz_class q = m[r][t] / m[t][t];
          for (std::size_t c = 0; c < cols; ++c) m[r][c] -= q * m[t][c];
          continue;
        }
        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m[t][t].get_mpz_t(), m[r][t].get_mpz_t());
        const mpz_class a0 = m[t][t] / g, b0 = m[r][t] / g;
        for (std::size_t c = 0; c < cols; ++c) {
          const mpz_class top = x * m[t][c] + y * m[r][c];
          const mpz_class bottom = -b0 * m[t][c] + a0 * m[r][c];
          m[t][c] = top;
          m[r][c] = bottom;
        }
      }
      bool row_clear = true;
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        if (m[t][c] % m[t][t] == 0) {
          const mpz_class q = m[t][c] / m[t][t];
          for (std::size_t r = 0; r < rows; ++r) m[r][c] -= q * m[r][t];
          continue;
        }
        row_clear = false;
        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m[t][t].get_mpz_t(), m[t][c].get_mpz_t());
        const mpz_class a0 = m[t][t] / g, b0 = m[t][c] / g;
        for (std::size_t r = 0; r < rows; ++r) {
          const mpz_class left = x * m[r][t] + y * m[r][c];
          const mpz_class right = -b0 * m[r][t] + a0 * m[r][c];
          m[r][t] = left;
          m[r][c] = right;
        }
      }
      bool col_clear = true;
      for (std::size_t r = t + 1; r < rows; ++r)
        if (m[r][t] != 0) col_clear = false;
      if (!(row_clear && col_clear)) continue;
      // divisibility repair: add an offending row to row t
      bool repaired = false;
      for (std::size_t r = t + 1; r < rows && !repaired; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t k = 0; k < cols; ++k) m[t][k] += m[r][k];
            repaired = true;
            break;
          }
      if (!repaired) break;
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

namespace {

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  // Bareiss fraction-free elimination
  const std::size_t n = m.size();
  mpz_class sign = 1, previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

mpz_class determinantal_divisor(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(a.rows(), k, 0, cur, rs);
  subsets(a.cols(), k, 0, cur, cs);
  mpz_class g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = static_cast<long>(a(r[i], c[j]));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(determinant(m)).get_mpz_t());
    }
  return g;
}

IntMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_int_distribution<int> entry(-20, 20);
  std::bernoulli_distribution sparse(0.3);
  IntMatrix a(dim(rng), dim(rng));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = sparse(rng) ? 0 : entry(rng);
  return a;
}

}  // namespace cybar::testing
