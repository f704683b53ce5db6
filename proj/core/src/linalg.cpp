#include "latsize/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace latsize {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Returns the echelon matrix
// and the permutation sign; rank comes out as the number of nonzero pivots.
struct Echelon {
  Mat m;
  int sign = 1;
  int rank = 0;
};

Echelon bareiss(Mat m) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  e.rank = static_cast<int>(r);
  e.m = std::move(m);
  return e;
}

}  // namespace

Int determinant(const Mat& rows) {
  const std::size_t n = rows.size();
  for (const Vec& r : rows)
    if (r.size() != n) throw std::invalid_argument("determinant: matrix must be square");
  if (n == 0) return 1;
  Echelon e = bareiss(rows);
  if (e.rank < static_cast<int>(n)) return 0;
  // For Bareiss the last pivot of a full-rank square matrix is the
  // determinant up to the row-swap sign.
  Int d = e.m[n - 1][n - 1];
  return e.sign > 0 ? d : Int(-d);
}

int rank(const Mat& rows) {
  if (rows.empty()) return 0;
  return bareiss(rows).rank;
}

Mat adjugate(const Mat& rows) {
  const std::size_t n = rows.size();
  if (n == 1) return Mat{Vec{Int(1)}};
  Mat adj(n, Vec(n));
  Mat minor(n - 1, Vec(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[mr][mc] = rows[r][c];
          ++mc;
        }
        ++mr;
      }
      Int cof = determinant(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? cof : Int(-cof);
    }
  }
  return adj;
}

std::optional<Vec> integer_kernel_vector(const Mat& rows, int n) {
  // Solve M h = 0 by rational elimination on the transpose-free system: run
  // Bareiss, then back-substitute for a free column.
  Mat m = rows;
  for (const Vec& r : m)
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("integer_kernel_vector: column count mismatch");
  Echelon e = bareiss(std::move(m));
  if (e.rank >= n) return std::nullopt;

  // Locate pivot columns of the echelon form.
  std::vector<int> pivot_col(static_cast<std::size_t>(e.rank), -1);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  {
    int r = 0;
    for (int c = 0; c < n && r < e.rank; ++c) {
      if (e.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot_col[static_cast<std::size_t>(r)] = c;
        is_pivot[static_cast<std::size_t>(c)] = true;
        ++r;
      }
    }
  }
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) { free_col = c; break; }

  // Back-substitute with rationals, then clear denominators.
  std::vector<Rational> h(static_cast<std::size_t>(n), Rational(0));
  h[static_cast<std::size_t>(free_col)] = 1;
  for (int r = e.rank - 1; r >= 0; --r) {
    const Vec& row = e.m[static_cast<std::size_t>(r)];
    const int pc = pivot_col[static_cast<std::size_t>(r)];
    Rational s = 0;
    for (int c = pc + 1; c < n; ++c)
      if (row[static_cast<std::size_t>(c)] != 0)
        s += Rational(row[static_cast<std::size_t>(c)]) * h[static_cast<std::size_t>(c)];
    h[static_cast<std::size_t>(pc)] = -s / Rational(row[static_cast<std::size_t>(pc)]);
  }
  Int lcm_den = 1;
  for (const Rational& x : h)
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
  Vec out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational scaled = h[i] * Rational(lcm_den);
    out[i] = boost::multiprecision::numerator(scaled);
  }
  Int g = content(out);
  if (g > 1)
    for (Int& x : out) x /= g;
  return sign_normalize(std::move(out));
}

}  // namespace latsize
