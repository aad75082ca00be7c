#include "ucent/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ucent {

Integer InvariantFactors::order() const {
  Integer out = 1;
  for (const auto& f : factors) out *= f;
  return out;
}

namespace {

bool less_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t j = from; j < a.cols(); ++j) mpz_submul(a(dst, j).get_mpz_t(), q.get_mpz_t(), a(src, j).get_mpz_t());
}

// col_dst -= q * col_src
void col_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t i = from; i < a.rows(); ++i) mpz_submul(a(i, dst).get_mpz_t(), q.get_mpz_t(), a(i, src).get_mpz_t());
}

// Row-style Hermite normal form of a full-row-rank lattice basis: leading entries positive,
// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_rows(IntMatrix b) {
  const std::size_t k = b.rows();
  const std::size_t n = b.cols();
  std::size_t r = 0;
  Integer q;
  for (std::size_t c = 0; c < n && r < k; ++c) {
    // Euclid down the column until a single nonzero entry remains at or below r.
    for (;;) {
      std::size_t best = k;
      for (std::size_t i = r; i < k; ++i)
        if (b(i, c) != 0 && (best == k || less_abs(b(i, c), b(best, c)))) best = i;
      if (best == k) break;
      swap_rows(b, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (b(i, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), b(i, c).get_mpz_t(), b(r, c).get_mpz_t());
        row_axpy(b, i, r, q, 0);
        if (b(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (b(r, c) == 0) continue;
    if (b(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) b(r, j) = -b(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), b(i, c).get_mpz_t(), b(r, c).get_mpz_t());
      if (q != 0) row_axpy(b, i, r, q, 0);
    }
    ++r;
  }
  return b;
}

// Fraction-free row echelon reduction in place; returns the rank.
std::size_t bareiss_echelon(IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(a, r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = a(r, c) * a(i, j);
        mpz_submul(tmp.get_mpz_t(), a(i, c).get_mpz_t(), a(r, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

Integer bareiss_det(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  Integer prev = 1;
  Integer tmp;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a(k, k) * a(i, j);
        mpz_submul(tmp.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix v = IntMatrix::identity(cols);
  std::vector<Integer> diagonal;
  Integer q;

  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi == rows || less_abs(a(i, j), a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(a, i, t, q, t);
        residue = residue || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(a, j, t, q, t);
        col_axpy(v, j, t, q, 0);
        residue = residue || a(t, j) != 0;
      }
      if (residue) {
        // Bring the smallest remainder into the pivot and reduce again.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && less_abs(a(i, t), a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && less_abs(a(t, j), a(bi, bj))) {
            bi = t;
            bj = j;
          }
        swap_rows(a, t, bi);
        swap_cols(a, t, bj);
        swap_cols(v, t, bj);
        continue;
      }
      // Divisibility chain: fold any offending row into the pivot row.
      std::size_t offender = rows;
      for (std::size_t i = t + 1; i < rows && offender == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (offender == rows) break;
      for (std::size_t j = t; j < cols; ++j) a(t, j) += a(offender, j);
    }
    diagonal.push_back(abs(a(t, t)));
    ++t;
  }

  SmithForm out;
  out.rank = t;
  for (auto& d : diagonal)
    if (d != 1) out.invariants.factors.push_back(std::move(d));

  const std::size_t nullity = cols - t;
  IntMatrix basis(nullity, cols);
  for (std::size_t k = 0; k < nullity; ++k)
    for (std::size_t i = 0; i < cols; ++i) basis(k, i) = v(i, t + k);
  out.kernel = hermite_rows(std::move(basis)).transpose();
  return out;
}

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  Integer scale;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_divexact(out(i, j).get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
      out(i, j) *= m(i, j).get_num();
    }
  }
  return out;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss_echelon(a);
}

std::size_t rank(const RatMatrix& m) {
  IntMatrix a = clear_denominators(m);
  return bareiss_echelon(a);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

Integer determinant(const IntMatrix& m) { return bareiss_det(m); }

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  Integer denom = 1;
  Integer scale;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    denom *= scale;
  }
  Rational out(bareiss_det(clear_denominators(m)), denom);
  out.canonicalize();
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  Rational f;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

RatMatrix compound(const RatMatrix& m, std::size_t k) {
  const auto row_sets = k_subsets(m.rows(), k);
  const auto col_sets = k_subsets(m.cols(), k);
  RatMatrix out(row_sets.size(), col_sets.size());
  if (out.empty()) return out;

  // Minors of the row-scaled integer matrix, divided back by the row scales.
  const IntMatrix scaled = clear_denominators(m);
  std::vector<Integer> row_scale(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    row_scale[i] = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(row_scale[i].get_mpz_t(), row_scale[i].get_mpz_t(), m(i, j).get_den_mpz_t());
  }

  IntMatrix sub(k, k);
  for (std::size_t a = 0; a < row_sets.size(); ++a) {
    Integer denom = 1;
    for (auto i : row_sets[a]) denom *= row_scale[i];
    for (std::size_t b = 0; b < col_sets.size(); ++b) {
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) sub(x, y) = scaled(row_sets[a][x], col_sets[b][y]);
      Rational minor(bareiss_det(sub), denom);
      minor.canonicalize();
      out(a, b) = std::move(minor);
    }
  }
  return out;
}

namespace {
template <typename T>
std::string format_matrix(const Matrix<T>& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}
}  // namespace

std::string to_string(const IntMatrix& m) { return format_matrix(m); }
std::string to_string(const RatMatrix& m) { return format_matrix(m); }

}  // namespace ucent
