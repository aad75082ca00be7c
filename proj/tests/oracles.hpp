#pragma once

// Test-only oracles. None of these call into the library's elimination routines; they are
// deliberately naive so that they can be trusted on small inputs.

#include "ucent/exactla.hpp"
#include "ucent/rootdata.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using ucent::Integer;
using ucent::IntMatrix;
using ucent::Rational;
using ucent::RatMatrix;

/// Rank by textbook Gaussian elimination over Q (divide by the pivot).
inline std::size_t naive_rank(RatMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

inline RatMatrix rat(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

/// Determinant by cofactor expansion along the first row.
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  T out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const T term = m[0][j] * cofactor_det(minor);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  // lexicographic order
  std::sort(out.begin(), out.end());
  return out;
}

template <typename T>
T minor_of(const ucent::Matrix<T>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<T>> sub(rows.size(), std::vector<T>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = m(rows[i], cols[j]);
  return cofactor_det(sub);
}

/// Invariant factors from determinantal divisors: s_k = d_k / d_{k-1}, d_k = gcd of k x k minors.
struct Divisors {
  std::vector<Integer> nontrivial;
  std::size_t rank = 0;
};

inline Divisors determinantal(const IntMatrix& m) {
  Divisors out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) {
        const Integer det = minor_of(m, rs, cs);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    if (g == 0) break;
    out.rank = k;
    const Integer s = g / prev;
    if (s != 1) out.nontrivial.push_back(s);
    prev = g;
  }
  return out;
}

/// Fast determinantal oracle for matrices up to 3 x 3 with machine-size entries.
struct SmallDivisors {
  long factors[3] = {0, 0, 0};
  int count = 0;
  int rank = 0;
};

inline SmallDivisors determinantal_small(const long* a, int rows, int cols) {
  auto at = [&](int i, int j) { return a[i * cols + j]; };
  long d[4] = {1, 0, 0, 0};
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) d[1] = std::gcd(d[1], at(i, j));
  for (int i1 = 0; i1 < rows; ++i1)
    for (int i2 = i1 + 1; i2 < rows; ++i2)
      for (int j1 = 0; j1 < cols; ++j1)
        for (int j2 = j1 + 1; j2 < cols; ++j2)
          d[2] = std::gcd(d[2], at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1));
  if (rows == 3 && cols == 3)
    d[3] = std::abs(at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                    at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                    at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0)));
  SmallDivisors out;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    if (d[k] == 0) break;
    out.rank = k;
    const long s = d[k] / d[k - 1];
    if (s != 1) out.factors[out.count++] = s;
  }
  return out;
}

/// Brute-force torsion of Z^rows / (column span of m): enumerate (Z/N)^rows for N a nonzero
/// maximal minor (every invariant factor divides N), close the image of the columns under
/// addition, and count |{x : k x in image}| / |image| for each k | N. Those counts determine a
/// finite abelian group of exponent dividing N.
struct CosetCounts {
  std::size_t rank = 0;
  long modulus = 1;
  std::map<long, long> killed;  // k -> |Q[k]|
};

inline CosetCounts coset_torsion(const std::vector<std::vector<long>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  CosetCounts out;
  // rank and a nonzero maximal minor by enumeration
  long modulus = 0;
  for (std::size_t k = std::min(rows, cols); k >= 1 && modulus == 0; --k) {
    for (const auto& rs : subsets(rows, k)) {
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<long>> sub(k, std::vector<long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
        const long det = cofactor_det(sub);
        if (det != 0) {
          modulus = std::abs(det);
          out.rank = k;
          break;
        }
      }
      if (modulus) break;
    }
  }
  if (modulus == 0) modulus = 1;
  out.modulus = modulus;
  const long n = modulus;
  std::size_t total = 1;
  for (std::size_t i = 0; i < rows; ++i) total *= static_cast<std::size_t>(n);
  auto encode = [&](const std::vector<long>& v) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < rows; ++i) code = code * n + static_cast<std::size_t>(((v[i] % n) + n) % n);
    return code;
  };
  auto decode = [&](std::size_t code) {
    std::vector<long> v(rows);
    for (std::size_t i = rows; i-- > 0;) {
      v[i] = static_cast<long>(code % n);
      code /= n;
    }
    return v;
  };
  std::vector<char> image(total, 0);
  std::vector<std::size_t> queue{0};
  image[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = decode(queue[head]);
    for (std::size_t c = 0; c < cols; ++c) {
      auto w = v;
      for (std::size_t i = 0; i < rows; ++i) w[i] += m[i][c];
      const auto code = encode(w);
      if (!image[code]) {
        image[code] = 1;
        queue.push_back(code);
      }
    }
  }
  const long image_size = static_cast<long>(queue.size());
  for (long k = 1; k <= n; ++k) {
    if (n % k) continue;
    long hits = 0;
    for (std::size_t code = 0; code < total; ++code) {
      auto v = decode(code);
      for (auto& x : v) x *= k;
      if (image[encode(v)]) ++hits;
    }
    out.killed[k] = hits / image_size;
  }
  return out;
}

/// |Q[k]| predicted for Q = (Z/N)^{rows - rank} + sum Z/s_i.
inline std::map<long, long> predicted_counts(const std::vector<Integer>& factors, std::size_t rank, std::size_t rows,
                                             long modulus) {
  std::map<long, long> out;
  for (long k = 1; k <= modulus; ++k) {
    if (modulus % k) continue;
    long count = 1;
    for (const auto& s : factors) count *= std::gcd(k, s.get_si());
    for (std::size_t i = rank; i < rows; ++i) count *= k;
    out[k] = count;
  }
  return out;
}

/// |W| by closing the simple reflections (as integer matrices on weight coordinates) under
/// multiplication.
inline std::size_t weyl_group_size(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  using Mat = std::vector<long>;
  auto mul = [n](const Mat& a, const Mat& b) {
    Mat c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
    return c;
  };
  std::vector<Mat> gens;
  for (std::size_t r = 0; r < n; ++r) {
    // row vector x -> x - x_r * alpha_r, as a right-multiplication matrix
    Mat s(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) s[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) s[r * n + j] -= cartan(r, j).get_si();
    gens.push_back(s);
  }
  Mat id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::set<Mat> group{id};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        auto h = mul(g, s);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return group.size();
}

inline RatMatrix random_rational(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      m(i, j) = x;
    }
  return m;
}

/// Data exercised throughout the suites.
inline std::vector<ucent::CartanType> types_up_to_rank(std::size_t max_rank) {
  using ucent::CartanType;
  using ucent::SimpleFactor;
  std::vector<CartanType> out;
  const std::vector<std::vector<SimpleFactor>> all = {
      {{'A', 1}}, {{'A', 2}}, {{'A', 3}}, {{'A', 4}}, {{'A', 5}}, {{'A', 6}}, {{'A', 7}}, {{'A', 8}},
      {{'B', 2}}, {{'B', 3}}, {{'B', 4}}, {{'B', 5}}, {{'C', 3}}, {{'C', 4}}, {{'C', 5}}, {{'D', 4}},
      {{'D', 5}}, {{'D', 6}}, {{'E', 6}}, {{'E', 7}}, {{'E', 8}}, {{'F', 4}}, {{'G', 2}},
      {{'A', 1}, {'A', 1}}, {{'A', 1}, {'A', 2}}, {{'A', 1}, {'A', 1}, {'A', 1}}, {{'G', 2}, {'A', 2}},
      {{'B', 2}, {'A', 1}}, {{'A', 2}, {'A', 2}}};
  for (const auto& f : all) {
    CartanType t(f);
    if (t.rank() <= max_rank) out.push_back(t);
  }
  return out;
}

}  // namespace oracle
