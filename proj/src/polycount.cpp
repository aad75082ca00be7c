#include "ucent/polycount.hpp"

namespace ucent {

Polynomial::Polynomial(std::vector<Integer> coeffs, Variable var) : coeffs_(std::move(coeffs)), var_(var) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  const std::string base = var_ == Variable::q ? "q" : var_ == Variable::uv ? "uv" : "t";
  const std::string power_base = var_ == Variable::uv ? "(uv)" : base;
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += k == 1 ? base : power_base + "^" + std::to_string(k);
  }
  return out;
}

Polynomial point_count_poly(const RootDatum& d) {
  const std::size_t n = d.rank();
  // sum_S |pi_0| (q-1)^{n-|S|}, then shift by q^n.
  std::vector<Integer> inner(n + 1, Integer(0));
  std::vector<Integer> by_size(n + 1, Integer(0));
  for (const auto& s : all_levi_sets(n)) by_size[s.size()] += center_of_levi(d, s).pi0.order();
  for (std::size_t size = 0; size <= n; ++size) {
    // (q-1)^m = sum_k C(m,k) q^k (-1)^{m-k}
    const std::size_t m = n - size;
    for (std::size_t k = 0; k <= m; ++k) {
      Integer term;
      mpz_bin_uiui(term.get_mpz_t(), m, k);
      term *= by_size[size];
      if ((m - k) % 2) inner[k] -= term;
      else inner[k] += term;
    }
  }
  std::vector<Integer> coeffs(n, Integer(0));
  coeffs.insert(coeffs.end(), inner.begin(), inner.end());
  return Polynomial(std::move(coeffs), Variable::q);
}

Polynomial e_polynomial(const RootDatum& d) {
  return Polynomial(point_count_poly(d).coeffs(), Variable::uv);
}

Polynomial poincare_from_e(const Polynomial& e, std::size_t n) {
  // (uv)^k at u = v = -1/t is t^{-2k}; times t^{4n} lands in degree 4n - 2k.
  std::vector<Integer> out(4 * n + 1, Integer(0));
  for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
    const Integer& c = e.coeffs()[k];
    if (c == 0) continue;
    if (2 * k > 4 * n)
      throw PurityError(PurityError::Kind::non_polynomial,
                        "purity substitution leaves t^-" + std::to_string(2 * k - 4 * n));
    if (c < 0)
      throw PurityError(PurityError::Kind::negative_coefficient,
                        "purity substitution gives coefficient " + c.get_str() + " at t^" +
                            std::to_string(4 * n - 2 * k));
    out[4 * n - 2 * k] = c;
  }
  return Polynomial(std::move(out), Variable::t);
}

Polynomial poincare_from_purity(const RootDatum& d) { return poincare_from_e(e_polynomial(d), d.rank()); }

}  // namespace ucent
