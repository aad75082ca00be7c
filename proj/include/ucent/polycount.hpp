#pragma once

// Point counts over F_q, E-polynomials and the purity-predicted Poincare polynomial of J_G.

#include "ucent/exactla.hpp"
#include "ucent/rootdata.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ucent {

enum class Variable { q, uv, t };

/// Univariate integer polynomial; coeffs[k] multiplies var^k, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Integer> coeffs, Variable var);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Variable variable() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  Integer evaluate(const Integer& x) const;

  /// Descending powers, e.g. "q^2 + q", "(uv)^2 + uv", "2t^4 - 1".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
  Variable var_ = Variable::q;
};

class PurityError : public std::runtime_error {
 public:
  enum class Kind { non_polynomial, negative_coefficient };
  PurityError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// |J_G(F_q)| = q^n sum_{S subset Pi} |pi_0(Z(L_S))| (q-1)^{n-|S|}, S ranging over all
/// subsets including Pi.
Polynomial point_count_poly(const RootDatum& d);

/// point_count_poly with q = uv.
Polynomial e_polynomial(const RootDatum& d);

/// t^{4n} E(-1/t, -1/t). Throws PurityError if the result is not a polynomial with
/// nonnegative coefficients.
Polynomial poincare_from_purity(const RootDatum& d);

/// Same substitution applied to a given E-polynomial of a rank-n datum.
Polynomial poincare_from_e(const Polynomial& e, std::size_t n);

}  // namespace ucent
