#include "ucent/rootdata.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace ucent {

namespace {

bool valid_rank(char letter, unsigned rank) {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

// Cartan matrix of one simple factor, Bourbaki labels, row j = alpha_j in weight coordinates.
IntMatrix simple_cartan(const SimpleFactor& f) {
  const std::size_t n = f.rank;
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    a(i, j) = -1;
    a(j, i) = -1;
  };
  switch (f.letter) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(1, 2) = -2;  // alpha_1, alpha_2 long
      break;
    case 'G':
      a(0, 1) = -1;
      a(1, 0) = -3;  // alpha_1 short
      break;
    default:
      throw InvalidCartanType(std::string("unknown Cartan letter ") + f.letter);
  }
  return a;
}

// Minimal positive integers d with d_i a_ij = d_j a_ji on one irreducible block.
std::vector<Integer> symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> d(n, Rational(0));
  if (n == 0) return {};
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rational(a(i, j)) / Rational(a(j, i));
      stack.push_back(j);
    }
  }
  Integer den_lcm = 1;
  for (const auto& x : d) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(n);
  Integer g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational scaled = d[i] * Rational(den_lcm);
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  for (auto& x : out) x /= g;
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

CartanType::CartanType(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidCartanType("empty Cartan type");
  for (const auto& f : factors_)
    if (!valid_rank(f.letter, f.rank))
      throw InvalidCartanType("invalid rank " + std::to_string(f.rank) + " for type " + std::string(1, f.letter));
}

std::size_t CartanType::rank() const {
  std::size_t n = 0;
  for (const auto& f : factors_) n += f.rank;
  return n;
}

std::size_t CartanType::offset(std::size_t factor) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < factor; ++i) n += factors_[i].rank;
  return n;
}

std::string CartanType::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += factors_[i].letter;
    out += std::to_string(factors_[i].rank);
  }
  return out;
}

LeviSet LeviSet::from_indices(const std::vector<std::size_t>& zero_based) {
  std::uint64_t mask = 0;
  for (auto i : zero_based) {
    if (i >= max_rank) throw std::out_of_range("Levi index out of range");
    mask |= std::uint64_t{1} << i;
  }
  return LeviSet(mask);
}

LeviSet LeviSet::full(std::size_t n) {
  if (n > max_rank) throw std::out_of_range("rank exceeds Levi set capacity");
  return LeviSet(n == max_rank ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::size_t LeviSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> LeviSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < max_rank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string LeviSet::label() const {
  std::string out = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::vector<LeviSet> all_levi_sets(std::size_t n) {
  std::vector<LeviSet> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& subset : k_subsets(n, k)) out.push_back(LeviSet::from_indices(subset));
  return out;
}

IntMatrix cartan_matrix(const CartanType& t) {
  const std::size_t n = t.rank();
  IntMatrix a(n, n);
  for (std::size_t f = 0; f < t.factors().size(); ++f) {
    const IntMatrix block = simple_cartan(t.factors()[f]);
    const std::size_t off = t.offset(f);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) a(off + i, off + j) = block(i, j);
  }
  return a;
}

RootDatum::RootDatum(CartanType type, Isogeny isogeny) : type_(std::move(type)), kind_(isogeny.kind) {
  const std::size_t n = type_.rank();
  if (n > LeviSet::max_rank) throw InvalidCartanType("total rank exceeds " + std::to_string(LeviSet::max_rank));
  const IntMatrix cartan = cartan_matrix(type_);
  switch (kind_) {
    case IsogenyKind::adjoint:
      char_lattice_ = cartan;
      root_coords_ = IntMatrix::identity(n);
      return;
    case IsogenyKind::simply_connected:
      char_lattice_ = IntMatrix::identity(n);
      root_coords_ = cartan;
      return;
    case IsogenyKind::lattice:
      break;
  }
  char_lattice_ = std::move(isogeny.lattice);
  if (char_lattice_.rows() != n || char_lattice_.cols() != n)
    throw InvalidLattice("lattice basis must be " + std::to_string(n) + "x" + std::to_string(n));
  if (determinant(char_lattice_) == 0) throw InvalidLattice("lattice basis is singular");
  const RatMatrix coords = to_rational(cartan) * inverse(to_rational(char_lattice_));
  root_coords_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (coords(i, j).get_den() != 1)
        throw InvalidLattice("lattice does not contain simple root " + std::to_string(i + 1));
      root_coords_(i, j) = coords(i, j).get_num();
    }
}

RootDatum build_datum(const CartanType& t, const Isogeny& isogeny) { return RootDatum(t, isogeny); }

CenterData center_of_levi(const RootDatum& d, const LeviSet& s) {
  const std::size_t n = d.rank();
  if (!s.subset_of(LeviSet::full(n))) throw std::invalid_argument("Levi set " + s.label() + " exceeds rank");
  const auto rows = s.indices();
  IntMatrix pairing(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) pairing(r, j) = d.root_coordinates()(rows[r], j);
  SmithForm form = snf(pairing);
  CenterData out;
  out.pi0 = std::move(form.invariants);
  out.dim = form.kernel.cols();
  out.cochar_basis = std::move(form.kernel);
  return out;
}

Integer center_order(const RootDatum& d) { return center_of_levi(d, LeviSet::full(d.rank())).pi0.order(); }

Form invariant_form(const RootDatum& d) {
  const CartanType& t = d.type();
  const IntMatrix a = cartan_matrix(t);
  Form out{IntMatrix(a.rows(), a.cols())};
  for (std::size_t f = 0; f < t.factors().size(); ++f) {
    const IntMatrix block = simple_cartan(t.factors()[f]);
    const auto sym = symmetrizer(block);
    const std::size_t off = t.offset(f);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) out.gram(off + i, off + j) = sym[i] * block(i, j);
  }
  return out;
}

RatMatrix cocharacter_gram(const RootDatum& d) {
  // Coroot alpha_i^vee has coordinates L e_i in the basis dual to the lattice rows L.
  const RatMatrix l_inv = inverse(to_rational(d.char_lattice()));
  return l_inv.transpose() * to_rational(invariant_form(d).gram) * l_inv;
}

RatMatrix orthogonal_projection(const RatMatrix& gram, const IntMatrix& from_basis, const IntMatrix& to_basis) {
  const RatMatrix b = to_rational(from_basis);
  const RatMatrix b_to = to_rational(to_basis);
  const RatMatrix bt_g = b_to.transpose() * gram;
  return inverse(bt_g * b_to) * (bt_g * b);
}

RatMatrix killing_projection(const RootDatum& d, const LeviSet& s, const LeviSet& s_prime) {
  if (!s.subset_of(s_prime))
    throw std::invalid_argument("projection requires " + s.label() + " to be a subset of " + s_prime.label());
  const CenterData from = center_of_levi(d, s);
  const CenterData to = center_of_levi(d, s_prime);
  return orthogonal_projection(cocharacter_gram(d), from.cochar_basis, to.cochar_basis);
}

Integer weyl_order(const CartanType& t) {
  Integer out = 1;
  for (const auto& f : t.factors()) {
    const unsigned n = f.rank;
    switch (f.letter) {
      case 'A': out *= factorial(n + 1); break;
      case 'B':
      case 'C': out *= (Integer(1) << n) * factorial(n); break;
      case 'D': out *= (Integer(1) << (n - 1)) * factorial(n); break;
      case 'E': out *= n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600); break;
      case 'F': out *= 1152; break;
      case 'G': out *= 12; break;
      default: throw InvalidCartanType("unknown Cartan letter");
    }
  }
  return out;
}

std::optional<Integer> weyl_order_by_orbit(const CartanType& t, std::size_t limit) {
  // W acts on weight coordinates by s_i(x) = x - x_i * alpha_i; rho has trivial stabilizer.
  const IntMatrix a = cartan_matrix(t);
  const std::size_t n = a.rows();
  std::vector<std::vector<long>> roots(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) roots[i][j] = a(i, j).get_si();

  std::set<std::vector<long>> seen{std::vector<long>(n, 1)};
  std::vector<std::vector<long>> frontier{std::vector<long>(n, 1)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        auto y = x;
        for (std::size_t j = 0; j < n; ++j) y[j] -= x[i] * roots[i][j];
        if (seen.insert(y).second) {
          if (seen.size() > limit) return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return Integer(seen.size());
}

}  // namespace ucent
