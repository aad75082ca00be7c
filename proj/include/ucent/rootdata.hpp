#pragma once

// Root data of semisimple groups: Cartan types, isogeny lattices, Levi centers and the
// invariant-form projections between Levi-center cocharacter spaces.

#include "ucent/exactla.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucent {

class InvalidCartanType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SimpleFactor {
  char letter;  // 'A' .. 'G'
  unsigned rank;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Product of simple Cartan types; simple roots are numbered factor by factor in
/// Bourbaki order.
class CartanType {
 public:
  CartanType() = default;
  /// Throws InvalidCartanType on an unsupported (letter, rank) or an empty list.
  explicit CartanType(std::vector<SimpleFactor> factors);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  std::size_t rank() const;
  /// Offset of the first simple root of factor i in the global numbering.
  std::size_t offset(std::size_t factor) const;
  /// Canonical name, e.g. "A1xG2".
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  std::vector<SimpleFactor> factors_;
};

enum class IsogenyKind { adjoint, simply_connected, lattice };

struct Isogeny {
  IsogenyKind kind = IsogenyKind::adjoint;
  IntMatrix lattice;  // only for IsogenyKind::lattice

  static Isogeny adjoint() { return {IsogenyKind::adjoint, {}}; }
  static Isogeny simply_connected() { return {IsogenyKind::simply_connected, {}}; }
  static Isogeny explicit_lattice(IntMatrix m) { return {IsogenyKind::lattice, std::move(m)}; }
};

/// Subset of the simple roots, 0-based internally.
class LeviSet {
 public:
  static constexpr std::size_t max_rank = 64;

  LeviSet() = default;
  explicit LeviSet(std::uint64_t mask) : mask_(mask) {}
  static LeviSet from_indices(const std::vector<std::size_t>& zero_based);
  static LeviSet full(std::size_t n);

  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t i) const { return i < max_rank && ((mask_ >> i) & 1u); }
  std::size_t size() const;
  bool subset_of(const LeviSet& other) const { return (mask_ & ~other.mask_) == 0; }
  std::vector<std::size_t> indices() const;
  LeviSet with(std::size_t i) const { return LeviSet(mask_ | (std::uint64_t{1} << i)); }
  LeviSet without(std::size_t i) const { return LeviSet(mask_ & ~(std::uint64_t{1} << i)); }
  /// "{1,3}" with 1-based labels.
  std::string label() const;

  friend bool operator==(const LeviSet&, const LeviSet&) = default;
  friend auto operator<=>(const LeviSet&, const LeviSet&) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// All subsets of {0..n-1} ordered by size, then lexicographically.
std::vector<LeviSet> all_levi_sets(std::size_t n);

struct CenterData {
  InvariantFactors pi0;
  /// Columns: basis of the cocharacter lattice of Z(L_S), in the basis dual to the
  /// character lattice rows.
  IntMatrix cochar_basis;
  std::size_t dim = 0;
};

struct Form {
  IntMatrix gram;  // in the simple coroot basis
};

class RootDatum {
 public:
  /// Validates root lattice <= lattice <= weight lattice; throws InvalidLattice.
  RootDatum(CartanType type, Isogeny isogeny);

  const CartanType& type() const { return type_; }
  IsogenyKind kind() const { return kind_; }
  std::size_t rank() const { return type_.rank(); }
  /// Rows: character lattice basis in fundamental weight coordinates.
  const IntMatrix& char_lattice() const { return char_lattice_; }
  /// Row j: simple root j in the character lattice basis.
  const IntMatrix& root_coordinates() const { return root_coords_; }

 private:
  CartanType type_;
  IsogenyKind kind_;
  IntMatrix char_lattice_;
  IntMatrix root_coords_;
};

/// Block-diagonal Cartan matrix; row j holds simple root j in fundamental weight
/// coordinates, i.e. entry (j, i) is <alpha_j, alpha_i^vee>. G2 is [[2,-1],[-3,2]].
IntMatrix cartan_matrix(const CartanType& t);

RootDatum build_datum(const CartanType& t, const Isogeny& isogeny);

/// Component group and cocharacter lattice of the center of the standard Levi L_S.
CenterData center_of_levi(const RootDatum& d, const LeviSet& s);

/// |Z(G)|.
Integer center_order(const RootDatum& d);

/// Symmetrized Cartan form D*A with minimal positive integer symmetrizers per factor.
Form invariant_form(const RootDatum& d);

/// Gram matrix of the invariant form on X_*(T) (x) Q in the basis dual to the character
/// lattice rows.
RatMatrix cocharacter_gram(const RootDatum& d);

/// Orthogonal projection from the cocharacter space of Z(L_S) onto that of Z(L_S'),
/// expressed in the two cochar_basis bases. Throws std::invalid_argument unless S <= S'.
RatMatrix killing_projection(const RootDatum& d, const LeviSet& s, const LeviSet& s_prime);

/// Same projection from precomputed cocharacter bases.
RatMatrix orthogonal_projection(const RatMatrix& gram, const IntMatrix& from_basis, const IntMatrix& to_basis);

Integer weyl_order(const CartanType& t);

/// |W| by enumerating the W-orbit of rho in the weight lattice. Returns nullopt when the
/// orbit exceeds `limit` points.
std::optional<Integer> weyl_order_by_orbit(const CartanType& t, std::size_t limit);

}  // namespace ucent
