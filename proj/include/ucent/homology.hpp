#pragma once

// Cech complex of the face cover of the simplex on Pi, with stalks the exterior algebras of
// the Levi-center cocharacter spaces, and the rational homology of the boundary manifold C_G.

#include "ucent/exactla.hpp"
#include "ucent/rootdata.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ucent {

/// Refusal: a proper Levi subset has a disconnected center, so the rational reduction to
/// Levi-center homology does not apply.
class NontrivialPi0 : public std::runtime_error {
 public:
  NontrivialPi0(LeviSet witness, InvariantFactors factors);
  const LeviSet& witness() const { return witness_; }
  const InvariantFactors& factors() const { return factors_; }

 private:
  LeviSet witness_;
  InvariantFactors factors_;
};

class FunctorialityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct BettiTable {
  std::vector<std::size_t> betti;  // index = homological degree, trailing zeros trimmed

  static BettiTable from(std::vector<std::size_t> raw);
  std::size_t at(std::size_t k) const { return k < betti.size() ? betti[k] : 0; }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Betti vector of S^m.
BettiTable sphere_betti(std::size_t m);

struct CenterDiagram {
  std::size_t n = 0;
  /// One cocharacter basis per proper S.
  std::map<LeviSet, IntMatrix> spaces;
  /// Orthogonal projection for every pair S <= S' of proper subsets.
  std::map<std::pair<LeviSet, LeviSet>, RatMatrix> arrows;

  std::size_t dim(const LeviSet& s) const { return spaces.at(s).cols(); }
  const RatMatrix& arrow(const LeviSet& s, const LeviSet& s_prime) const { return arrows.at({s, s_prime}); }
};

/// One exterior degree w of the Cech double complex.
struct CechRow {
  std::size_t weight = 0;
  /// terms[p]: direct sum over |A| = p+1 of Lambda^w V_{Pi - A}.
  std::vector<std::size_t> term_dims;
  /// differentials[p] : term p -> term p-1, for p >= 1; differentials[0] is 0 x term_dims[0].
  std::vector<RatMatrix> differentials;
};

struct CechComplex {
  std::size_t n = 0;
  std::vector<CechRow> rows;  // index = exterior degree w
};

CenterDiagram build_center_diagram(const RootDatum& d);

/// Throws FunctorialityViolation naming the first failing chain S <= S' <= S''.
void verify_functoriality(const CenterDiagram& diag);

/// Throws FunctorialityViolation if the diagram does not compose.
CechComplex build_cech_complex(const CenterDiagram& diag);

/// dim H_p of one row, indexed by p.
std::vector<std::size_t> row_homology(const CechRow& row);

/// Proper S with nontrivial pi_0, smallest first; nullopt when all are connected.
std::optional<std::pair<LeviSet, InvariantFactors>> nontrivial_proper_pi0(const RootDatum& d);

/// H_*(C_G; Q). Throws NontrivialPi0 when some proper Levi center is disconnected.
BettiTable boundary_homology(const RootDatum& d);

/// Betti numbers of a built complex (rows computed concurrently, collected in order).
BettiTable complex_homology(const CechComplex& c);

/// Alternating sum of raw term dimensions over total degree w + p.
Integer total_euler(const CechComplex& c);

}  // namespace ucent
