#pragma once

// Handle attachment: H_*(J_G; Q) from H_*(C_G; Q) plus one 2n-cell per central element.

#include "ucent/exactla.hpp"
#include "ucent/homology.hpp"
#include "ucent/rootdata.hpp"

namespace ucent {

struct AssemblyReport {
  BettiTable betti;           // of J_G
  BettiTable boundary_betti;  // of C_G
  Integer cells_attached;     // |Z(G)|
  std::size_t boundary_rank = 0;
  Rational intersection_number;  // |W| / |Z(G)|
  bool purity_match = false;
};

/// |W| / |Z(G)|: transverse intersections of each attaching cell with a generic cotangent fiber.
Rational intersection_number(const RootDatum& d);

/// Throws NontrivialPi0 with a witness Levi set when some proper Levi center is disconnected.
AssemblyReport jg_homology(const RootDatum& d);

}  // namespace ucent
