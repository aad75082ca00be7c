#include "ucent/assembly.hpp"

#include "ucent/polycount.hpp"

namespace ucent {

Rational intersection_number(const RootDatum& d) {
  Rational out(weyl_order(d.type()), center_order(d));
  out.canonicalize();
  return out;
}

AssemblyReport jg_homology(const RootDatum& d) {
  const std::size_t n = d.rank();
  AssemblyReport report;
  report.boundary_betti = boundary_homology(d);
  if (report.boundary_betti != sphere_betti(2 * n - 1))
    throw std::logic_error("boundary homology is not that of S^" + std::to_string(2 * n - 1));

  report.cells_attached = center_order(d);
  report.intersection_number = intersection_number(d);
  // Every attaching sphere meets the dual fiber class |W|/|Z(G)| > 0 times, and the center
  // permutes the cells, so the attaching map onto H_{2n-1}(C_G) = Q has rank exactly one.
  report.boundary_rank = report.intersection_number > 0 ? 1 : 0;

  std::vector<std::size_t> b = report.boundary_betti.betti;
  b.resize(2 * n + 1, 0);
  const std::size_t cells = report.cells_attached.get_ui();
  b[2 * n - 1] -= report.boundary_rank;
  b[2 * n] += cells - report.boundary_rank;
  report.betti = BettiTable::from(std::move(b));

  try {
    const Polynomial predicted = poincare_from_purity(d);
    std::vector<std::size_t> coeffs;
    for (const auto& c : predicted.coeffs()) coeffs.push_back(c.get_ui());
    report.purity_match = BettiTable::from(std::move(coeffs)) == report.betti;
  } catch (const PurityError&) {
    report.purity_match = false;
  }
  return report;
}

}  // namespace ucent
