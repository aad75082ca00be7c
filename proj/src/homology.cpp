#include "ucent/homology.hpp"

#include <future>
#include <unordered_map>

namespace ucent {

namespace {

std::string describe(const InvariantFactors& f) {
  if (f.trivial()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + f.factors[i].get_str();
  }
  return out;
}

}  // namespace

NontrivialPi0::NontrivialPi0(LeviSet witness, InvariantFactors factors)
    : std::runtime_error("pi_0(Z(L_S)) = " + describe(factors) + " is nontrivial for proper Levi S = " +
                         witness.label()),
      witness_(witness),
      factors_(std::move(factors)) {}

BettiTable BettiTable::from(std::vector<std::size_t> raw) {
  while (!raw.empty() && raw.back() == 0) raw.pop_back();
  return BettiTable{std::move(raw)};
}

BettiTable sphere_betti(std::size_t m) {
  std::vector<std::size_t> b(m + 1, 0);
  b[0] += 1;
  b[m] += 1;
  return BettiTable::from(std::move(b));
}

CenterDiagram build_center_diagram(const RootDatum& d) {
  CenterDiagram diag;
  diag.n = d.rank();
  const LeviSet full = LeviSet::full(diag.n);
  const RatMatrix gram = cocharacter_gram(d);
  for (const auto& s : all_levi_sets(diag.n))
    if (s != full) diag.spaces.emplace(s, center_of_levi(d, s).cochar_basis);

  for (const auto& [s, basis] : diag.spaces) {
    // Enumerate proper supersets S' of S as submasks of the complement.
    const std::uint64_t rest = full.mask() & ~s.mask();
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const LeviSet s_prime(s.mask() | sub);
      if (s_prime != full) diag.arrows.emplace(std::pair{s, s_prime}, orthogonal_projection(gram, basis, diag.spaces.at(s_prime)));
      if (sub == 0) break;
    }
  }
  return diag;
}

void verify_functoriality(const CenterDiagram& diag) {
  for (const auto& [key, arrow] : diag.arrows) {
    const auto& [s, s_prime] = key;
    if (s == s_prime && arrow != RatMatrix::identity(diag.dim(s)))
      throw FunctorialityViolation("arrow " + s.label() + " -> " + s.label() + " is not the identity");
  }
  const std::uint64_t full = LeviSet::full(diag.n).mask();
  for (const auto& [key, first] : diag.arrows) {
    const auto& [s, s_prime] = key;
    const std::uint64_t rest = full & ~s_prime.mask();
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const LeviSet s_second(s_prime.mask() | sub);
      if (s_second.mask() != full && diag.arrow(s_prime, s_second) * first != diag.arrow(s, s_second))
        throw FunctorialityViolation("arrows do not compose along " + s.label() + " <= " + s_prime.label() +
                                     " <= " + s_second.label());
      if (sub == 0) break;
    }
  }
}

CechComplex build_cech_complex(const CenterDiagram& diag) {
  verify_functoriality(diag);
  const std::size_t n = diag.n;
  const LeviSet full = LeviSet::full(n);
  CechComplex out;
  out.n = n;

  // Nonempty A subset Pi grouped by |A| = p + 1, lexicographic within a group.
  std::vector<std::vector<LeviSet>> faces(n);
  for (std::size_t p = 0; p < n; ++p)
    for (const auto& a : k_subsets(n, p + 1)) faces[p].push_back(LeviSet::from_indices(a));
  auto stalk = [&](const LeviSet& a) { return LeviSet(full.mask() & ~a.mask()); };

  for (std::size_t w = 0; w <= n; ++w) {
    CechRow row;
    row.weight = w;
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> offset(n);
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t total = 0;
      for (const auto& a : faces[p]) {
        offset[p][a.mask()] = total;
        total += binomial(diag.dim(stalk(a)), w);
      }
      row.term_dims.push_back(total);
    }
    row.differentials.emplace_back(0, row.term_dims[0]);
    for (std::size_t p = 1; p < n; ++p) {
      RatMatrix d(row.term_dims[p - 1], row.term_dims[p]);
      for (const auto& a : faces[p]) {
        const std::size_t col0 = offset[p].at(a.mask());
        const auto members = a.indices();
        for (std::size_t pos = 0; pos < members.size(); ++pos) {
          const LeviSet b = a.without(members[pos]);
          const std::size_t row0 = offset[p - 1].at(b.mask());
          RatMatrix block = compound(diag.arrow(stalk(a), stalk(b)), w);
          const bool negate = pos % 2 == 1;
          for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
              d(row0 + i, col0 + j) = negate ? Rational(-block(i, j)) : block(i, j);
        }
      }
      row.differentials.push_back(std::move(d));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<std::size_t> row_homology(const CechRow& row) {
  const std::size_t len = row.term_dims.size();
  std::vector<std::size_t> ranks(len + 1, 0);  // ranks[p] = rank of d_p, d_0 = d_len = 0
  for (std::size_t p = 1; p < len; ++p) ranks[p] = rank(row.differentials[p]);
  std::vector<std::size_t> h(len);
  for (std::size_t p = 0; p < len; ++p) h[p] = row.term_dims[p] - ranks[p] - ranks[p + 1];
  return h;
}

BettiTable complex_homology(const CechComplex& c) {
  std::vector<std::future<std::vector<std::size_t>>> jobs;
  for (const auto& row : c.rows) jobs.push_back(std::async(std::launch::async, [&row] { return row_homology(row); }));
  std::vector<std::size_t> betti(c.n == 0 ? 1 : 2 * c.n, 0);
  for (std::size_t w = 0; w < jobs.size(); ++w) {
    const auto h = jobs[w].get();
    for (std::size_t p = 0; p < h.size(); ++p) betti[w + p] += h[p];
  }
  return BettiTable::from(std::move(betti));
}

std::optional<std::pair<LeviSet, InvariantFactors>> nontrivial_proper_pi0(const RootDatum& d) {
  const LeviSet full = LeviSet::full(d.rank());
  for (const auto& s : all_levi_sets(d.rank())) {
    if (s == full) continue;
    auto center = center_of_levi(d, s);
    if (!center.pi0.trivial()) return std::pair{s, std::move(center.pi0)};
  }
  return std::nullopt;
}

BettiTable boundary_homology(const RootDatum& d) {
  if (auto bad = nontrivial_proper_pi0(d)) throw NontrivialPi0(bad->first, bad->second);
  return complex_homology(build_cech_complex(build_center_diagram(d)));
}

Integer total_euler(const CechComplex& c) {
  Integer chi = 0;
  for (const auto& row : c.rows)
    for (std::size_t p = 0; p < row.term_dims.size(); ++p) {
      if ((row.weight + p) % 2) chi -= row.term_dims[p];
      else chi += row.term_dims[p];
    }
  return chi;
}

}  // namespace ucent
