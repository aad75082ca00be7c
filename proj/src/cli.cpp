#include "ucent/cli.hpp"

#include "ucent/assembly.hpp"
#include "ucent/homology.hpp"
#include "ucent/polycount.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <vector>

namespace ucent {

using nlohmann::json;

SpecError::SpecError(std::size_t position, const std::string& message)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

IntMatrix parse_lattice(const std::string& body, std::size_t body_pos, const std::vector<std::size_t>& where,
                        std::size_t text_size) {
  auto at = [&](std::size_t k) { return body_pos + k < where.size() ? where[body_pos + k] : text_size; };
  json rows;
  try {
    rows = json::parse(body);
  } catch (const json::parse_error& e) {
    throw SpecError(at(e.byte > 0 ? e.byte - 1 : 0), "lattice is not valid JSON");
  }
  if (!rows.is_array() || rows.empty()) throw SpecError(at(0), "lattice must be a nonempty array of rows");
  const std::size_t n = rows.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw SpecError(at(0), "lattice must be square; row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const json& v = rows[i][j];
      if (!v.is_number_integer()) throw SpecError(at(0), "lattice entries must be integers");
      m(i, j) = v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                       : Integer(std::to_string(v.get<std::int64_t>()));
    }
  }
  return m;
}

json json_int(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json json_poly(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(json_int(c));
  const char* var = p.variable() == Variable::q ? "q" : p.variable() == Variable::uv ? "uv" : "t";
  return {{"variable", var}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

json json_levi(const LeviSet& s) {
  json out = json::array();
  for (auto i : s.indices()) out.push_back(i + 1);
  return out;
}

json json_factors(const InvariantFactors& f) {
  json out = json::array();
  for (const auto& x : f.factors) out.push_back(json_int(x));
  return out;
}

std::string factors_text(const InvariantFactors& f) {
  if (f.trivial()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) out += (i ? " x Z/" : "Z/") + f.factors[i].get_str();
  return out;
}

std::string betti_text(const BettiTable& b) {
  std::string out;
  for (std::size_t k = 0; k < b.betti.size(); ++k) out += (k ? " " : "") + std::to_string(b.betti[k]);
  return out.empty() ? "0" : out;
}

LeviSet parse_levi(const std::string& text, std::size_t n) {
  std::vector<std::size_t> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("--levi expects a comma list of simple-root labels, got '" + text + "'");
    const unsigned long label = std::stoul(item);
    if (label < 1 || label > n)
      throw std::invalid_argument("--levi label " + item + " outside 1.." + std::to_string(n));
    idx.push_back(label - 1);
  }
  return LeviSet::from_indices(idx);
}

struct CheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

class Checker {
 public:
  void item(std::string name, bool pass, std::string detail = {}) {
    items_.push_back({std::move(name), pass, std::move(detail)});
  }
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      item(name, false, std::string("exception: ") + e.what());
    }
  }
  const std::vector<CheckItem>& items() const { return items_; }
  bool all_pass() const {
    return std::all_of(items_.begin(), items_.end(), [](const CheckItem& c) { return c.pass; });
  }

 private:
  std::vector<CheckItem> items_;
};

bool positive_definite(const IntMatrix& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

void run_checks(const RootDatum& d, Checker& check) {
  const std::size_t n = d.rank();
  const LeviSet full = LeviSet::full(n);
  const auto levis = all_levi_sets(n);
  const Integer z = center_order(d);

  check.guarded("exactla: invariant factors form a divisibility chain", [&] {
    for (const auto& s : levis) {
      const auto f = center_of_levi(d, s).pi0.factors;
      for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (!mpz_divisible_p(f[i + 1].get_mpz_t(), f[i].get_mpz_t()) || f[i] < 2) {
          check.item("exactla: invariant factors form a divisibility chain", false, "fails at S = " + s.label());
          return;
        }
    }
    check.item("exactla: invariant factors form a divisibility chain", true);
  });

  check.guarded("rootdata: dim Z(L_S) = n - |S| and cocharacters annihilate S", [&] {
    for (const auto& s : levis) {
      const auto c = center_of_levi(d, s);
      bool ok = c.dim == n - s.size() && c.cochar_basis.cols() == c.dim;
      for (auto i : s.indices())
        for (std::size_t col = 0; ok && col < c.dim; ++col) {
          Integer pairing = 0;
          for (std::size_t j = 0; j < n; ++j) pairing += d.root_coordinates()(i, j) * c.cochar_basis(j, col);
          ok = pairing == 0;
        }
      if (!ok) {
        check.item("rootdata: dim Z(L_S) = n - |S| and cocharacters annihilate S", false, "S = " + s.label());
        return;
      }
    }
    check.item("rootdata: dim Z(L_S) = n - |S| and cocharacters annihilate S", true);
  });

  if (d.kind() == IsogenyKind::adjoint) {
    bool ok = std::all_of(levis.begin(), levis.end(), [&](const LeviSet& s) { return center_of_levi(d, s).pi0.trivial(); });
    check.item("rootdata: adjoint datum has connected Levi centers", ok);
  }
  if (d.kind() == IsogenyKind::simply_connected) {
    const Integer det = abs(determinant(cartan_matrix(d.type())));
    check.item("rootdata: |Z(G_sc)| = det(Cartan matrix)", det == z, z.get_str() + " vs " + det.get_str());
  }

  check.guarded("rootdata: invariant form symmetric positive definite", [&] {
    const IntMatrix g = invariant_form(d).gram;
    check.item("rootdata: invariant form symmetric positive definite", g == g.transpose() && positive_definite(g));
  });

  check.guarded("rootdata: Weyl order matches orbit enumeration", [&] {
    const Integer w = weyl_order(d.type());
    if (auto orbit = weyl_order_by_orbit(d.type(), 100000))
      check.item("rootdata: Weyl order matches orbit enumeration", *orbit == w, w.get_str() + " vs " + orbit->get_str());
    else
      check.item("rootdata: Weyl order matches orbit enumeration", true, "skipped: |W| > 100000");
  });

  std::optional<CenterDiagram> diagram;
  check.guarded("rootdata: Killing projections compose and are surjective", [&] {
    diagram = build_center_diagram(d);
    verify_functoriality(*diagram);
    for (const auto& [key, arrow] : diagram->arrows)
      if (rank(arrow) != diagram->dim(key.second)) {
        check.item("rootdata: Killing projections compose and are surjective", false,
                   "not surjective: " + key.first.label() + " -> " + key.second.label());
        return;
      }
    check.item("rootdata: Killing projections compose and are surjective", true);
  });

  const Polynomial count = point_count_poly(d);
  check.item("polycount: point count monic of degree 2n",
             count.degree() == static_cast<long>(2 * n) && count.coeffs().back() == 1, count.to_string());
  if (d.kind() == IsogenyKind::adjoint) {
    std::vector<Integer> mono(2 * n + 1, Integer(0));
    mono.back() = 1;
    check.item("polycount: adjoint point count is q^{2n}", count == Polynomial(mono, Variable::q), count.to_string());
  }
  check.item("polycount: point count at q = 1 equals |Z(G)|", count.evaluate(1) == z,
             count.evaluate(1).get_str() + " vs " + z.get_str());

  const Polynomial e = e_polynomial(d);
  std::optional<Polynomial> purity;
  try {
    purity = poincare_from_purity(d);
    bool ok = true;
    for (std::size_t k = 0; k <= 2 * n; ++k) ok = ok && purity->coeff(4 * n - 2 * k) == e.coeff(k);
    for (std::size_t m = 1; m <= 4 * n; m += 2) ok = ok && purity->coeff(m) == 0;
    check.item("polycount: purity substitution reindexes E by k -> 4n - 2k", ok, purity->to_string());
  } catch (const PurityError& err) {
    const bool negative = std::any_of(e.coeffs().begin(), e.coeffs().end(), [](const Integer& c) { return c < 0; });
    check.item("polycount: purity substitution reindexes E by k -> 4n - 2k", negative,
               std::string("inadmissible: ") + err.what());
  }

  std::optional<CechComplex> complex;
  check.guarded("homology: d o d = 0 in every Cech row", [&] {
    if (!diagram) throw std::runtime_error("diagram unavailable");
    complex = build_cech_complex(*diagram);
    for (const auto& row : complex->rows)
      for (std::size_t p = 2; p < row.differentials.size(); ++p)
        if (!(row.differentials[p - 1] * row.differentials[p]).is_zero()) {
          check.item("homology: d o d = 0 in every Cech row", false,
                     "row " + std::to_string(row.weight) + ", p = " + std::to_string(p));
          return;
        }
    check.item("homology: d o d = 0 in every Cech row", true);
  });
  if (complex) check.item("homology: total Euler characteristic vanishes", total_euler(*complex) == 0);

  const auto bad = nontrivial_proper_pi0(d);
  bool refused = false;
  std::optional<AssemblyReport> assembled;
  try {
    assembled = jg_homology(d);
  } catch (const NontrivialPi0& refusal) {
    refused = true;
    const bool witness_ok = refusal.witness() != full && !center_of_levi(d, refusal.witness()).pi0.trivial();
    check.item("assembly: refusal names a proper Levi set with nontrivial pi_0", witness_ok, refusal.what());
  }
  check.item("assembly: refuses exactly when some proper pi_0 is nontrivial", refused == bad.has_value());
  if (!assembled) return;

  const BettiTable sphere = sphere_betti(2 * n - 1);
  check.item("homology: H_*(C_G) = H_*(S^{2n-1})", assembled->boundary_betti == sphere,
             betti_text(assembled->boundary_betti));
  if (complex) {
    std::vector<std::size_t> reversed(2 * n, 0);
    for (std::size_t w = complex->rows.size(); w-- > 0;) {
      const auto h = row_homology(complex->rows[w]);
      for (std::size_t p = 0; p < h.size(); ++p) reversed[w + p] += h[p];
    }
    check.item("homology: row order does not affect Betti numbers",
               BettiTable::from(reversed) == assembled->boundary_betti);
  }
  long euler = 0;
  for (std::size_t k = 0; k < assembled->betti.betti.size(); ++k)
    euler += (k % 2 ? -1 : 1) * static_cast<long>(assembled->betti.betti[k]);
  check.item("assembly: Euler characteristic of J_G = E(1,1) = |Z(G)|",
             Integer(euler) == z && e.evaluate(1) == z, std::to_string(euler));
  check.item("assembly: b_{2n-1}(J_G) = 0", assembled->betti.at(2 * n - 1) == 0);
  check.item("assembly: assembled Betti numbers match the purity prediction", assembled->purity_match,
             betti_text(assembled->betti));
  check.item("assembly: intersection number positive", assembled->intersection_number > 0,
             assembled->intersection_number.get_str());
}

std::string isogeny_name(IsogenyKind k) {
  switch (k) {
    case IsogenyKind::adjoint: return "adjoint";
    case IsogenyKind::simply_connected: return "sc";
    case IsogenyKind::lattice: return "lattice";
  }
  return "";
}

bool needs_homology(std::string_view command) {
  return command == "cgbetti" || command == "jgbetti" || command == "check";
}

}  // namespace

std::string GroupSpec::canonical() const {
  std::string out = type.name() + ":";
  switch (isogeny.kind) {
    case IsogenyKind::adjoint: return out + "adjoint";
    case IsogenyKind::simply_connected: return out + "sc";
    case IsogenyKind::lattice: return out + "lattice=" + to_string(isogeny.lattice);
  }
  return out;
}

GroupSpec parse_spec(std::string_view text) {
  std::string s;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s.push_back(text[i]);
      where.push_back(i);
    }
  auto fail = [&](std::size_t k, const std::string& msg) -> SpecError {
    return SpecError(k < where.size() ? where[k] : text.size(), msg);
  };

  std::vector<SimpleFactor> factors;
  std::size_t i = 0;
  for (;;) {
    if (i >= s.size()) throw fail(i, "expected a Cartan letter A-G");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (letter < 'A' || letter > 'G') throw fail(i, "expected a Cartan letter A-G");
    const std::size_t start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw fail(i, "expected a rank after '" + std::string(1, letter) + "'");
    if (i - start > 4) throw fail(start, "rank too large");
    factors.push_back({letter, static_cast<unsigned>(std::stoul(s.substr(start, i - start)))});
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      continue;
    }
    break;
  }
  if (i >= s.size() || s[i] != ':') throw fail(i, "expected ':' after the Cartan type");
  ++i;

  GroupSpec out;
  out.raw = std::string(text);
  out.type = CartanType(std::move(factors));
  const std::string rest = s.substr(i);
  const std::string key = lower(rest);
  if (key == "adjoint") {
    out.isogeny = Isogeny::adjoint();
  } else if (key == "sc") {
    out.isogeny = Isogeny::simply_connected();
  } else if (key.rfind("lattice=", 0) == 0) {
    out.isogeny = Isogeny::explicit_lattice(parse_lattice(rest.substr(8), i + 8, where, text.size()));
  } else {
    throw fail(i, "expected 'adjoint', 'sc' or 'lattice=' after ':'");
  }
  out.datum();  // containment and nonsingularity
  return out;
}

RunResult run(std::string_view command, std::string_view spec_text, const RunOptions& options) {
  RunResult result;
  const bool as_json = options.format == "json";
  auto usage = [&](const std::string& message) {
    result.exit_code = exit_usage;
    result.report = {{"command", std::string(command)}, {"error", {{"kind", "usage"}, {"message", message}}}};
    result.err = "error: " + message + "\n";
    if (as_json) result.out = result.report.dump(2) + "\n";
    return result;
  };

  static const std::vector<std::string> commands{"info", "pi0", "count", "epoly", "poincare", "cgbetti", "jgbetti", "check"};
  if (std::find(commands.begin(), commands.end(), command) == commands.end())
    return usage("unknown command '" + std::string(command) + "'");
  if (options.format != "table" && options.format != "json")
    return usage("--format must be 'table' or 'json'");

  std::optional<GroupSpec> spec;
  try {
    spec = parse_spec(spec_text);
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }
  const RootDatum d = spec->datum();
  const std::size_t n = d.rank();
  if (n > options.max_rank)
    return usage("rank " + std::to_string(n) + " exceeds --max-rank=" + std::to_string(options.max_rank));
  if (needs_homology(command) && n >= 8 && !options.slow)
    return usage("homology at rank " + std::to_string(n) + " requires --slow");

  json& r = result.report;
  r = {{"command", std::string(command)},
       {"group", spec->canonical()},
       {"type", d.type().name()},
       {"isogeny", isogeny_name(d.kind())},
       {"rank", n}};
  std::ostringstream text;

  try {
    if (command == "info") {
      const Integer z = center_order(d);
      const Integer w = weyl_order(d.type());
      r["center_order"] = json_int(z);
      r["weyl_order"] = json_int(w);
      text << "group   " << spec->canonical() << "\nrank    " << n << "\n|Z(G)|  " << z.get_str() << "\n|W|     "
           << w.get_str() << "\n";
    } else if (command == "pi0") {
      std::vector<LeviSet> sets;
      if (options.levi && !options.all) sets.push_back(parse_levi(*options.levi, n));
      else sets = all_levi_sets(n);
      json rows = json::array();
      text << "S" << std::string(2 * n + 2, ' ') << "pi0(Z(L_S))\n";
      for (const auto& s : sets) {
        const auto c = center_of_levi(d, s);
        rows.push_back({{"levi", json_levi(s)}, {"factors", json_factors(c.pi0)}, {"order", json_int(c.pi0.order())},
                        {"center_dim", c.dim}});
        std::string label = s.label();
        label.resize(std::max<std::size_t>(label.size() + 1, 2 * n + 3), ' ');
        text << label << factors_text(c.pi0) << "\n";
      }
      r["pi0"] = rows;
    } else if (command == "count") {
      const Polynomial p = point_count_poly(d);
      r["point_count"] = json_poly(p);
      text << p.to_string() << "\n";
    } else if (command == "epoly") {
      const Polynomial p = e_polynomial(d);
      r["e_polynomial"] = json_poly(p);
      r["e_polynomial"]["value_at_1_1"] = json_int(p.evaluate(1));
      text << p.to_string() << "\n";
    } else if (command == "poincare") {
      const Polynomial p = poincare_from_purity(d);
      r["poincare"] = json_poly(p);
      r["poincare"]["label"] = "purity-predicted";
      text << p.to_string() << "    (purity-predicted)\n";
    } else if (command == "cgbetti") {
      const BettiTable b = boundary_homology(d);
      r["boundary_betti"] = b.betti;
      text << "H_*(C_G; Q) betti: " << betti_text(b) << "\n";
    } else if (command == "jgbetti") {
      const AssemblyReport a = jg_homology(d);
      r["assembly"] = {{"betti", a.betti.betti},
                       {"boundary_betti", a.boundary_betti.betti},
                       {"cells_attached", json_int(a.cells_attached)},
                       {"boundary_rank", a.boundary_rank},
                       {"intersection_number", a.intersection_number.get_str()},
                       {"purity_match", a.purity_match}};
      text << "H_*(J_G; Q) betti:  " << betti_text(a.betti) << "\n"
           << "H_*(C_G; Q) betti:  " << betti_text(a.boundary_betti) << "\n"
           << "cells attached:     " << a.cells_attached.get_str() << " (dimension " << 2 * n << ")\n"
           << "boundary rank:      " << a.boundary_rank << "\n"
           << "|W|/|Z(G)|:         " << a.intersection_number.get_str() << "\n"
           << "purity match:       " << (a.purity_match ? "true" : "false") << "\n";
    } else {  // check
      Checker checker;
      run_checks(d, checker);
      json items = json::array();
      for (const auto& c : checker.items()) {
        items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        text << (c.pass ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
      }
      r["checks"] = items;
      r["passed"] = checker.all_pass();
      if (!checker.all_pass()) result.exit_code = exit_check_failed;
    }
  } catch (const NontrivialPi0& refusal) {
    result.exit_code = exit_refusal;
    r["error"] = {{"kind", "refusal"},
                  {"message", refusal.what()},
                  {"witness", json_levi(refusal.witness())},
                  {"factors", json_factors(refusal.factors())}};
    result.err = "refused: " + std::string(refusal.what()) + "\n";
    text.str("");
  } catch (const PurityError& e) {
    result.exit_code = exit_refusal;
    r["error"] = {{"kind", "refusal"}, {"message", e.what()}};
    result.err = "refused: " + std::string(e.what()) + "\n";
    text.str("");
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }

  result.out = as_json ? r.dump(2) + "\n" : text.str();
  return result;
}

}  // namespace ucent
