#pragma once

// Group-spec parsing and command dispatch shared by the `ucent` executable and the tests.

#include "ucent/rootdata.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ucent {

/// Syntax error in a group spec; position is a 0-based offset into the raw text.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: TYPE[xTYPE...] ":" (adjoint | sc | lattice=<JSON integer rows>).
/// Whitespace-insensitive, letters case-insensitive.
struct GroupSpec {
  std::string raw;
  CartanType type;
  Isogeny isogeny;

  /// Canonical text, e.g. "A1xA2:sc"; parses back to the same datum.
  std::string canonical() const;
  RootDatum datum() const { return RootDatum(type, isogeny); }
};

/// Throws SpecError, InvalidCartanType or InvalidLattice.
GroupSpec parse_spec(std::string_view text);

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_refusal = 2, exit_check_failed = 3 };

struct RunOptions {
  std::string format = "table";  // table | json
  bool all = false;
  std::optional<std::string> levi;  // 1-based comma list, e.g. "1,3"
  std::size_t max_rank = 8;
  bool slow = false;  // allow homology at rank >= 8
};

struct RunResult {
  int exit_code = exit_ok;
  nlohmann::json report;
  std::string out;  // stdout text in the requested format
  std::string err;  // diagnostics for stderr
};

/// Commands: info, pi0, count, epoly, poincare, cgbetti, jgbetti, check.
RunResult run(std::string_view command, std::string_view spec, const RunOptions& options);

}  // namespace ucent
