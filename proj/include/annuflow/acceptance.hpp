#ifndef ANNUFLOW_ACCEPTANCE_HPP
#define ANNUFLOW_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace annuflow::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Formats one result as the canonical "PASS/FAIL  n: name (detail)" line.
std::string format_line(const CriterionResult& result);

/// Runs the oracle-based verification suite and returns one result per
/// criterion. `fast` swaps in reduced-resolution variants (grids of at most
/// 101 nodes, shorter horizons, tolerances rescaled with the grid) intended
/// to finish within a minute. When `progress` is given each line is streamed
/// as soon as its criterion finishes.
std::vector<CriterionResult> run_all(bool fast, std::ostream* progress = nullptr);

/// True when every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace annuflow::acceptance

#endif
