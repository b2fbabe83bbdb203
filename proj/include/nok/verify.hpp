#pragma once

#include <string>
#include <vector>

namespace nok {

struct VerifyRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// The golden harness: recomputes every headline number of the bundled
/// surfaces (the mv table, the lattice identities, the Shioda–Tate ranks,
/// the height pairings, the fixed polygons and Zariski decompositions) and
/// reports expected vs computed, row by row.
std::vector<VerifyRow> verify_paper_rows();

}  // namespace nok
