#pragma once

// Published values the `table` command is checked against.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "discarr/detectors.hpp"

namespace discarr::tools {

/// m(nu) in PartitionType::all() order.
const std::array<int, 11>& published_m_values();

/// Minimal field per type in PartitionType::all() order; "*" where no
/// characteristic-0 realisation exists.
const std::array<std::string, 11>& published_fields();

struct DodecahedralDependency {
  IndexMatching matching;
  /// sum of coefficient * alpha_L vanishes.
  std::vector<std::pair<int, IndexSet>> terms;
};
const std::vector<DodecahedralDependency>& published_dodecahedral_dependencies();

}  // namespace discarr::tools
