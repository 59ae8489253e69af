#pragma once

#include <vector>

#include "qoc/group.hpp"

namespace qoc {

/// Bundled catalog: all groups of order 4t+2 from 6 through 42, built from
/// the explicit constructor list below and shipped as .grp.json data files.
/// Group counts per order: 6,10,14,22,26,34,38 have 2; 18 has 5; 30 has 4;
/// 42 has 6.
const std::vector<int>& catalog_orders();

/// All groups of the given catalog order (throws ParameterMismatch for a
/// non-catalog order). Entries are pairwise non-isomorphic.
std::vector<GroupTable> catalog_groups(int order);

}  // namespace qoc
