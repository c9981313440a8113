#pragma once

#include "cm/index_set.hpp"

#include <vector>

namespace cm {

bool is_hitting_set(const IndexSet &h, const std::vector<IndexSet> &family);

/// All inclusion-minimal hitting sets (Berge's incremental algorithm),
/// canonically ordered. A family containing the empty set has none; the
/// empty family has exactly one, the empty set.
std::vector<IndexSet> minimal_hitting_sets(const std::vector<IndexSet> &family);

/// A minimum-cardinality hitting set; among those of minimum size, the
/// lexicographically smallest. Exact branch-and-bound over the elements in
/// ascending order. The family must not contain the empty set.
IndexSet minimum_hitting_set(const std::vector<IndexSet> &family);

} // namespace cm
