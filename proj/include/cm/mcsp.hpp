#pragma once

#include "cm/index_set.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cm {

/// Universe {1..n} and non-empty, pairwise distinct subsets S_1..S_m.
/// Duplicate sets are dropped on construction, keeping the first.
class SetFamily {
public:
  SetFamily() = default;
  SetFamily(int universe_size, std::vector<IndexSet> sets);

  int universe_size() const { return universe_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  /// 1-based.
  const IndexSet &set(int i) const { return sets_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<IndexSet> &sets() const { return sets_; }

  /// Set indices containing element e, ascending.
  std::vector<int> sets_containing(int e) const;

  friend bool operator==(const SetFamily &, const SetFamily &) = default;

private:
  int universe_size_ = 0;
  std::vector<IndexSet> sets_;
};

/// A (closed) set packing. `selected` holds 1-based set indices.
struct PackingSolution {
  IndexSet selected;
  IndexSet covered;
  std::size_t cardinality = 0;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

/// Pairwise disjoint, and no unselected set lies inside the union.
bool is_closed_packing(const SetFamily &f, const IndexSet &selection);
/// Pairwise disjoint only.
bool is_set_packing(const SetFamily &f, const IndexSet &selection);

constexpr std::size_t kBruteForceMaxSets = 20;

/// Exhaustive over all 2^m selections; ties go to the lexicographically
/// smallest selection. Throws ResourceLimitError when m > 20.
PackingSolution mcsp_bruteforce(const SetFamily &f);

struct BranchBoundOptions {
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Exact depth-first branch-and-bound over the sets in index order
/// (include before exclude), with closedness propagation and a clique-cover
/// upper bound. The incumbent starts from a greedy closed packing built in
/// ascending overlap order. On timeout the best packing found so far is
/// returned with optimal = false.
PackingSolution mcsp_branch_bound(const SetFamily &f, const BranchBoundOptions &options = {});

/// Appends a fresh element n+i to set i. Maximum set packing of `f` equals
/// maximum closed set packing of the result.
SetFamily reduce_msp_to_mcsp(const SetFamily &f);

/// First line `m n`, then one set per line; `#` comments.
SetFamily parse_family(std::string_view text);
std::string write_family(const SetFamily &f);

} // namespace cm
