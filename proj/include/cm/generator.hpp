#pragma once

#include "cm/knowledge_base.hpp"
#include "cm/mcsp.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace cm {

/// xoshiro256** (Blackman and Vigna). The four state words are filled from
/// the seed by successive splitmix64 outputs, so one 64-bit seed fixes the
/// whole stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);

private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t &state);

struct GenParams {
  int m = 1;        // number of sets
  int n = 2;        // universe size
  int min_size = 2; // set cardinality bounds, inclusive
  int max_size = 3;
  std::uint64_t seed = 0;
};

/// m distinct sets over 1..n; each size uniform in [min_size, max_size],
/// elements drawn uniformly without replacement. Duplicates are rejected and
/// redrawn. Throws std::invalid_argument for infeasible parameters.
SetFamily generate_set_family(const GenParams &p);

/// `mfsp_<m>_<n>`
std::string family_name(const GenParams &p);

/// Random formulas of depth at most 3 over variables a, b, c, ... (at most 8).
/// Leaves are always variables. Deterministic per seed; structurally duplicate
/// formulas are redrawn, so fewer than `num_formulas` only when the pool is
/// exhausted.
KnowledgeBase generate_random_kb(int num_vars, int num_formulas, std::uint64_t seed);

} // namespace cm
