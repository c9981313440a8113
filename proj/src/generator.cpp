#include "cm/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cm {

std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
} // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto &w : s_) w = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

// Number of distinct subsets with size in [lo, hi], saturating at `cap`.
std::uint64_t distinct_subsets(int n, int lo, int hi, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (int k = lo; k <= hi; ++k) {
    long double c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    total += c > static_cast<long double>(cap) ? cap : static_cast<std::uint64_t>(c + 0.5L);
    if (total >= cap) return cap;
  }
  return total;
}

} // namespace

SetFamily generate_set_family(const GenParams &p) {
  if (p.m < 1) throw std::invalid_argument("m must be at least 1");
  if (p.min_size < 1 || p.min_size > p.max_size || p.max_size > p.n)
    throw std::invalid_argument("need 1 <= min_size <= max_size <= n");
  const auto m = static_cast<std::uint64_t>(p.m);
  if (distinct_subsets(p.n, p.min_size, p.max_size, m) < m)
    throw std::invalid_argument("cannot draw " + std::to_string(p.m) + " distinct sets from 1.." +
                                std::to_string(p.n));

  Rng rng(p.seed);
  std::vector<IndexSet> sets;
  std::vector<int> pool(static_cast<std::size_t>(p.n));
  const std::uint64_t max_attempts = 1000 * m + 1000;
  for (std::uint64_t attempt = 0; sets.size() < m; ++attempt) {
    if (attempt >= max_attempts)
      throw std::invalid_argument("retry cap reached while drawing distinct sets");
    const int size = rng.between(p.min_size, p.max_size);
    std::iota(pool.begin(), pool.end(), 1);
    // partial Fisher-Yates: the first `size` slots are a uniform sample
    for (int i = 0; i < size; ++i) {
      const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(p.n - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    IndexSet s(std::vector<int>(pool.begin(), pool.begin() + size));
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(std::move(s));
  }
  return SetFamily(p.n, std::move(sets));
}

std::string family_name(const GenParams &p) {
  return "mfsp_" + std::to_string(p.m) + "_" + std::to_string(p.n);
}

namespace {

Formula random_formula(Rng &rng, int num_vars, int depth) {
  if (depth == 0 || rng.below(3) == 0) {
    return Formula::var(std::string(1, static_cast<char>('a' + rng.below(static_cast<std::uint64_t>(num_vars)))));
  }
  switch (rng.below(4)) {
  case 0: return Formula::negation(random_formula(rng, num_vars, depth - 1));
  case 1: {
    Formula l = random_formula(rng, num_vars, depth - 1);
    return Formula::conjunction(std::move(l), random_formula(rng, num_vars, depth - 1));
  }
  case 2: {
    Formula l = random_formula(rng, num_vars, depth - 1);
    return Formula::disjunction(std::move(l), random_formula(rng, num_vars, depth - 1));
  }
  default: {
    Formula l = random_formula(rng, num_vars, depth - 1);
    return Formula::implication(std::move(l), random_formula(rng, num_vars, depth - 1));
  }
  }
}

} // namespace

KnowledgeBase generate_random_kb(int num_vars, int num_formulas, std::uint64_t seed) {
  if (num_vars < 1 || num_vars > 8) throw std::invalid_argument("num_vars must be in 1..8");
  if (num_formulas < 0 || num_formulas > 12) throw std::invalid_argument("num_formulas must be in 0..12");
  Rng rng(seed);
  std::vector<Formula> formulas;
  for (int attempt = 0; static_cast<int>(formulas.size()) < num_formulas && attempt < 100 * num_formulas; ++attempt) {
    Formula f = random_formula(rng, num_vars, static_cast<int>(rng.below(4)));
    if (std::find(formulas.begin(), formulas.end(), f) == formulas.end()) formulas.push_back(std::move(f));
  }
  return KnowledgeBase(std::move(formulas));
}

} // namespace cm
