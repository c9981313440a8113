#include "cm/mcsp.hpp"

#include "cm/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cm {

SetFamily::SetFamily(int universe_size, std::vector<IndexSet> sets) : universe_size_(universe_size) {
  if (universe_size < 0) throw std::invalid_argument("negative universe size");
  for (auto &s : sets) {
    if (s.empty()) throw std::invalid_argument("set family members must be non-empty");
    if (s.front() < 1 || s.back() > universe_size)
      throw std::invalid_argument("set " + s.to_string() + " outside universe 1.." +
                                  std::to_string(universe_size));
    if (std::find(sets_.begin(), sets_.end(), s) == sets_.end()) sets_.push_back(std::move(s));
  }
}

std::vector<int> SetFamily::sets_containing(int e) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (sets_[i].contains(e)) out.push_back(static_cast<int>(i + 1));
  return out;
}

bool is_set_packing(const SetFamily &f, const IndexSet &selection) {
  IndexSet covered;
  for (int i : selection) {
    if (i < 1 || static_cast<std::size_t>(i) > f.size())
      throw std::out_of_range("set index " + std::to_string(i) + " out of range");
    if (f.set(i).intersects(covered)) return false;
    covered = covered.united(f.set(i));
  }
  return true;
}

bool is_closed_packing(const SetFamily &f, const IndexSet &selection) {
  if (!is_set_packing(f, selection)) return false;
  IndexSet covered;
  for (int i : selection) covered = covered.united(f.set(i));
  for (int i = 1; i <= static_cast<int>(f.size()); ++i)
    if (!selection.contains(i) && f.set(i).is_subset_of(covered)) return false;
  return true;
}

namespace {

using Word = std::uint64_t;

struct Bits {
  std::vector<Word> words;

  explicit Bits(int universe = 0) : words(static_cast<std::size_t>(universe) / 64 + 1, 0) {}
  void set(int e) { words[static_cast<std::size_t>(e) / 64] |= Word{1} << (e % 64); }
  bool test(int e) const { return (words[static_cast<std::size_t>(e) / 64] >> (e % 64)) & 1; }
  bool intersects(const Bits &o) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & o.words[i]) return true;
    return false;
  }
  bool subset_of(const Bits &o) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & ~o.words[i]) return false;
    return true;
  }
  void unite(const Bits &o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
  }
};

std::vector<Bits> to_bits(const SetFamily &f) {
  std::vector<Bits> out;
  out.reserve(f.size());
  for (const auto &s : f.sets()) {
    Bits b(f.universe_size());
    for (int e : s) b.set(e);
    out.push_back(std::move(b));
  }
  return out;
}

PackingSolution make_solution(const SetFamily &f, IndexSet selected, bool optimal,
                              std::uint64_t nodes) {
  PackingSolution sol;
  for (int i : selected) sol.covered = sol.covered.united(f.set(i));
  sol.cardinality = selected.size();
  sol.selected = std::move(selected);
  sol.optimal = optimal;
  sol.nodes = nodes;
  return sol;
}

} // namespace

PackingSolution mcsp_bruteforce(const SetFamily &f) {
  const std::size_t m = f.size();
  if (m > kBruteForceMaxSets)
    throw ResourceLimitError("brute-force MCSP is capped at " + std::to_string(kBruteForceMaxSets) +
                             " sets, got " + std::to_string(m));
  const auto bits = to_bits(f);
  IndexSet best;
  std::size_t best_card = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto card = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (card < best_card) continue;
    Bits covered(f.universe_size());
    bool disjoint = true;
    for (std::size_t i = 0; i < m && disjoint; ++i) {
      if (!((mask >> i) & 1)) continue;
      if (covered.intersects(bits[i])) disjoint = false;
      else covered.unite(bits[i]);
    }
    if (!disjoint) continue;
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i)
      if (!((mask >> i) & 1) && bits[i].subset_of(covered)) closed = false;
    if (!closed) continue;
    std::vector<int> sel;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) sel.push_back(static_cast<int>(i + 1));
    IndexSet candidate(std::move(sel));
    if (card > best_card || candidate < best) {
      best = std::move(candidate);
      best_card = card;
    }
  }
  return make_solution(f, std::move(best), true, total);
}

namespace {

enum class Decision : std::uint8_t { Undecided, In, Out };

struct SearchState {
  std::vector<char> covered;   // by element
  std::vector<char> forbidden; // by element: must stay uncovered
  std::vector<Decision> status;
  std::vector<int> uncovered;       // by set: elements not yet covered
  std::vector<int> forbidden_count; // by set
  std::size_t in_count = 0;
};

class BranchAndBound {
public:
  BranchAndBound(const SetFamily &f, const BranchBoundOptions &options)
      : f_(f), m_(static_cast<int>(f.size())), n_(f.universe_size()) {
    by_element_.resize(static_cast<std::size_t>(n_) + 1);
    for (int i = 1; i <= m_; ++i)
      for (int e : f.set(i)) by_element_[static_cast<std::size_t>(e)].push_back(i);
    if (options.time_limit) deadline_ = std::chrono::steady_clock::now() + *options.time_limit;
  }

  PackingSolution run() {
    greedy_incumbent();
    SearchState root;
    root.covered.assign(static_cast<std::size_t>(n_) + 1, 0);
    root.forbidden.assign(static_cast<std::size_t>(n_) + 1, 0);
    root.status.assign(static_cast<std::size_t>(m_) + 1, Decision::Undecided);
    root.uncovered.assign(static_cast<std::size_t>(m_) + 1, 0);
    root.forbidden_count.assign(static_cast<std::size_t>(m_) + 1, 0);
    for (int i = 1; i <= m_; ++i) root.uncovered[static_cast<std::size_t>(i)] = static_cast<int>(f_.set(i).size());
    levels_.assign(static_cast<std::size_t>(m_) + 2, root);
    search(1, 0);
    return make_solution(f_, best_, !timed_out_, nodes_);
  }

private:
  void greedy_incumbent() {
    std::vector<int> order(static_cast<std::size_t>(m_));
    std::iota(order.begin(), order.end(), 1);
    std::vector<int> overlap(static_cast<std::size_t>(m_) + 1, 0);
    for (int i = 1; i <= m_; ++i)
      for (int e : f_.set(i)) overlap[static_cast<std::size_t>(i)] += static_cast<int>(by_element_[static_cast<std::size_t>(e)].size()) - 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return overlap[static_cast<std::size_t>(a)] < overlap[static_cast<std::size_t>(b)];
    });
    IndexSet chosen;
    for (int i : order) {
      IndexSet trial = chosen;
      trial.insert(i);
      if (is_closed_packing(f_, trial)) chosen = std::move(trial);
    }
    best_ = std::move(chosen);
    best_from_search_ = false;
  }

  bool out_of_time() {
    if (!deadline_ || (nodes_ & 1023) != 0) return timed_out_;
    if (std::chrono::steady_clock::now() > *deadline_) timed_out_ = true;
    return timed_out_;
  }

  // Marks element e as permanently uncovered; undecided sets containing it drop out.
  void forbid(SearchState &s, int e) {
    if (s.forbidden[static_cast<std::size_t>(e)]) return;
    s.forbidden[static_cast<std::size_t>(e)] = 1;
    for (int j : by_element_[static_cast<std::size_t>(e)]) {
      ++s.forbidden_count[static_cast<std::size_t>(j)];
      if (s.status[static_cast<std::size_t>(j)] == Decision::Undecided)
        s.status[static_cast<std::size_t>(j)] = Decision::Out;
    }
  }

  // An excluded set must keep one uncovered element. Returns false on conflict.
  bool require_gap(SearchState &s, int j) {
    const auto sj = static_cast<std::size_t>(j);
    if (s.forbidden_count[sj] > 0) return true;
    if (s.uncovered[sj] == 0) return false;
    if (s.uncovered[sj] == 1) {
      for (int e : f_.set(j))
        if (!s.covered[static_cast<std::size_t>(e)]) {
          forbid(s, e);
          break;
        }
    }
    return true;
  }

  bool include(SearchState &s, int k) {
    s.status[static_cast<std::size_t>(k)] = Decision::In;
    ++s.in_count;
    std::vector<int> touched;
    for (int e : f_.set(k)) {
      s.covered[static_cast<std::size_t>(e)] = 1;
      for (int j : by_element_[static_cast<std::size_t>(e)]) {
        --s.uncovered[static_cast<std::size_t>(j)];
        if (j != k) touched.push_back(j);
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int j : touched) {
      auto &st = s.status[static_cast<std::size_t>(j)];
      if (st == Decision::In) return false;
      st = Decision::Out;
      if (!require_gap(s, j)) return false;
    }
    return true;
  }

  std::size_t upper_bound(const SearchState &s, int from) const {
    std::vector<int> candidates;
    for (int j = from; j <= m_; ++j)
      if (s.status[static_cast<std::size_t>(j)] == Decision::Undecided) candidates.push_back(j);
    if (candidates.empty()) return s.in_count;
    // greedy clique cover: sets sharing an element are mutually exclusive
    std::vector<char> alive(static_cast<std::size_t>(m_) + 1, 0);
    for (int j : candidates) alive[static_cast<std::size_t>(j)] = 1;
    std::size_t remaining = candidates.size(), groups = 0, free_elements = 0, min_size = SIZE_MAX;
    for (int j : candidates) min_size = std::min(min_size, f_.set(j).size());
    for (int e = 1; e <= n_; ++e)
      if (!s.covered[static_cast<std::size_t>(e)] && !s.forbidden[static_cast<std::size_t>(e)]) ++free_elements;
    std::vector<int> count(static_cast<std::size_t>(n_) + 1, 0);
    while (remaining > 0) {
      std::fill(count.begin(), count.end(), 0);
      int best_e = 0;
      for (int j : candidates)
        if (alive[static_cast<std::size_t>(j)])
          for (int e : f_.set(j)) {
            const int c = ++count[static_cast<std::size_t>(e)];
            if (best_e == 0 || c > count[static_cast<std::size_t>(best_e)] || (c == count[static_cast<std::size_t>(best_e)] && e < best_e)) best_e = e;
          }
      for (int j : by_element_[static_cast<std::size_t>(best_e)])
        if (alive[static_cast<std::size_t>(j)]) {
          alive[static_cast<std::size_t>(j)] = 0;
          --remaining;
        }
      ++groups;
    }
    return s.in_count + std::min(groups, free_elements / min_size);
  }

  void record(const SearchState &s) {
    if (s.in_count < best_.size() || (s.in_count == best_.size() && best_from_search_)) return;
    std::vector<int> sel;
    for (int j = 1; j <= m_; ++j)
      if (s.status[static_cast<std::size_t>(j)] == Decision::In) sel.push_back(j);
    best_ = IndexSet(std::move(sel));
    best_from_search_ = true;
  }

  void search(int k, std::size_t depth) {
    ++nodes_;
    if (out_of_time()) return;
    SearchState &s = levels_[depth];
    while (k <= m_ && s.status[static_cast<std::size_t>(k)] != Decision::Undecided) ++k;
    if (k > m_) {
      record(s);
      return;
    }
    const std::size_t ub = upper_bound(s, k);
    if (ub < best_.size() || (ub == best_.size() && best_from_search_)) return;

    SearchState &child = levels_[depth + 1];
    child = s;
    if (include(child, k)) search(k + 1, depth + 1);
    if (timed_out_) return;

    child = levels_[depth];
    child.status[static_cast<std::size_t>(k)] = Decision::Out;
    if (require_gap(child, k)) search(k + 1, depth + 1);
  }

  const SetFamily &f_;
  int m_;
  int n_;
  std::vector<std::vector<int>> by_element_;
  std::vector<SearchState> levels_;
  IndexSet best_;
  bool best_from_search_ = false;
  std::uint64_t nodes_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  bool timed_out_ = false;
};

} // namespace

PackingSolution mcsp_branch_bound(const SetFamily &f, const BranchBoundOptions &options) {
  return BranchAndBound(f, options).run();
}

SetFamily reduce_msp_to_mcsp(const SetFamily &f) {
  const int n = f.universe_size();
  std::vector<IndexSet> sets;
  int fresh = n;
  for (const auto &s : f.sets()) {
    IndexSet extended = s;
    extended.insert(++fresh);
    sets.push_back(std::move(extended));
  }
  return SetFamily(fresh, std::move(sets));
}

SetFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<int, int>> header;
  std::vector<IndexSet> sets;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream toks(line);
    std::vector<int> values;
    std::string tok;
    while (toks >> tok) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception &) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
      }
    }
    if (values.empty()) continue;
    if (!header) {
      if (values.size() != 2 || values[0] < 0 || values[1] < 0)
        throw ParseError("expected header 'm n'", line_no);
      header = {values[0], values[1]};
      continue;
    }
    for (int e : values)
      if (e < 1 || e > header->second)
        throw ParseError("element " + std::to_string(e) + " outside 1.." + std::to_string(header->second), line_no);
    sets.emplace_back(std::move(values));
  }
  if (!header) throw ParseError("missing 'm n' header");
  if (sets.size() != static_cast<std::size_t>(header->first))
    throw ParseError("header declares " + std::to_string(header->first) + " sets, found " +
                     std::to_string(sets.size()));
  return SetFamily(header->second, std::move(sets));
}

std::string write_family(const SetFamily &f) {
  std::ostringstream out;
  out << f.size() << ' ' << f.universe_size() << '\n';
  for (const auto &s : f.sets()) {
    bool first = true;
    for (int e : s) {
      out << (first ? "" : " ") << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

} // namespace cm
