#pragma once

#include "cm/index_set.hpp"
#include "cm/knowledge_base.hpp"
#include "cm/mus.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cm {

/// Vertices are MUS ids (0-based positions in a MusSet); an edge joins two
/// MUSes that share a formula.
class MusGraph {
public:
  explicit MusGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// Edges as (i, j) with i < j, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>> &edges() const { return edges_; }
  const std::vector<std::size_t> &neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool has_edge(std::size_t a, std::size_t b) const;

  void add_edge(std::size_t a, std::size_t b);

private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

MusGraph build_mus_graph(const MusSet &muses);

/// Connected components as sorted id lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const MusGraph &g);

struct Component {
  IndexSet formulas;
  std::vector<std::size_t> mus_ids;
};

struct Decomposition {
  std::vector<Component> components; // ordered by smallest formula index
  IndexSet free;
};

/// The unique MUS-decomposition. Performs no SAT calls.
Decomposition mus_decomposition(const KnowledgeBase &kb, const MusSet &muses);

/// `v <id>` lines for every vertex, then one `i j` line per edge; ids are 1-based.
std::string write_graph(const MusGraph &g);

} // namespace cm
