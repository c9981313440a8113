#include "cm/mus_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cm {

bool MusGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto &n = adjacency_.at(a);
  return std::binary_search(n.begin(), n.end(), b);
}

void MusGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("MUS-graph has no self-loops");
  if (a > b) std::swap(a, b);
  if (has_edge(a, b)) return;
  auto insert_sorted = [](std::vector<std::size_t> &v, std::size_t x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  };
  insert_sorted(adjacency_.at(a), b);
  insert_sorted(adjacency_.at(b), a);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b}), {a, b});
}

MusGraph build_mus_graph(const MusSet &muses) {
  MusGraph g(muses.size());
  for (std::size_t i = 0; i < muses.size(); ++i)
    for (std::size_t j = i + 1; j < muses.size(); ++j)
      if (muses[i].intersects(muses[j])) g.add_edge(i, j);
  return g;
}

std::vector<std::vector<std::size_t>> connected_components(const MusGraph &g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> visited(g.vertex_count(), false);
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> component, stack{start};
    visited[start] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (std::size_t w : g.neighbors(v))
        if (!visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

Decomposition mus_decomposition(const KnowledgeBase &kb, const MusSet &muses) {
  Decomposition d;
  IndexSet covered;
  for (auto &ids : connected_components(build_mus_graph(muses))) {
    Component c;
    for (std::size_t id : ids) c.formulas = c.formulas.united(muses[id]);
    if (c.formulas.intersects(covered))
      throw std::logic_error("MUS-decomposition components overlap");
    covered = covered.united(c.formulas);
    c.mus_ids = std::move(ids);
    d.components.push_back(std::move(c));
  }
  std::sort(d.components.begin(), d.components.end(),
            [](const Component &a, const Component &b) { return a.formulas.front() < b.formulas.front(); });
  d.free = kb.all_indices().minus(covered);
  return d;
}

std::string write_graph(const MusGraph &g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "v " << v + 1 << '\n';
  for (const auto &[a, b] : g.edges()) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

} // namespace cm
