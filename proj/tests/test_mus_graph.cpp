#include "cm/mus_graph.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace cm;

TEST_CASE("MUS-graph of the nine-formula base") {
  const MusSet m = enumerate_muses(fixtures::example2());
  // Canonical ids: 0 {1,2}, 1 {5,7}, 2 {8,9}, 3 {3,4,7}, 4 {6,7,8}
  const MusGraph g = build_mus_graph(m);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(g.neighbors(0).empty());
  CHECK(connected_components(g) == std::vector<std::vector<std::size_t>>{{0}, {1, 2, 3, 4}});
  CHECK(write_graph(g) == "v 1\nv 2\nv 3\nv 4\nv 5\n2 4\n2 5\n3 5\n4 5\n");
}

TEST_CASE("small graphs") {
  MusSet one{{{1, 2}}};
  CHECK(build_mus_graph(one).edge_count() == 0);
  MusSet two{{{1, 2}, {3, 4}}};
  const MusGraph g = build_mus_graph(two);
  CHECK(g.edge_count() == 0);
  CHECK(connected_components(g).size() == 2);

  MusGraph complete(4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) complete.add_edge(a, b);
  CHECK(connected_components(complete).size() == 1);
  CHECK_THROWS(complete.add_edge(1, 1));
  CHECK(connected_components(MusGraph(3)).size() == 3);
}

TEST_CASE("MUS-decomposition") {
  const KnowledgeBase k2 = fixtures::example2();
  const Decomposition d2 = mus_decomposition(k2, enumerate_muses(k2));
  REQUIRE(d2.components.size() == 2);
  CHECK(d2.components[0].formulas == IndexSet{1, 2});
  CHECK(d2.components[1].formulas == IndexSet{3, 4, 5, 6, 7, 8, 9});
  CHECK(d2.free.empty());

  const KnowledgeBase k6 = fixtures::example6();
  const Decomposition d6 = mus_decomposition(k6, enumerate_muses(k6));
  REQUIRE(d6.components.size() == 2);
  CHECK(d6.components[0].formulas == IndexSet{1, 2, 3, 4, 5});
  CHECK(d6.components[0].mus_ids.size() == 3);
  CHECK(d6.components[1].formulas == IndexSet{6, 7, 8, 9, 10});
  CHECK(d6.components[1].mus_ids.size() == 4);

  const KnowledgeBase consistent = parse_kb("a\nb\na | b");
  const Decomposition dc = mus_decomposition(consistent, enumerate_muses(consistent));
  CHECK(dc.components.empty());
  CHECK(dc.free == IndexSet{1, 2, 3});
}
