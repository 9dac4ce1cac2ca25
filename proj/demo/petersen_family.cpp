// Walks the family of K6 and prints each member with its order.
#include <tyfam/enumeration.hpp>
#include <tyfam/graph6.hpp>

#include <iostream>

int main() {
  using namespace tyfam;
  const auto report = enumerate_family(complete_graph(6));
  std::cout << "K6 family: " << report.count() << " graphs, " << report.size << " edges each\n";
  for (const auto& member : report.members) {
    const Graph g = graph_from_certificate(member);
    std::cout << "  order " << g.order() << "  " << graph6_encode(g) << '\n';
  }
}
