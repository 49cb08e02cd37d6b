#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "bookem/graph.hpp"

namespace bookem {

namespace detail {
using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
}

// Exact planarity decision (Boyer-Myrvold), not the Euler-count filter.
inline bool is_planar(const Graph& g) {
  detail::BoostGraph bg(g.n);
  for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// A graph is outerplanar iff adding one apex adjacent to every vertex
// leaves it planar.
inline bool is_outerplanar(const Graph& g) {
  detail::BoostGraph bg(g.n + 1);
  for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
  for (int v = 0; v < g.n; ++v) boost::add_edge(g.n, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace bookem
