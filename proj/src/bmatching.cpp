#include "bmatching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace psr::detail {

// Tutte's gadget: vertex v becomes min(caps[v], deg v) copies; edge uv becomes
// two adjacent nodes e_u, e_v, with e_u joined to every copy of u and e_v to
// every copy of v. A maximum matching covers each gadget at least once, and
// uses an edge of the b-matching exactly when both e_u and e_v go to copies,
// so nu(gadget graph) = |E| + nu_b.
std::vector<std::size_t> max_b_matching(const std::vector<std::uint64_t>& caps, const std::vector<Edge>& edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const std::size_t n = caps.size();
  std::vector<std::uint64_t> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<std::size_t> first_copy(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) first_copy[v + 1] = first_copy[v] + std::min(caps[v], degree[v]);
  const std::size_t copies = first_copy[n];
  Graph g(copies + 2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t eu = copies + 2 * i, ev = eu + 1;
    boost::add_edge(eu, ev, g);
    for (std::size_t c = first_copy[edges[i].u]; c < first_copy[edges[i].u + 1]; ++c) boost::add_edge(eu, c, g);
    for (std::size_t c = first_copy[edges[i].v]; c < first_copy[edges[i].v + 1]; ++c) boost::add_edge(ev, c, g);
  }
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(boost::num_vertices(g));
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  const auto none = boost::graph_traits<Graph>::null_vertex();
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto mu = mate[copies + 2 * i], mv = mate[copies + 2 * i + 1];
    if (mu != none && mv != none && mu < copies && mv < copies) chosen.push_back(i);
  }
  return chosen;
}

}  // namespace psr::detail
