#include "psr/flow.hpp"

#include <functional>
#include <limits>
#include <queue>

#include "psr/error.hpp"

namespace psr {

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t capacity, std::int64_t cost) {
  arcs.push_back({from, to, capacity, cost});
  return arcs.size() - 1;
}

void FlowNetwork::validate() const {
  if (node_count == 0) throw InvalidArgument("flow network has no nodes");
  if (source >= node_count || sink >= node_count) throw InvalidArgument("source/sink out of range");
  if (source == sink) throw InvalidArgument("source and sink must differ");
  for (const auto& a : arcs) {
    if (a.from >= node_count || a.to >= node_count) throw InvalidArgument("arc endpoint out of range");
    if (a.from == a.to) throw InvalidArgument("self-loop arcs are not allowed");
    if (a.capacity < 0 || a.cost < 0) throw InvalidArgument("arc capacity and cost must be non-negative");
  }
}

namespace {

// Residual graph: arc 2i is forward arc i, arc 2i+1 its reverse.
struct Residual {
  std::size_t to;
  std::int64_t capacity;
  std::int64_t cost;
};

}  // namespace

std::optional<FlowSolution> min_cost_flow(const FlowNetwork& network, std::int64_t target_value) {
  network.validate();
  if (target_value < 0) throw InvalidArgument("target flow value must be non-negative");

  const std::size_t n = network.node_count;
  std::vector<Residual> edges;
  std::vector<std::vector<std::size_t>> out(n);
  edges.reserve(network.arcs.size() * 2);
  for (const auto& a : network.arcs) {
    out[a.from].push_back(edges.size());
    edges.push_back({a.to, a.capacity, a.cost});
    out[a.to].push_back(edges.size());
    edges.push_back({a.from, 0, -a.cost});
  }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // Costs are non-negative, so zero potentials are feasible initially.
  std::vector<std::int64_t> potential(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<std::size_t> via(n);
  std::int64_t flow = 0;
  std::int64_t cost = 0;

  using Item = std::pair<std::int64_t, std::size_t>;
  while (flow < target_value) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[network.source] = 0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0, network.source);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (std::size_t id : out[v]) {
        const auto& e = edges[id];
        if (e.capacity == 0) continue;
        const std::int64_t nd = d + e.cost + potential[v] - potential[e.to];
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          via[e.to] = id;
          heap.emplace(nd, e.to);
        }
      }
    }
    if (dist[network.sink] == kInf) return std::nullopt;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }
    std::int64_t push = target_value - flow;
    for (std::size_t v = network.sink; v != network.source; v = edges[via[v] ^ 1].to) {
      push = std::min(push, edges[via[v]].capacity);
    }
    for (std::size_t v = network.sink; v != network.source; v = edges[via[v] ^ 1].to) {
      edges[via[v]].capacity -= push;
      edges[via[v] ^ 1].capacity += push;
      cost += push * edges[via[v]].cost;
    }
    flow += push;
  }

  FlowSolution solution;
  solution.cost = cost;
  solution.arc_flow.reserve(network.arcs.size());
  for (std::size_t i = 0; i < network.arcs.size(); ++i) solution.arc_flow.push_back(edges[2 * i + 1].capacity);
  return solution;
}

}  // namespace psr
