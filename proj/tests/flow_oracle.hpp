#pragma once

#include <optional>
#include <random>

#include "psr/flow.hpp"
#include "support.hpp"

namespace psr::testing {

/// Cheapest integral flow of exactly `value` by enumerating every assignment
/// of arc flows in [0, capacity]. Only usable for a handful of arcs.
inline std::optional<std::int64_t> exhaustive_min_cost(const FlowNetwork& net, std::int64_t value) {
  std::optional<std::int64_t> best;
  std::vector<std::int64_t> flow(net.arcs.size(), 0);
  std::vector<std::int64_t> balance(net.node_count, 0);
  auto rec = [&](auto& self, std::size_t a, std::int64_t cost) -> void {
    if (best && cost >= *best) return;
    if (a == net.arcs.size()) {
      for (std::size_t v = 0; v < net.node_count; ++v) {
        const std::int64_t want = v == net.source ? -value : v == net.sink ? value : 0;
        if (balance[v] != want) return;
      }
      best = cost;
      return;
    }
    const FlowArc& arc = net.arcs[a];
    for (std::int64_t f = 0; f <= arc.capacity; ++f) {
      balance[arc.from] -= f;
      balance[arc.to] += f;
      self(self, a + 1, cost + f * arc.cost);
      balance[arc.from] += f;
      balance[arc.to] -= f;
    }
  };
  rec(rec, 0, 0);
  return best;
}

/// Random network with 2..8 nodes, at most `max_arcs` arcs, capacities <= 4.
inline FlowNetwork random_network(std::mt19937_64& rng, std::size_t max_arcs) {
  FlowNetwork net;
  net.node_count = uniform(rng, 2, 8);
  net.source = 0;
  net.sink = net.node_count - 1;
  const std::size_t arcs = uniform(rng, 1, max_arcs);
  while (net.arcs.size() < arcs) {
    const std::size_t u = uniform(rng, 0, net.node_count - 1), v = uniform(rng, 0, net.node_count - 1);
    if (u == v) continue;
    net.add_arc(u, v, static_cast<std::int64_t>(uniform(rng, 0, 4)), static_cast<std::int64_t>(uniform(rng, 0, 5)));
  }
  return net;
}

}  // namespace psr::testing
