#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace psr {

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t capacity = 0;
  std::int64_t cost = 0;
};

/// Directed network with non-negative integral capacities and costs.
struct FlowNetwork {
  std::size_t node_count = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<FlowArc> arcs;

  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity, std::int64_t cost);
  /// Throws InvalidArgument on out-of-range endpoints, self-loops, negative
  /// capacities or costs, or source == sink.
  void validate() const;
};

struct FlowSolution {
  std::int64_t cost = 0;
  std::vector<std::int64_t> arc_flow;  // parallel to FlowNetwork::arcs
};

/// Minimum-cost source-to-sink flow of exactly `target_value`, or nullopt if
/// no feasible flow has that value. Arc flows are integral.
std::optional<FlowSolution> min_cost_flow(const FlowNetwork& network, std::int64_t target_value);

}  // namespace psr
