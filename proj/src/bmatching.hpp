#pragma once

#include <cstdint>
#include <vector>

namespace psr::detail {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
};

/// Maximum simple b-matching: a largest subset of `edges` (parallel edges
/// are distinct items) such that every vertex v is covered at most caps[v]
/// times. Returns the indices of the chosen edges.
std::vector<std::size_t> max_b_matching(const std::vector<std::uint64_t>& caps, const std::vector<Edge>& edges);

}  // namespace psr::detail
