#include <string>

#include "psr/error.hpp"
#include "psr/solvers.hpp"
#include "psr/vectors.hpp"
#include "solver_support.hpp"

namespace psr {

std::uint64_t count_submultisets(const VoteMultiset& pool, std::uint64_t budget, std::uint64_t cap) {
  // ways[s] = number of sub-multisets of the entries seen so far with exactly s votes.
  const std::uint64_t top = std::min(budget, pool.size());
  std::vector<std::uint64_t> ways(top + 1, 0);
  ways[0] = 1;
  auto sat_add = [cap](std::uint64_t a, std::uint64_t b) { return (a > cap - std::min(cap, b)) ? cap + 1 : a + b; };
  for (const auto& e : pool.entries()) {
    std::vector<std::uint64_t> next(top + 1, 0);
    // next[s] = sum_{t=0..min(count,s)} ways[s-t]; sliding window over s.
    for (std::uint64_t s = 0; s <= top; ++s) {
      std::uint64_t total = 0;
      for (std::uint64_t t = 0; t <= std::min<std::uint64_t>(e.count, s); ++t) {
        total = sat_add(total, ways[s - t]);
        if (total > cap) break;
      }
      next[s] = total;
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total = sat_add(total, w);
  return std::min(total, cap + 1);
}

SolveResult solve_brute_force(const CCAVInstance& instance, const ScoringVector& vector,
                              const BruteForceLimits& limits) {
  instance.validate();
  if (vector.size() != instance.candidates.size())
    throw InvalidArgument("vector length does not match the number of candidates");
  if (instance.unregistered.distinct() > limits.max_distinct_votes)
    throw BoundExceeded("brute force: " + std::to_string(instance.unregistered.distinct()) +
                        " distinct unregistered votes exceed the limit of " +
                        std::to_string(limits.max_distinct_votes));
  const auto subsets = count_submultisets(instance.unregistered, instance.budget, limits.max_subsets);
  if (subsets > limits.max_subsets)
    throw BoundExceeded("brute force: more than " + std::to_string(limits.max_subsets) + " candidate subsets");

  const NormalizedVector normal = normalize(vector);
  auto found = detail::search_submultisets(instance, normal.coefficients(), instance.budget);
  if (!found) return detail::rejected("brute-force");
  return detail::certified(instance, vector, std::move(*found), "brute-force");
}

}  // namespace psr
