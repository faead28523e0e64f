#include <algorithm>
#include <string>

#include "psr/error.hpp"
#include "psr/flow.hpp"
#include "psr/solvers.hpp"
#include "solver_support.hpp"

namespace psr {

namespace {

const std::string kMethod = "approve-veto";

}  // namespace

SolveResult solve_approve_veto(const CCAVInstance& instance, const ApproveVetoOptions& options) {
  instance.validate();
  const std::size_t m = instance.candidates.size();
  if (m < 3) throw InvalidArgument("approve-veto needs at least 3 candidates");
  if (options.extra_offset < 0) throw InvalidArgument("approve-veto offset must be non-negative");
  const std::uint32_t p = instance.preferred;

  // Evaluate as (1, 0, ..., 0, -1): +1 to the top candidate, -1 to the bottom one.
  std::vector<Integer> weights(m, 0);
  weights[0] = 1;
  weights[m - 1] = -1;
  std::vector<Rational> coefficients(weights.begin(), weights.end());
  const ScoringVector vector(std::move(coefficients));
  std::vector<Integer> score(m, 0);
  detail::add_integer_scores(instance.registered, weights, score);

  const auto& entries = instance.unregistered.entries();
  std::vector<std::size_t> first, middle;
  std::uint64_t first_total = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].order.front() == p) {
      first.push_back(i);
      first_total += entries[i].count;
    } else if (entries[i].order.back() != p) {
      middle.push_back(i);
    }
  }

  // Votes ranking p first are always worth adding. With more of them than
  // the budget, take each time the one whose last candidate currently scores
  // highest (ties by candidate id, then by pool order).
  VoteMultiset witness;
  std::uint64_t budget = instance.budget;
  if (first_total <= budget) {
    for (auto i : first) {
      witness.add(entries[i].order, entries[i].count);
      score[p] += Integer(std::to_string(entries[i].count));
      score[entries[i].order.back()] -= Integer(std::to_string(entries[i].count));
    }
    budget -= first_total;
  } else {
    std::vector<std::uint64_t> left(entries.size(), 0);
    for (auto i : first) left[i] = entries[i].count;
    for (std::uint64_t step = 0; step < budget; ++step) {
      std::size_t best = entries.size();
      for (auto i : first) {
        if (left[i] == 0) continue;
        if (best == entries.size()) {
          best = i;
          continue;
        }
        const auto c = entries[i].order.back(), b = entries[best].order.back();
        if (score[c] > score[b] || (score[c] == score[b] && instance.candidates.name(c) < instance.candidates.name(b)))
          best = i;
      }
      --left[best];
      witness.add(entries[best].order);
      score[p] += 1;
      score[entries[best].order.back()] -= 1;
    }
    budget = 0;
  }

  bool leading = true;
  for (const auto& s : score)
    if (s > score[p]) leading = false;
  if (leading) return detail::certified(instance, vector, std::move(witness), kMethod);
  if (budget == 0) return detail::rejected(kMethod);

  // Each remaining useful vote c2 > ... > c1 (p in between) moves one point
  // from c1 to c2 at cost one: a flow network on the rivals. A shift D keeps
  // every capacity non-negative; comparisons are translation invariant.
  Integer lowest = 0;
  for (const auto& s : score) lowest = std::min(lowest, s);
  const Integer shift = -lowest + Integer(std::to_string(budget)) + options.extra_offset;
  const std::size_t source = m, sink = m + 1;
  FlowNetwork net;
  net.node_count = m + 2;
  net.source = source;
  net.sink = sink;
  std::int64_t total = 0;
  const std::int64_t sink_cap = detail::to_int64(score[p] + shift);
  for (std::uint32_t c = 0; c < m; ++c) {
    if (c == p) continue;
    const std::int64_t cap = detail::to_int64(score[c] + shift);
    net.add_arc(source, c, cap, 0);
    net.add_arc(c, sink, sink_cap, 0);
    total += cap;
  }
  struct Transfer {
    std::size_t arc;
    std::vector<std::size_t> entries;
  };
  std::vector<std::vector<std::size_t>> by_pair(m * m);
  std::vector<std::uint64_t> pair_count(m * m, 0);
  for (auto i : middle) {
    const auto top = entries[i].order.front(), bottom = entries[i].order.back();
    by_pair[bottom * m + top].push_back(i);
    pair_count[bottom * m + top] += entries[i].count;
  }
  std::vector<Transfer> transfers;
  for (std::size_t key = 0; key < m * m; ++key) {
    if (pair_count[key] == 0) continue;
    const std::uint64_t usable = std::min(pair_count[key], budget);
    transfers.push_back({net.add_arc(key / m, key % m, static_cast<std::int64_t>(usable), 1), by_pair[key]});
  }
  const auto flow = min_cost_flow(net, total);
  if (!flow || flow->cost > static_cast<std::int64_t>(budget)) return detail::rejected(kMethod);
  for (const auto& t : transfers) {
    const auto units = flow->arc_flow[t.arc];
    if (units > 0) detail::take_from(instance, t.entries, static_cast<std::uint64_t>(units), witness);
  }
  return detail::certified(instance, vector, std::move(witness), kMethod);
}

}  // namespace psr
