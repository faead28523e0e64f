#include <algorithm>
#include <map>
#include <string>

#include "bmatching.hpp"
#include "psr/error.hpp"
#include "psr/solvers.hpp"
#include "solver_support.hpp"

namespace psr {

namespace {

ScoringVector to_vector(const std::vector<Integer>& weights) {
  std::vector<Rational> coefficients(weights.begin(), weights.end());
  return ScoringVector(std::move(coefficients));
}

std::vector<Integer> base_scores(const CCAVInstance& instance, const std::vector<Integer>& weights) {
  std::vector<Integer> scores(instance.candidates.size(), 0);
  detail::add_integer_scores(instance.registered, weights, scores);
  return scores;
}

bool leads(const std::vector<Integer>& scores, std::uint32_t p) {
  for (const auto& s : scores)
    if (s > scores[p]) return false;
  return true;
}

// Unregistered votes grouped by the rivals they touch (ordered candidate
// tuple), with the entries realizing each group.
struct Group {
  std::vector<std::size_t> entries;
  std::uint64_t count = 0;
};
using Groups = std::map<std::vector<std::uint32_t>, Group>;

// Groups votes whose window [from, from+width) of positions contains p; the key is
// the other candidates in that window, sorted.
Groups group_by_window(const CCAVInstance& instance, std::size_t from, std::size_t width, bool want_p) {
  Groups groups;
  const auto& entries = instance.unregistered.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& order = entries[i].order;
    std::vector<std::uint32_t> others;
    bool has_p = false;
    for (std::size_t pos = from; pos < from + width; ++pos) {
      if (order[pos] == instance.preferred) has_p = true;
      else others.push_back(order[pos]);
    }
    if (has_p != want_p) continue;
    std::sort(others.begin(), others.end());
    auto& g = groups[others];
    g.entries.push_back(i);
    g.count += entries[i].count;
  }
  return groups;
}

SolveResult approval_by_pairs(const CCAVInstance& instance, const std::vector<Integer>& scores,
                              const ScoringVector& vector, const std::string& method) {
  // 3-approval: each p-approving vote raises two rivals by one; choose t votes
  // such that no rival exceeds s_p + t, i.e. a b-matching of size t.
  const std::uint32_t p = instance.preferred;
  const std::size_t m = instance.candidates.size();
  const Groups groups = group_by_window(instance, 0, 3, true);
  std::vector<const Groups::value_type*> index;
  std::uint64_t total = 0;
  for (const auto& g : groups) {
    index.push_back(&g);
    total += g.second.count;
  }
  const std::uint64_t top = std::min(instance.budget, total);
  for (std::uint64_t t = 1; t <= top; ++t) {
    std::vector<std::uint64_t> caps(m, 0);
    bool feasible = true;
    for (std::uint32_t c = 0; c < m; ++c) {
      if (c == p) continue;
      const Integer cap = scores[p] + Integer(std::to_string(t)) - scores[c];
      if (cap < 0) {
        feasible = false;
        break;
      }
      caps[c] = cap > Integer(std::to_string(t)) ? t : cap.get_ui();
    }
    if (!feasible) continue;
    std::vector<detail::Edge> edges;
    std::vector<std::size_t> edge_group;
    for (std::size_t gi = 0; gi < index.size(); ++gi) {
      const auto& key = index[gi]->first;
      const std::uint64_t copies = std::min(index[gi]->second.count, t);
      for (std::uint64_t r = 0; r < copies; ++r) {
        edges.push_back({key[0], key[1]});
        edge_group.push_back(gi);
      }
    }
    const auto chosen = detail::max_b_matching(caps, edges);
    if (chosen.size() < t) continue;
    std::vector<std::uint64_t> use(index.size(), 0);
    for (std::size_t i = 0; i < t; ++i) ++use[edge_group[chosen[i]]];
    VoteMultiset witness;
    for (std::size_t gi = 0; gi < index.size(); ++gi)
      if (use[gi] > 0) detail::take_from(instance, index[gi]->second.entries, use[gi], witness);
    return detail::certified(instance, vector, std::move(witness), method);
  }
  return detail::rejected(method);
}

}  // namespace

SolveResult solve_k_approval(const CCAVInstance& instance, unsigned approvals) {
  if (approvals < 1 || approvals > 3) throw InvalidArgument("k-approval solver supports k in {1, 2, 3}");
  instance.validate();
  const std::string method = "k-approval-" + std::to_string(approvals);
  const std::size_t m = instance.candidates.size();
  const std::uint32_t p = instance.preferred;
  std::vector<Integer> w(m, 0);
  for (std::size_t i = 0; i < std::min<std::size_t>(approvals, m); ++i) w[i] = 1;
  const ScoringVector vector = to_vector(w);
  const auto scores = base_scores(instance, w);
  // m <= approvals makes the vector trivial, so p already wins.
  if (leads(scores, p)) return detail::certified(instance, vector, {}, method);

  if (approvals == 1) {
    const Groups groups = group_by_window(instance, 0, 1, true);
    VoteMultiset witness;
    if (!groups.empty()) {
      const auto& g = groups.begin()->second;
      detail::take_from(instance, g.entries, std::min(instance.budget, g.count), witness);
    }
    if (!preferred_wins(instance, witness, vector)) return detail::rejected(method);
    return detail::certified(instance, vector, std::move(witness), method);
  }

  if (approvals == 3) return approval_by_pairs(instance, scores, vector, method);

  // 2-approval: each p-approving vote raises exactly one rival (its partner).
  const Groups groups = group_by_window(instance, 0, 2, true);
  std::uint64_t total = 0;
  for (const auto& g : groups) total += g.second.count;
  const std::uint64_t top = std::min(instance.budget, total);
  for (std::uint64_t t = 1; t <= top; ++t) {
    const Integer final_p = scores[p] + Integer(std::to_string(t));
    bool feasible = true;
    for (std::uint32_t c = 0; c < m && feasible; ++c)
      if (c != p && scores[c] > final_p) feasible = false;
    if (!feasible) continue;
    std::vector<std::pair<const Group*, std::uint64_t>> picks;
    std::uint64_t remaining = t;
    for (const auto& [key, g] : groups) {
      if (remaining == 0) break;
      const Integer cap = final_p - scores[key[0]];
      const std::uint64_t x = std::min({g.count, remaining, cap > Integer(std::to_string(t)) ? t : cap.get_ui()});
      if (x > 0) picks.emplace_back(&g, x);
      remaining -= x;
    }
    if (remaining > 0) continue;
    VoteMultiset witness;
    for (const auto& [g, x] : picks) detail::take_from(instance, g->entries, x, witness);
    return detail::certified(instance, vector, std::move(witness), method);
  }
  return detail::rejected(method);
}

SolveResult solve_k_veto(const CCAVInstance& instance, unsigned vetoes) {
  if (vetoes < 1 || vetoes > 2) throw InvalidArgument("k-veto solver supports k in {1, 2}");
  instance.validate();
  const std::string method = "k-veto-" + std::to_string(vetoes);
  const std::size_t m = instance.candidates.size();
  const std::uint32_t p = instance.preferred;
  std::vector<Integer> w(m, 0);
  for (std::size_t i = 0; i + vetoes < m; ++i) w[i] = 1;
  const ScoringVector vector = to_vector(w);
  const auto scores = base_scores(instance, w);
  if (leads(scores, p)) return detail::certified(instance, vector, {}, method);
  if (m <= vetoes) return detail::rejected(method);  // unreachable: trivial vector

  // A vote vetoing only rivals lowers each vetoed rival by one relative to p;
  // every other vote helps nobody against p.
  std::vector<std::uint64_t> need(m, 0);
  std::uint64_t total_need = 0;
  for (std::uint32_t c = 0; c < m; ++c) {
    if (c == p || scores[c] <= scores[p]) continue;
    const Integer gap = scores[c] - scores[p];
    if (gap > Integer(std::to_string(instance.budget))) return detail::rejected(method);
    need[c] = gap.get_ui();
    total_need += need[c];
  }
  const Groups groups = group_by_window(instance, m - vetoes, vetoes, false);
  std::vector<std::uint64_t> avail(m, 0);
  for (const auto& [key, g] : groups)
    for (auto c : key) avail[c] += g.count;
  for (std::uint32_t c = 0; c < m; ++c)
    if (avail[c] < need[c]) return detail::rejected(method);

  if (vetoes == 1) {
    if (total_need > instance.budget) return detail::rejected(method);
    VoteMultiset witness;
    for (const auto& [key, g] : groups)
      if (need[key[0]] > 0) detail::take_from(instance, g.entries, need[key[0]], witness);
    return detail::certified(instance, vector, std::move(witness), method);
  }

  // 2-veto: minimum b-edge cover with b = need, via Gallai's identity
  // rho_b = sum(b) - nu_b. The matching plus a greedy completion attains it.
  std::vector<const Groups::value_type*> index;
  std::vector<detail::Edge> edges;
  std::vector<std::size_t> edge_group;
  for (const auto& g : groups) {
    const std::size_t gi = index.size();
    index.push_back(&g);
    const auto& key = g.first;
    const std::uint64_t copies = std::min({g.second.count, need[key[0]], need[key[1]]});
    for (std::uint64_t r = 0; r < copies; ++r) {
      edges.push_back({key[0], key[1]});
      edge_group.push_back(gi);
    }
  }
  const auto chosen = detail::max_b_matching(need, edges);
  if (total_need - chosen.size() > instance.budget) return detail::rejected(method);
  std::vector<std::uint64_t> use(index.size(), 0);
  std::vector<std::uint64_t> deficit = need;
  for (auto e : chosen) {
    ++use[edge_group[e]];
    --deficit[edges[e].u];
    --deficit[edges[e].v];
  }
  for (std::uint32_t c = 0; c < m; ++c) {
    while (deficit[c] > 0) {
      std::size_t best = index.size();
      for (std::size_t gi = 0; gi < index.size(); ++gi) {
        const auto& key = index[gi]->first;
        if (use[gi] >= index[gi]->second.count || (key[0] != c && key[1] != c)) continue;
        const auto other = key[0] == c ? key[1] : key[0];
        if (best == index.size() || deficit[other] > 0) best = gi;
        if (deficit[other] > 0) break;
      }
      if (best == index.size()) throw InternalError("2-veto: edge cover completion ran out of votes");
      ++use[best];
      for (auto v : index[best]->first)
        if (deficit[v] > 0) --deficit[v];
    }
  }
  VoteMultiset witness;
  for (std::size_t gi = 0; gi < index.size(); ++gi)
    if (use[gi] > 0) detail::take_from(instance, index[gi]->second.entries, use[gi], witness);
  return detail::certified(instance, vector, std::move(witness), method);
}

}  // namespace psr
