#include "solver_support.hpp"

#include <limits>

#include "psr/error.hpp"

namespace psr::detail {

void add_integer_scores(const VoteMultiset& votes, const std::vector<Integer>& weights, std::vector<Integer>& scores) {
  for (const auto& e : votes.entries()) {
    const Integer count{static_cast<unsigned long>(e.count)};
    for (std::size_t pos = 0; pos < e.order.size(); ++pos) {
      if (weights[pos] != 0) scores[e.order[pos]] += count * weights[pos];
    }
  }
}

std::vector<Integer> integer_vector(std::initializer_list<long> head, long fill, std::size_t m) {
  std::vector<Integer> out(m, Integer(fill));
  std::size_t i = 0;
  for (long v : head) {
    if (i >= m) break;
    out[i++] = v;
  }
  return out;
}

SolveResult certified(const CCAVInstance& instance, const ScoringVector& vector, VoteMultiset witness,
                      std::string method) {
  if (witness.size() > instance.budget) throw InternalError(method + ": witness exceeds the budget");
  if (!is_submultiset(witness, instance.unregistered))
    throw InternalError(method + ": witness is not drawn from the unregistered votes");
  if (!preferred_wins(instance, witness, vector))
    throw InternalError(method + ": witness does not make the preferred candidate a winner");
  return SolveResult{true, std::move(witness), std::move(method)};
}

SolveResult rejected(std::string method) { return SolveResult{false, std::nullopt, std::move(method)}; }

void take_from(const CCAVInstance& instance, const std::vector<std::size_t>& entries, std::uint64_t count,
               VoteMultiset& out) {
  const auto& pool = instance.unregistered.entries();
  for (std::size_t idx : entries) {
    if (count == 0) return;
    const std::uint64_t n = std::min(count, pool[idx].count);
    out.add(pool[idx].order, n);
    count -= n;
  }
  if (count != 0) throw InternalError("vote group exhausted while building a witness");
}

namespace {

// Depth-first search for a sub-multiset of exactly `target` votes. Scores
// are relative to nothing in particular; only the comparison with p matters.
template <class Score>
class SubsetSearch {
 public:
  SubsetSearch(const CCAVInstance& instance, const std::vector<Score>& weights, std::vector<Score> base)
      : instance_(instance), weights_(weights), scores_(std::move(base)) {
    const auto& entries = instance.unregistered.entries();
    suffix_.assign(entries.size() + 1, 0);
    for (std::size_t i = entries.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + entries[i].count;
    take_.assign(entries.size(), 0);
  }

  bool run(std::uint64_t target) { return dfs(0, target); }

  VoteMultiset witness() const {
    VoteMultiset out;
    const auto& entries = instance_.unregistered.entries();
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (take_[i] > 0) out.add(entries[i].order, take_[i]);
    return out;
  }

 private:
  bool wins() const {
    const Score& sp = scores_[instance_.preferred];
    for (const auto& s : scores_)
      if (s > sp) return false;
    return true;
  }

  void apply(const Ranking& order, long sign) {
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (sign > 0) scores_[order[pos]] += weights_[pos];
      else scores_[order[pos]] -= weights_[pos];
    }
  }

  bool dfs(std::size_t index, std::uint64_t remaining) {
    if (remaining == 0) return wins();
    if (suffix_[index] < remaining) return false;
    const auto& entry = instance_.unregistered.entries()[index];
    const std::uint64_t most = std::min(entry.count, remaining);
    // Taking fewer copies first keeps the search order lexicographic in the
    // (reversed) take vector, which is what makes witnesses deterministic.
    std::uint64_t taken = 0;
    for (;;) {
      take_[index] = taken;
      if (dfs(index + 1, remaining - taken)) return true;
      if (taken == most) break;
      apply(entry.order, +1);
      ++taken;
    }
    for (std::uint64_t t = 0; t < taken; ++t) apply(entry.order, -1);
    take_[index] = 0;
    return false;
  }

  const CCAVInstance& instance_;
  const std::vector<Score>& weights_;
  std::vector<Score> scores_;
  std::vector<std::uint64_t> suffix_;
  std::vector<std::uint64_t> take_;
};

template <class Score>
std::optional<VoteMultiset> search_with(const CCAVInstance& instance, const std::vector<Score>& weights,
                                        std::vector<Score> base, std::uint64_t max_size) {
  SubsetSearch<Score> search(instance, weights, std::move(base));
  const std::uint64_t top = std::min(max_size, instance.unregistered.size());
  for (std::uint64_t size = 0; size <= top; ++size)
    if (search.run(size)) return search.witness();
  return std::nullopt;
}

}  // namespace

bool fits_int64(const Integer& value) {
  return value >= Integer(std::to_string(std::numeric_limits<std::int64_t>::min())) &&
         value <= Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
}

std::int64_t to_int64(const Integer& value) {
  if (!fits_int64(value)) throw InvalidArgument("integer out of 64-bit range: " + value.get_str());
  return std::stoll(value.get_str());
}

std::optional<VoteMultiset> search_submultisets(const CCAVInstance& instance, const std::vector<Integer>& weights,
                                                std::uint64_t max_size) {
  const std::size_t m = instance.candidates.size();
  std::vector<Integer> base(m, 0);
  add_integer_scores(instance.registered, weights, base);

  // Fast path: every reachable score stays far from the int64 limits.
  Integer bound = 0;
  for (const auto& s : base)
    if (abs(s) > bound) bound = abs(s);
  Integer wmax = 0;
  for (const auto& w : weights)
    if (abs(w) > wmax) wmax = abs(w);
  const Integer reach = bound + wmax * Integer(std::to_string(instance.unregistered.size()));
  if (reach < Integer("1000000000000000000")) {
    std::vector<std::int64_t> w64, b64;
    for (const auto& w : weights) w64.push_back(to_int64(w));
    for (const auto& s : base) b64.push_back(to_int64(s));
    return search_with<std::int64_t>(instance, w64, std::move(b64), max_size);
  }
  return search_with<Integer>(instance, weights, std::move(base), max_size);
}

}  // namespace psr::detail
