#include "psr/core.hpp"

#include <algorithm>

#include "psr/error.hpp"

namespace psr {

CandidateList::CandidateList(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidArgument("candidate ids must be non-empty");
    if (!index_.emplace(names_[i], i).second) {
      throw InvalidArgument("duplicate candidate id '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> CandidateList::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CandidateList::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidArgument("unknown candidate '" + std::string(name) + "'");
}

void VoteMultiset::add(Ranking order, std::uint64_t count) {
  if (count == 0) throw InvalidArgument("vote multiplicity must be positive");
  total_ += count;
  auto it = index_.find(order);
  if (it != index_.end()) {
    entries_[it->second].count += count;
    return;
  }
  index_.emplace(order, entries_.size());
  entries_.push_back({std::move(order), count});
}

void VoteMultiset::add_all(const VoteMultiset& other) {
  for (const auto& e : other.entries()) add(e.order, e.count);
}

std::uint64_t VoteMultiset::count_of(const Ranking& order) const {
  auto it = index_.find(order);
  return it == index_.end() ? 0 : entries_[it->second].count;
}

bool operator==(const VoteMultiset& a, const VoteMultiset& b) {
  if (a.total_ != b.total_ || a.entries_.size() != b.entries_.size()) return false;
  for (const auto& e : a.entries_) {
    if (b.count_of(e.order) != e.count) return false;
  }
  return true;
}

ScoringVector::ScoringVector(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw InvalidArgument("scoring vector must have at least one coefficient");
  for (auto& a : coefficients_) {
    if (a.get_den() == 0) throw InvalidArgument("scoring vector coefficient has a zero denominator");
    a.canonicalize();
  }
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    if (coefficients_[i] > coefficients_[i - 1]) {
      throw InvalidArgument("scoring vector must be non-increasing (position " + std::to_string(i + 1) + ")");
    }
  }
}

ScoringVector make_vector(std::initializer_list<long> coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (long c : coefficients) v.emplace_back(c);
  return ScoringVector(std::move(v));
}

void check_votes(std::size_t candidate_count, const VoteMultiset& votes) {
  std::vector<char> seen(candidate_count);
  for (const auto& e : votes.entries()) {
    if (e.order.size() != candidate_count) {
      throw InvalidArgument("vote length " + std::to_string(e.order.size()) + " does not match " +
                            std::to_string(candidate_count) + " candidates");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (auto c : e.order) {
      if (c >= candidate_count || seen[c]) throw InvalidArgument("vote is not a permutation of the candidates");
      seen[c] = 1;
    }
  }
}

void CCAVInstance::validate() const {
  if (candidates.empty()) throw InvalidArgument("instance has no candidates");
  if (preferred >= candidates.size()) throw InvalidArgument("preferred candidate out of range");
  check_votes(candidates.size(), registered);
  check_votes(candidates.size(), unregistered);
}

void accumulate_scores(const VoteMultiset& votes, const ScoringVector& vector, std::span<Rational> scores) {
  if (vector.size() != scores.size()) {
    throw InvalidArgument("scoring vector length " + std::to_string(vector.size()) + " does not match " +
                          std::to_string(scores.size()) + " candidates");
  }
  check_votes(scores.size(), votes);
  Rational weight;
  for (const auto& e : votes.entries()) {
    const Rational count{static_cast<unsigned long>(e.count)};
    for (std::size_t pos = 0; pos < e.order.size(); ++pos) {
      weight = vector[pos] * count;
      scores[e.order[pos]] += weight;
    }
  }
}

std::vector<Rational> tally(std::size_t candidate_count, const VoteMultiset& votes, const ScoringVector& vector) {
  std::vector<Rational> scores(candidate_count);
  accumulate_scores(votes, vector, scores);
  return scores;
}

ScoreMap evaluate(const CandidateList& candidates, const VoteMultiset& votes, const ScoringVector& vector) {
  auto scores = tally(candidates.size(), votes, vector);
  ScoreMap out;
  for (std::size_t i = 0; i < candidates.size(); ++i) out.emplace(candidates.name(i), std::move(scores[i]));
  return out;
}

std::set<std::string> winners(const ScoreMap& scores) {
  if (scores.empty()) throw InvalidArgument("winners of an empty score map");
  const Rational* best = &scores.begin()->second;
  for (const auto& [_, s] : scores) {
    if (s > *best) best = &s;
  }
  std::set<std::string> out;
  for (const auto& [c, s] : scores) {
    if (s == *best) out.insert(c);
  }
  return out;
}

std::vector<std::uint32_t> winner_indices(std::span<const Rational> scores) {
  if (scores.empty()) throw InvalidArgument("winners of an empty score map");
  const auto best = *std::max_element(scores.begin(), scores.end());
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] == best) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

bool is_cowinner(std::span<const Rational> scores, std::uint32_t candidate) {
  const auto& mine = scores[candidate];
  return std::none_of(scores.begin(), scores.end(), [&](const Rational& s) { return s > mine; });
}

bool preferred_wins(const CCAVInstance& instance, const VoteMultiset& added, const ScoringVector& vector) {
  std::vector<Rational> scores(instance.candidates.size());
  accumulate_scores(instance.registered, vector, scores);
  accumulate_scores(added, vector, scores);
  return is_cowinner(scores, instance.preferred);
}

bool is_submultiset(const VoteMultiset& subset, const VoteMultiset& pool) {
  return std::all_of(subset.entries().begin(), subset.entries().end(),
                     [&](const WeightedVote& e) { return pool.count_of(e.order) >= e.count; });
}

}  // namespace psr
