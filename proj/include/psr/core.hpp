#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "psr/rational.hpp"

namespace psr {

/// Ordered list of unique, non-empty candidate ids. Votes refer to
/// candidates by their index in this list.
class CandidateList {
 public:
  CandidateList() = default;
  explicit CandidateList(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InvalidArgument for unknown ids.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const CandidateList& a, const CandidateList& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A strict linear order as candidate indices, most preferred first.
using Ranking = std::vector<std::uint32_t>;

struct WeightedVote {
  Ranking order;
  std::uint64_t count = 1;
};

/// Multiset of votes stored as (vote, multiplicity) pairs. Identical
/// rankings are merged; entries keep first-insertion order.
class VoteMultiset {
 public:
  VoteMultiset() = default;

  void add(Ranking order, std::uint64_t count = 1);
  void add_all(const VoteMultiset& other);

  const std::vector<WeightedVote>& entries() const { return entries_; }
  std::size_t distinct() const { return entries_.size(); }
  /// Total number of votes, i.e. the sum of multiplicities.
  std::uint64_t size() const { return total_; }
  bool empty() const { return entries_.empty(); }
  std::uint64_t count_of(const Ranking& order) const;

  /// Multiset equality (insertion order is ignored).
  friend bool operator==(const VoteMultiset& a, const VoteMultiset& b);

 private:
  std::vector<WeightedVote> entries_;
  std::map<Ranking, std::size_t> index_;
  std::uint64_t total_ = 0;
};

/// Non-empty, non-increasing sequence of exact rational coefficients.
class ScoringVector {
 public:
  explicit ScoringVector(std::vector<Rational> coefficients);

  std::size_t size() const { return coefficients_.size(); }
  /// Coefficient awarded to the candidate ranked at 0-based `position`.
  const Rational& operator[](std::size_t position) const { return coefficients_[position]; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool trivial() const { return coefficients_.front() == coefficients_.back(); }

  friend bool operator==(const ScoringVector& a, const ScoringVector& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  std::vector<Rational> coefficients_;
};

ScoringVector make_vector(std::initializer_list<long> coefficients);

using ScoreMap = std::map<std::string, Rational>;

struct Election {
  CandidateList candidates;
  VoteMultiset votes;
};

/// Constructive control by adding voters: can at most `budget` votes from
/// `unregistered` be added to `registered` so that `preferred` is a co-winner?
struct CCAVInstance {
  CandidateList candidates;
  VoteMultiset registered;
  VoteMultiset unregistered;
  std::uint32_t preferred = 0;
  std::uint64_t budget = 0;

  /// Throws InvalidArgument when a vote is not a permutation of the
  /// candidates or `preferred` is out of range.
  void validate() const;
};

/// Throws InvalidArgument unless every vote ranks each of `candidate_count`
/// candidates exactly once.
void check_votes(std::size_t candidate_count, const VoteMultiset& votes);

/// Index-based score tally; `scores` must have one slot per candidate and is
/// accumulated into, not reset.
void accumulate_scores(const VoteMultiset& votes, const ScoringVector& vector, std::span<Rational> scores);

std::vector<Rational> tally(std::size_t candidate_count, const VoteMultiset& votes, const ScoringVector& vector);

ScoreMap evaluate(const CandidateList& candidates, const VoteMultiset& votes, const ScoringVector& vector);
inline ScoreMap evaluate(const Election& election, const ScoringVector& vector) {
  return evaluate(election.candidates, election.votes, vector);
}

/// All candidates attaining the maximum score.
std::set<std::string> winners(const ScoreMap& scores);
std::vector<std::uint32_t> winner_indices(std::span<const Rational> scores);

/// True iff `candidate` attains the maximum of `scores`.
bool is_cowinner(std::span<const Rational> scores, std::uint32_t candidate);

/// Evaluates R ∪ added under `vector` and reports whether the preferred
/// candidate is a co-winner.
bool preferred_wins(const CCAVInstance& instance, const VoteMultiset& added, const ScoringVector& vector);

/// True iff `subset` is a sub-multiset of `pool`.
bool is_submultiset(const VoteMultiset& subset, const VoteMultiset& pool);

}  // namespace psr
