#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psr/core.hpp"
#include "psr/solvers.hpp"

namespace psr::detail {

/// Scores of `votes` under an integer vector, accumulated into `scores`.
void add_integer_scores(const VoteMultiset& votes, const std::vector<Integer>& weights, std::vector<Integer>& scores);

std::vector<Integer> integer_vector(std::initializer_list<long> head, long fill, std::size_t m);

/// Verifies `witness` (sub-multiset of U, within budget, makes p a
/// co-winner under `vector`) and wraps it; InternalError otherwise.
SolveResult certified(const CCAVInstance& instance, const ScoringVector& vector, VoteMultiset witness,
                      std::string method);

SolveResult rejected(std::string method);

/// Picks `count` votes from the given U entry indices, in order.
void take_from(const CCAVInstance& instance, const std::vector<std::size_t>& entries, std::uint64_t count,
               VoteMultiset& out);

/// First witness of size <= max_size over sub-multisets of `instance.unregistered`,
/// searched in nondecreasing size; no enumeration bound.
std::optional<VoteMultiset> search_submultisets(const CCAVInstance& instance, const std::vector<Integer>& weights,
                                                std::uint64_t max_size);

bool fits_int64(const Integer& value);
std::int64_t to_int64(const Integer& value);

}  // namespace psr::detail
