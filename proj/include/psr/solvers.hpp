#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "psr/core.hpp"
#include "psr/generators.hpp"

namespace psr {

struct SolveResult {
  bool decision = false;
  /// Present iff `decision`; a sub-multiset of the unregistered votes of size
  /// at most the budget that makes the preferred candidate a co-winner.
  std::optional<VoteMultiset> witness;
  std::string method;
};

struct BruteForceLimits {
  std::size_t max_distinct_votes = 20;
  std::uint64_t max_subsets = 10'000'000;
};

/// Exhaustive search over sub-multisets of the unregistered votes in
/// nondecreasing size; the first witness found is returned, so witnesses are
/// minimum-size. Throws BoundExceeded when the search space exceeds `limits`.
SolveResult solve_brute_force(const CCAVInstance& instance, const ScoringVector& vector,
                              const BruteForceLimits& limits = {});

/// Number of sub-multisets of the unregistered votes with at most `budget`
/// elements, saturated at `cap`.
std::uint64_t count_submultisets(const VoteMultiset& pool, std::uint64_t budget, std::uint64_t cap);

/// k-approval, k in {1, 2, 3}.
SolveResult solve_k_approval(const CCAVInstance& instance, unsigned approvals);

/// k-veto, k in {1, 2}.
SolveResult solve_k_veto(const CCAVInstance& instance, unsigned vetoes);

/// (alpha, beta, 0, ..., 0) with alpha >= beta >= 0.
SolveResult solve_two_top(const CCAVInstance& instance, const Rational& alpha, const Rational& beta);

struct ApproveVetoOptions {
  /// Added on top of the minimal offset that makes all flow capacities
  /// non-negative. The decision must not depend on it.
  std::int64_t extra_offset = 0;
};

/// (2, 1, ..., 1, 0), m >= 3.
SolveResult solve_approve_veto(const CCAVInstance& instance, const ApproveVetoOptions& options = {});

enum class SolveMethod { Auto, BruteForce, ThreeApproval, OneVeto, TwoVeto, TwoTop, ApproveVeto };

std::string_view method_name(SolveMethod method);
SolveMethod method_from_name(std::string_view name);

/// Solves CCAV under expand(spec, |candidates|). Auto dispatches polynomial
/// classifications to their algorithm (when the expanded vector at this
/// length matches the case's canonical shape) and everything else to brute
/// force. A named algorithm whose shape does not match the expanded vector
/// throws InvalidArgument.
SolveResult solve(const CCAVInstance& instance, const GeneratorSpec& spec, SolveMethod method = SolveMethod::Auto,
                  const BruteForceLimits& limits = {});

}  // namespace psr
