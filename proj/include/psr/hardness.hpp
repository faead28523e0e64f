#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psr/core.hpp"
#include "psr/generators.hpp"
#include "psr/solvers.hpp"

namespace psr {

/// Three-dimensional matching: disjoint X, Y, Z of equal size k and triples
/// M, each triple given as indices into (x, y, z).
struct ThreeDMInstance {
  std::vector<std::string> x;
  std::vector<std::string> y;
  std::vector<std::string> z;
  std::vector<std::array<std::uint32_t, 3>> triples;

  std::size_t k() const { return x.size(); }
  /// Throws InvalidArgument on unequal sizes, k = 0, shared or repeated
  /// element names, out-of-range or duplicate triples.
  void validate() const;

  friend bool operator==(const ThreeDMInstance&, const ThreeDMInstance&) = default;
};

/// Indices of k pairwise component-disjoint triples.
using Cover = std::vector<std::size_t>;

bool is_cover(const ThreeDMInstance& instance, const Cover& cover);

/// First cover in lexicographic index order, or nullopt. Throws
/// BoundExceeded when |M| > max_triples.
std::optional<Cover> solve_3dm_brute(const ThreeDMInstance& instance, std::size_t max_triples = 24);

/// Random instance with elements x1.., y1.., z1.. and n distinct triples
/// (n <= k^3). Planted instances contain a hidden cover (n >= k).
/// Deterministic in the seed on every platform.
ThreeDMInstance gen_3dm(std::size_t k, std::size_t n, bool planted, std::uint64_t seed);

/// m votes over candidate indices 0..m-1 under which every candidate scores
/// A = sum(vector) except c_i, who scores A + vector[kpos] - vector[lpos], and
/// c_j, who scores A + vector[lpos] - vector[kpos]. All arguments are 0-based.
VoteMultiset transfer_votes(const ScoringVector& vector, std::size_t i, std::size_t j, std::size_t kpos,
                            std::size_t lpos);

struct RealizationResult {
  VoteMultiset votes;
  Rational offset;
};

/// Registered votes realizing relative scores. `targets[c][i]` is the signed
/// multiplier of vector[i] in candidate c's score, for c = 0..m-2; candidate
/// m-1 is the dummy. The result satisfies score(c) = offset + sum_i
/// targets[c][i] * vector[i] and score(c) > score(m-1) + guard * vector[0].
/// The vector must be normalized-shaped: last coefficient 0, first positive.
RealizationResult realize_scores(const ScoringVector& vector, const std::vector<std::vector<Integer>>& targets,
                                 std::uint64_t guard);

enum class ReductionKind { VetoStyle, ApprovalStyle, ThreeCoeff, Case1, Case2Above, Case2Below, Case3, Case4 };

std::string_view reduction_name(ReductionKind kind);

struct ReductionOutput {
  CCAVInstance instance;
  /// Vector the instance is meant to be evaluated under (length |candidates|).
  ScoringVector vector;
  ReductionKind kind;
  /// False when the construction's applicability inequality fails; the
  /// output is then well-formed but its iff-correctness is not claimed.
  bool guaranteed = true;
};

/// m = 6k candidates, one vetoing vote per triple. Needs k >= 2.
ReductionOutput reduce_veto_style(const GeneratorSpec& spec, const ThreeDMInstance& instance);
/// m = 6k candidates, one approving vote per triple. Needs k >= 2.
ReductionOutput reduce_approval_style(const GeneratorSpec& spec, const ThreeDMInstance& instance);
/// Whichever of the two above applies at m = 6k (veto-style preferred).
/// Throws InvalidArgument when neither inequality holds.
ReductionOutput reduce_auto(const GeneratorSpec& spec, const ThreeDMInstance& instance);

/// (alpha, beta, gamma, 0, ..., 0) with alpha >= beta >= gamma > 0, alpha != gamma.
/// Not guaranteed for an empty triple set.
ReductionOutput reduce_three_coeff(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                   const ThreeDMInstance& instance);
/// (a1, a2, a3, a4, ..., a4, a5, 0) with a2 > a4 > 0.
ReductionOutput reduce_case1(const std::array<Rational, 5>& alpha, const ThreeDMInstance& instance);
/// (a1, a2, ..., a2, 0) with a2 > 0 and a1 not in {a2, 2 a2}.
ReductionOutput reduce_case2(const Rational& a1, const Rational& a2, const ThreeDMInstance& instance);
/// (a1, a2, ..., a2, a5, 0) with a1 > a2 > a5.
ReductionOutput reduce_case3(const Rational& a1, const Rational& a2, const Rational& a5,
                             const ThreeDMInstance& instance);
/// (a1, ..., a1, a5, 0) with a1 > a5 > 0.
ReductionOutput reduce_case4(const Rational& a1, const Rational& a5, const ThreeDMInstance& instance);

struct DualCheck {
  bool threedm_positive = false;
  bool ccav_positive = false;
  bool agree() const { return threedm_positive == ccav_positive; }
};

/// Runs both oracles on a reduction. CCAV brute force uses `limits`.
DualCheck dual_check(const ThreeDMInstance& instance, const ReductionOutput& output,
                     const BruteForceLimits& limits = {32, 10'000'000});

}  // namespace psr
