#pragma once

#include <optional>
#include <vector>

#include "psr/core.hpp"

namespace psr {

/// Canonical representative of a winner-set equivalence class: non-negative
/// integers, non-increasing, last coefficient 0, and the gcd of the nonzero
/// coefficients is 1 (or the vector is all zero).
class NormalizedVector {
 public:
  NormalizedVector() = default;
  explicit NormalizedVector(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {}

  std::size_t size() const { return coefficients_.size(); }
  const Integer& operator[](std::size_t position) const { return coefficients_[position]; }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  bool trivial() const { return coefficients_.empty() || coefficients_.front() == 0; }

  ScoringVector to_scoring_vector() const;

  friend bool operator==(const NormalizedVector&, const NormalizedVector&) = default;

 private:
  std::vector<Integer> coefficients_;
};

/// Ordered scoring vectors of consecutive lengths (each one longer than the
/// previous), as produced by a generator for a range of candidate counts.
using VectorFamily = std::vector<ScoringVector>;

NormalizedVector normalize(const ScoringVector& vector);

/// Same winner sets on every election. Throws InvalidArgument on a length mismatch.
bool equivalent(const ScoringVector& a, const ScoringVector& b);

/// Builds an election over candidates a, b, d1..d(m-2) whose winner sets
/// differ under `a` and `b`, or nullopt if the vectors are equivalent. The
/// returned election has been re-evaluated under both vectors; a construction
/// that fails that check raises InternalError.
std::optional<Election> distinguish(const ScoringVector& a, const ScoringVector& b);

/// Throws InvalidArgument unless lengths increase by exactly one.
void check_family(const VectorFamily& family);

/// Every vector arises from its predecessor by inserting one coefficient.
bool check_pure(const VectorFamily& family);

/// Every vector has a single-coefficient deletion equivalent to its predecessor.
bool check_flexible_pure(const VectorFamily& family);

/// `vector` with the coefficient at 0-based `position` removed.
ScoringVector delete_position(const ScoringVector& vector, std::size_t position);

}  // namespace psr
