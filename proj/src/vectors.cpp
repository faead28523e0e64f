#include "psr/vectors.hpp"

#include <algorithm>
#include <limits>

#include "psr/error.hpp"

namespace psr {

ScoringVector NormalizedVector::to_scoring_vector() const {
  std::vector<Rational> v;
  v.reserve(coefficients_.size());
  for (const auto& c : coefficients_) v.emplace_back(c);
  return ScoringVector(std::move(v));
}

NormalizedVector normalize(const ScoringVector& vector) {
  const Integer scale = denominator_lcm(vector.coefficients());
  const Rational last = vector[vector.size() - 1];
  std::vector<Integer> shifted;
  shifted.reserve(vector.size());
  Integer g = 0;
  for (const auto& c : vector.coefficients()) {
    Rational scaled = (c - last) * scale;
    Integer value = scaled.get_num();  // denominator is 1 after scaling
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
    shifted.push_back(std::move(value));
  }
  if (g > 1) {
    for (auto& c : shifted) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return NormalizedVector(std::move(shifted));
}

bool equivalent(const ScoringVector& a, const ScoringVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("cannot compare scoring vectors of different lengths");
  return normalize(a) == normalize(b);
}

namespace {

std::uint64_t to_count(const Integer& value) {
  if (value < 1 || !value.fits_ulong_p()) throw InternalError("vote multiplicity out of range");
  return value.get_ui();
}

// Candidates: a = 0, b = 1, d_i = i + 1. Positions listed in `fixed` are
// pinned; every other position takes the unused candidates in index order.
Ranking fill_ranking(std::size_t m, const std::vector<std::pair<std::size_t, std::uint32_t>>& fixed) {
  Ranking order(m, std::numeric_limits<std::uint32_t>::max());
  std::vector<char> used(m);
  for (auto [pos, cand] : fixed) {
    order[pos] = cand;
    used[cand] = 1;
  }
  std::uint32_t next = 0;
  for (auto& slot : order) {
    if (slot != std::numeric_limits<std::uint32_t>::max()) continue;
    while (used[next]) ++next;
    slot = next;
    used[next] = 1;
  }
  return order;
}

// Both vectors normalized, distinct, nontrivial, m >= 3.
VoteMultiset padding_construction(const NormalizedVector& A, const NormalizedVector& B) {
  const std::size_t m = A.size();
  // Align first coefficients.
  std::vector<Integer> beta(m), beta_prime(m);
  for (std::size_t i = 0; i < m; ++i) {
    beta[i] = A[i] * B[0];
    beta_prime[i] = B[i] * A[0];
  }
  std::size_t gamma = 0;
  while (gamma < m && beta[gamma] == beta_prime[gamma]) ++gamma;
  if (gamma == 0 || gamma >= m - 1) throw InternalError("aligned vectors differ at an impossible position");
  // Make `beta` the vector that is larger at gamma.
  if (beta[gamma] < beta_prime[gamma]) std::swap(beta, beta_prime);

  const Integer H = 2 * beta[0];
  VoteMultiset votes;
  const std::size_t dummies = m - 2;
  for (std::size_t i = 0; i < dummies; ++i) {
    // s_i: the dummies rotated to start at d_{i+1}.
    Ranking tail;
    for (std::size_t t = 0; t < dummies; ++t) tail.push_back(static_cast<std::uint32_t>(2 + (i + t) % dummies));
    Ranking ab{0, 1}, ba{1, 0};
    ab.insert(ab.end(), tail.begin(), tail.end());
    ba.insert(ba.end(), tail.begin(), tail.end());
    votes.add(std::move(ab), to_count(H));
    votes.add(std::move(ba), to_count(H));
  }
  votes.add(fill_ranking(m, {{0, 0}, {m - 1, 1}}), to_count(beta[gamma]));
  votes.add(fill_ranking(m, {{gamma, 1}, {m - 1, 0}}), to_count(beta[0]));
  return votes;
}

}  // namespace

std::optional<Election> distinguish(const ScoringVector& a, const ScoringVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("cannot distinguish scoring vectors of different lengths");
  const auto A = normalize(a);
  const auto B = normalize(b);
  if (A == B) return std::nullopt;

  const std::size_t m = a.size();
  std::vector<std::string> names{"a", "b"};
  for (std::size_t i = 1; i + 2 <= m; ++i) names.push_back("d" + std::to_string(i));
  Election election{CandidateList(std::move(names)), {}};

  if (A.trivial() || B.trivial()) {
    // Under the nontrivial vector the last-ranked candidate cannot tie the first.
    election.votes.add(fill_ranking(m, {}), 1);
  } else {
    election.votes = padding_construction(A, B);
  }

  if (winners(evaluate(election, a)) == winners(evaluate(election, b))) {
    throw InternalError("distinguishing election does not separate the vectors");
  }
  return election;
}

void check_family(const VectorFamily& family) {
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (family[i].size() != family[i - 1].size() + 1) {
      throw InvalidArgument("vector family lengths must increase by exactly one");
    }
  }
}

ScoringVector delete_position(const ScoringVector& vector, std::size_t position) {
  auto c = vector.coefficients();
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(position));
  return ScoringVector(std::move(c));
}

bool check_pure(const VectorFamily& family) {
  check_family(family);
  for (std::size_t i = 1; i < family.size(); ++i) {
    const auto& longer = family[i];
    bool found = false;
    for (std::size_t pos = 0; pos < longer.size() && !found; ++pos) {
      found = delete_position(longer, pos) == family[i - 1];
    }
    if (!found) return false;
  }
  return true;
}

bool check_flexible_pure(const VectorFamily& family) {
  check_family(family);
  for (std::size_t i = 1; i < family.size(); ++i) {
    const auto& longer = family[i];
    const auto target = normalize(family[i - 1]);
    bool found = false;
    for (std::size_t pos = 0; pos < longer.size() && !found; ++pos) {
      found = normalize(delete_position(longer, pos)) == target;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace psr
