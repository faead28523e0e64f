#include <doctest.h>

#include <functional>
#include <random>

#include "psr/error.hpp"
#include "psr/vectors.hpp"
#include "support.hpp"

using namespace psr;
using psr::testing::frac;
using psr::testing::uniform;

namespace {

NormalizedVector ints(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return NormalizedVector(v);
}

ScoringVector rationals(std::vector<Rational> c) { return ScoringVector(std::move(c)); }

// Every election with up to `max_votes` ballots over m candidates.
void for_each_election(std::size_t m, std::size_t max_votes, const std::function<void(const VoteMultiset&)>& f) {
  std::vector<Ranking> all;
  Ranking r(m);
  std::iota(r.begin(), r.end(), 0u);
  do all.push_back(r);
  while (std::next_permutation(r.begin(), r.end()));
  std::function<void(std::size_t, std::size_t, VoteMultiset&)> rec = [&](std::size_t from, std::size_t left,
                                                                         VoteMultiset& votes) {
    f(votes);
    if (left == 0) return;
    for (std::size_t i = from; i < all.size(); ++i) {
      VoteMultiset next = votes;
      next.add(all[i]);
      rec(i, left - 1, next);
    }
  };
  VoteMultiset none;
  rec(0, max_votes, none);
}

bool same_winners_everywhere(const ScoringVector& a, const ScoringVector& b, std::size_t max_votes) {
  bool same = true;
  for_each_election(a.size(), max_votes, [&](const VoteMultiset& votes) {
    if (winner_indices(tally(a.size(), votes, a)) != winner_indices(tally(b.size(), votes, b))) same = false;
  });
  return same;
}

ScoringVector random_vector(std::mt19937_64& rng, std::size_t m, bool rational) {
  std::vector<Rational> c(m);
  for (auto& x : c) {
    x = static_cast<long>(uniform(rng, 0, 4));
    if (rational && uniform(rng, 0, 1)) x /= static_cast<long>(uniform(rng, 2, 5));
  }
  std::sort(c.begin(), c.end(), std::greater<>());
  return ScoringVector(c);
}

}  // namespace

TEST_CASE("normalize examples") {
  CHECK(normalize(make_vector({8, 7, 6, 5})) == ints({3, 2, 1, 0}));
  CHECK(normalize(make_vector({0, 0, 0})) == ints({0, 0, 0}));
  const ScoringVector dowdall3 = rationals({1, Rational(1, 2), Rational(1, 3)});
  CHECK(normalize(dowdall3) == ints({4, 1, 0}));
  // Oracle: identical winner sets on every 3-candidate election with at most 3 votes.
  CHECK(same_winners_everywhere(dowdall3, make_vector({4, 1, 0}), 3));
  CHECK(normalize(rationals({1, 0, 0, -1})) == ints({2, 1, 1, 0}));
  CHECK(normalize(make_vector({6, 4, 2})) == ints({2, 1, 0}));
}

TEST_CASE("equivalent examples") {
  CHECK(equivalent(make_vector({2, 1, 0}), make_vector({4, 2, 0})));
  CHECK_FALSE(equivalent(make_vector({1, 1, 0}), make_vector({1, 0, 0})));
  CHECK(equivalent(make_vector({2, 1, 1, 0}), rationals({1, 0, 0, -1})));
  CHECK_THROWS_AS(equivalent(make_vector({1, 0}), make_vector({1, 0, 0})), InvalidArgument);
}

TEST_CASE("distinguish examples") {
  CHECK_FALSE(distinguish(make_vector({2, 1, 0}), make_vector({4, 2, 0})).has_value());
  auto check_split = [](const ScoringVector& a, const ScoringVector& b) {
    const auto e = distinguish(a, b);
    REQUIRE(e.has_value());
    CHECK(e->candidates.size() == a.size());
    CHECK(winners(evaluate(*e, a)) != winners(evaluate(*e, b)));
  };
  check_split(make_vector({1, 1, 0}), make_vector({1, 0, 0}));
  check_split(make_vector({1, 0}), make_vector({0, 0}));
  check_split(make_vector({0, 0, 0}), make_vector({5, 1, 0}));
  check_split(make_vector({3, 2, 1, 0}), make_vector({3, 1, 1, 0}));
  check_split(rationals({1, 0, 0, -1}), make_vector({3, 2, 1, 0}));
  CHECK_FALSE(distinguish(make_vector({1}), make_vector({7})).has_value());
}

TEST_CASE("normalize properties") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = uniform(rng, 1, 7);
    const ScoringVector v = random_vector(rng, m, trial % 2);
    const NormalizedVector n = normalize(v);
    CHECK(normalize(n.to_scoring_vector()) == n);
    CHECK(n[m - 1] == 0);
    Integer g = 0;
    for (const auto& x : n.coefficients()) {
      CHECK(x >= 0);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    CHECK((g == 1 || n.trivial()));
    const Rational s = frac(static_cast<long>(uniform(rng, 1, 9)), static_cast<long>(uniform(rng, 1, 9)));
    const Rational t = frac(static_cast<long>(uniform(rng, 0, 18)) - 9, static_cast<long>(uniform(rng, 1, 4)));
    std::vector<Rational> moved;
    for (const auto& a : v.coefficients()) moved.push_back(s * a + t);
    CHECK(normalize(ScoringVector(moved)) == n);
  }
}

TEST_CASE("distinguish and equivalence agree with exhaustive small elections") {
  // Equivalent pairs are checked against every election with at most 3 ballots.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = uniform(rng, 1, 3);
    const ScoringVector a = random_vector(rng, m, false), b = random_vector(rng, m, false);
    const bool eq = equivalent(a, b);
    if (eq) CHECK(same_winners_everywhere(a, b, 3));
    CHECK(distinguish(a, b).has_value() == !eq);
  }
}

TEST_CASE("purity examples") {
  const VectorFamily grow{make_vector({5}), make_vector({6, 5}), make_vector({7, 6, 5}), make_vector({8, 7, 6, 5}),
                          make_vector({8, 7, 6, 5, 0})};
  CHECK(check_pure(grow));
  CHECK(check_flexible_pure(grow));

  const VectorFamily flexible{make_vector({1, 0}), make_vector({3, 2, 0})};
  CHECK_FALSE(check_pure(flexible));
  CHECK(check_flexible_pure(flexible));

  CHECK(check_pure({make_vector({0}), make_vector({0, 0}), make_vector({0, 0, 0})}));
  CHECK(check_flexible_pure({make_vector({1, 0}), make_vector({2, 1, 0}), make_vector({3, 2, 1, 0})}));

  // (1,0) -> (1,0,0) deletes a 0 exactly; (1,0,0) -> (1,1,0,0) deletes a 1 exactly.
  const VectorFamily approvals{make_vector({1, 0}), make_vector({1, 0, 0}), make_vector({1, 1, 0, 0})};
  CHECK(check_pure(approvals));
  CHECK(check_flexible_pure(approvals));
  // (1,0,0) is not equivalent to any deletion of (2,2,1,0): (2,1,0),(2,2,0),(2,2,1).
  CHECK_FALSE(check_flexible_pure({make_vector({1, 0, 0}), make_vector({2, 2, 1, 0})}));

  CHECK_THROWS_AS(check_pure({make_vector({1, 0}), make_vector({1, 0, 0, 0})}), InvalidArgument);
}

TEST_CASE("pure implies flexible pure on random families") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    VectorFamily fam{random_vector(rng, 1, false)};
    for (std::size_t len = 2; len <= 5; ++len) {
      std::vector<Rational> c = fam.back().coefficients();
      if (uniform(rng, 0, 3)) {
        const std::size_t at = uniform(rng, 0, c.size());
        const Rational lo = at < c.size() ? c[at] : Rational(0);
        const Rational hi = at > 0 ? c[at - 1] : lo + 2;
        c.insert(c.begin() + static_cast<long>(at), uniform(rng, 0, 1) ? lo : hi);
      } else {
        c = random_vector(rng, len, false).coefficients();
      }
      fam.emplace_back(c);
    }
    if (check_pure(fam)) CHECK(check_flexible_pure(fam));
  }
}
