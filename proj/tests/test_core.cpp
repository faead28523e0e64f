#include <doctest.h>

#include <random>

#include "psr/core.hpp"
#include "psr/error.hpp"
#include "support.hpp"

using namespace psr;
using psr::testing::random_ranking;
using psr::testing::frac;
using psr::testing::uniform;

namespace {

CandidateList abc() { return CandidateList({"a", "b", "c"}); }

ScoringVector random_vector(std::mt19937_64& rng, std::size_t m) {
  std::vector<Rational> c(m);
  for (auto& x : c) x = frac(static_cast<long>(uniform(rng, 0, 8)), static_cast<long>(uniform(rng, 1, 3)));
  std::sort(c.begin(), c.end(), std::greater<>());
  return ScoringVector(c);
}

}  // namespace

TEST_CASE("evaluate examples") {
  VoteMultiset one;
  one.add({0, 1, 2});
  const ScoreMap s = evaluate(abc(), one, make_vector({2, 1, 0}));
  CHECK(s == ScoreMap{{"a", 2}, {"b", 1}, {"c", 0}});

  const ScoreMap empty = evaluate(abc(), VoteMultiset{}, make_vector({5, 3, 1}));
  for (const auto& [c, v] : empty) CHECK(v == 0);

  VoteMultiset mixed;
  mixed.add({0, 1, 2}, 2);
  mixed.add({2, 1, 0});
  const ScoreMap t = evaluate(abc(), mixed, make_vector({1, 1, 0}));
  CHECK(t == ScoreMap{{"a", 2}, {"b", 3}, {"c", 1}});
  CHECK(winners(t) == std::set<std::string>{"b"});
}

TEST_CASE("winners examples") {
  CHECK(winners({{"a", 2}, {"b", 1}}) == std::set<std::string>{"a"});
  CHECK(winners({{"a", 1}, {"b", 1}, {"c", 0}}) == std::set<std::string>{"a", "b"});
  CHECK_THROWS_AS(winners({}), InvalidArgument);
}

TEST_CASE("evaluate rejects malformed input") {
  VoteMultiset bad;
  bad.add({0, 0, 1});
  CHECK_THROWS_AS(evaluate(abc(), bad, make_vector({2, 1, 0})), InvalidArgument);
  VoteMultiset ok;
  ok.add({0, 1, 2});
  CHECK_THROWS_AS(evaluate(abc(), ok, make_vector({1, 0})), InvalidArgument);
  CHECK_THROWS_AS(make_vector({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(CandidateList({"a", "a"}), InvalidArgument);
  CHECK_THROWS_AS(CandidateList({"a", ""}), InvalidArgument);
}

TEST_CASE("vote multisets merge identical rankings") {
  VoteMultiset v;
  v.add({0, 1}, 2);
  v.add({1, 0});
  v.add({0, 1}, 3);
  CHECK(v.distinct() == 2);
  CHECK(v.size() == 6);
  CHECK(v.count_of({0, 1}) == 5);
  VoteMultiset w;
  w.add({1, 0});
  w.add({0, 1}, 5);
  CHECK(v == w);
  CHECK(is_submultiset(w, v));
  w.add({1, 0});
  CHECK_FALSE(is_submultiset(w, v));
}

TEST_CASE("score properties on random elections") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = uniform(rng, 1, 6);
    const ScoringVector vec = random_vector(rng, m);
    const CandidateList names = psr::testing::named(m);
    VoteMultiset v1, v2;
    for (std::size_t i = uniform(rng, 0, 6); i > 0; --i) v1.add(random_ranking(rng, m), uniform(rng, 1, 3));
    for (std::size_t i = uniform(rng, 0, 6); i > 0; --i) v2.add(random_ranking(rng, m), uniform(rng, 1, 3));

    // Per-ballot accumulation as an independent oracle.
    std::vector<Rational> manual(m, 0);
    for (const auto& e : v1.entries())
      for (std::size_t pos = 0; pos < m; ++pos) manual[e.order[pos]] += vec[pos] * Rational(e.count);
    const ScoreMap s1 = evaluate(names, v1, vec);
    Rational total = 0, row = 0;
    for (std::size_t c = 0; c < m; ++c) {
      CHECK(s1.at(names.name(c)) == manual[c]);
      total += manual[c];
    }
    for (const auto& a : vec.coefficients()) row += a;
    CHECK(total == row * Rational(v1.size()));

    VoteMultiset both = v1;
    both.add_all(v2);
    const ScoreMap s2 = evaluate(names, v2, vec), s12 = evaluate(names, both, vec);
    for (const auto& [c, x] : s12) CHECK(x == s1.at(c) + s2.at(c));

    // Relabeling through a permutation permutes the score map.
    const Ranking perm = random_ranking(rng, m);
    VoteMultiset relabeled;
    for (const auto& e : v1.entries()) {
      Ranking r = e.order;
      for (auto& c : r) c = perm[c];
      relabeled.add(r, e.count);
    }
    const auto moved = tally(m, relabeled, vec);
    for (std::size_t c = 0; c < m; ++c) CHECK(moved[perm[c]] == manual[c]);
  }
}
