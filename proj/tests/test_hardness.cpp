#include <doctest.h>

#include <bit>
#include <random>

#include "psr/error.hpp"
#include "psr/hardness.hpp"
#include "support.hpp"

using namespace psr;
using psr::testing::uniform;

namespace {

ThreeDMInstance make_3dm(std::size_t k, std::vector<std::array<std::uint32_t, 3>> triples) {
  ThreeDMInstance inst;
  for (std::size_t i = 1; i <= k; ++i) {
    inst.x.push_back("x" + std::to_string(i));
    inst.y.push_back("y" + std::to_string(i));
    inst.z.push_back("z" + std::to_string(i));
  }
  inst.triples = std::move(triples);
  return inst;
}

// Bitmask enumeration over all triple subsets.
bool has_cover(const ThreeDMInstance& inst) {
  const std::size_t n = inst.triples.size(), k = inst.k();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::uint32_t used[3] = {0, 0, 0};
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) {
      if (!(mask >> t & 1)) continue;
      for (int d = 0; d < 3; ++d) {
        const std::uint32_t bit = 1u << inst.triples[t][d];
        ok = ok && !(used[d] & bit);
        used[d] |= bit;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Rational> scores(std::size_t m, const VoteMultiset& votes, const ScoringVector& v) {
  return tally(m, votes, v);
}

// x1 occurs with (y2, z2) only, x2 only with (y1, z2): both need z2.
ThreeDMInstance unsatisfiable_k2() { return make_3dm(2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}); }
ThreeDMInstance satisfiable_k2() { return make_3dm(2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 0}}); }

std::vector<Rational> rs(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_CASE("3DM brute force examples") {
  CHECK(solve_3dm_brute(make_3dm(1, {{0, 0, 0}})) == Cover{0});
  CHECK_FALSE(solve_3dm_brute(make_3dm(2, {{0, 0, 0}, {0, 1, 1}})).has_value());
  const auto cover = solve_3dm_brute(satisfiable_k2());
  REQUIRE(cover.has_value());
  CHECK(*cover == Cover{0, 1});
  CHECK(is_cover(satisfiable_k2(), *cover));
  CHECK_FALSE(is_cover(satisfiable_k2(), {0, 2}));
  CHECK_FALSE(solve_3dm_brute(unsatisfiable_k2()).has_value());

  ThreeDMInstance big = make_3dm(3, {});
  for (std::uint32_t t = 0; t < 25; ++t) big.triples.push_back({t % 3, t / 3 % 3, t / 9});
  CHECK_THROWS_AS(solve_3dm_brute(big), BoundExceeded);
}

TEST_CASE("3DM validation") {
  CHECK_THROWS_AS(make_3dm(2, {{0, 0, 2}}).validate(), InvalidArgument);
  CHECK_THROWS_AS(make_3dm(2, {{0, 0, 0}, {0, 0, 0}}).validate(), InvalidArgument);
  ThreeDMInstance shared = make_3dm(1, {{0, 0, 0}});
  shared.y[0] = "x1";
  CHECK_THROWS_AS(shared.validate(), InvalidArgument);
}

TEST_CASE("3DM brute force agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t k = uniform(rng, 1, 3);
    const std::size_t n = std::min<std::size_t>(uniform(rng, 1, 9), k * k * k);
    const ThreeDMInstance inst = gen_3dm(k, n, seed % 3 == 0 && n >= k, seed);
    const auto cover = solve_3dm_brute(inst);
    CHECK(cover.has_value() == has_cover(inst));
    if (cover) CHECK(is_cover(inst, *cover));
  }
}

TEST_CASE("gen_3dm examples") {
  const ThreeDMInstance planted = gen_3dm(2, 4, true, 7);
  CHECK(planted.triples.size() == 4);
  CHECK(solve_3dm_brute(planted).has_value());
  CHECK(planted == gen_3dm(2, 4, true, 7));
  CHECK(planted.x == std::vector<std::string>{"x1", "x2"});
  CHECK(planted.z == std::vector<std::string>{"z1", "z2"});

  const ThreeDMInstance single = gen_3dm(1, 1, true, 0);
  CHECK(single.triples.size() == 1);

  const ThreeDMInstance free3 = gen_3dm(3, 6, false, 1);
  CHECK(free3.triples.size() == 6);
  CHECK(solve_3dm_brute(free3).has_value() == has_cover(free3));

  for (std::uint64_t seed = 0; seed < 40; ++seed) CHECK(solve_3dm_brute(gen_3dm(3, 5, true, seed)).has_value());
  CHECK_THROWS_AS(gen_3dm(0, 1, false, 0), InvalidArgument);
  CHECK_THROWS_AS(gen_3dm(2, 9, false, 0), InvalidArgument);
  CHECK_THROWS_AS(gen_3dm(3, 2, true, 0), InvalidArgument);
}

TEST_CASE("transfer_votes examples") {
  const ScoringVector v = make_vector({2, 1, 0});
  const VoteMultiset t = transfer_votes(v, 0, 2, 0, 2);
  CHECK(t.size() == 3);
  CHECK(scores(3, t, v) == rs({5, 3, 1}));

  const ScoringVector flat = make_vector({1, 1, 0, 0});
  CHECK(scores(4, transfer_votes(flat, 1, 3, 1, 3), flat) == rs({2, 3, 2, 1}));
  CHECK(scores(4, transfer_votes(flat, 0, 2, 0, 1), flat) == rs({2, 2, 2, 2}));

  CHECK_THROWS_AS(transfer_votes(v, 1, 1, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(transfer_votes(v, 0, 1, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(transfer_votes(v, 0, 3, 0, 2), InvalidArgument);
}

TEST_CASE("realize_scores examples") {
  const ScoringVector borda = make_vector({3, 2, 1, 0});
  const std::vector<std::vector<Integer>> zero(3, std::vector<Integer>(4, 0));
  const RealizationResult flat = realize_scores(borda, zero, 2);
  const auto s = scores(4, flat.votes, borda);
  CHECK(s[0] == flat.offset);
  CHECK(s[1] == s[0]);
  CHECK(s[2] == s[0]);
  CHECK(s[0] > s[3] + 2 * 3);

  auto one = zero;
  one[0][0] = 1;
  const RealizationResult r = realize_scores(borda, one, 2);
  const auto t = scores(4, r.votes, borda);
  CHECK(t[0] - t[1] == 3);
  CHECK(t[1] == r.offset);

  CHECK_THROWS_AS(realize_scores(make_vector({1, 0}), {{1, 0}}, 0), InvalidArgument);
  CHECK_THROWS_AS(realize_scores(make_vector({2, 1, 1}), std::vector<std::vector<Integer>>(2, {0, 0, 0}), 0),
                  InvalidArgument);
}

TEST_CASE("realize_scores matches random target tables") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = uniform(rng, 3, 7);
    std::vector<Rational> c(m, 0);
    for (std::size_t i = 0; i + 1 < m; ++i) c[i] = static_cast<long>(uniform(rng, 0, 5));
    c[0] += 1;
    std::sort(c.begin(), c.end(), std::greater<>());
    const ScoringVector v(c);
    std::vector<std::vector<Integer>> targets(m - 1, std::vector<Integer>(m));
    for (auto& row : targets)
      for (auto& a : row) a = static_cast<long>(uniform(rng, 0, 6)) - 3;
    const std::uint64_t guard = uniform(rng, 0, 4);
    const RealizationResult r = realize_scores(v, targets, guard);
    const auto s = scores(m, r.votes, v);
    for (std::size_t cand = 0; cand + 1 < m; ++cand) {
      Rational want = r.offset;
      for (std::size_t i = 0; i < m; ++i) want += Rational(targets[cand][i]) * v[i];
      CHECK(s[cand] == want);
      CHECK(s[cand] > s[m - 1] + Rational(static_cast<long>(guard)) * v[0]);
    }
  }
}

TEST_CASE("six-k reductions: sizes, branches and dual checks") {
  const GeneratorSpec veto3 = BuiltinSpec{BuiltinKind::KVeto, 3};
  const GeneratorSpec approval4 = BuiltinSpec{BuiltinKind::KApproval, 4};
  const GeneratorSpec borda = BuiltinSpec{BuiltinKind::Borda};
  const ThreeDMInstance planted = gen_3dm(2, 4, true, 7);

  const ReductionOutput v = reduce_veto_style(veto3, planted);
  CHECK(v.instance.candidates.size() == 12);
  CHECK(v.instance.unregistered.size() == planted.triples.size());
  CHECK(v.instance.budget == 2);
  CHECK(v.guaranteed);
  CHECK(dual_check(planted, v).ccav_positive);
  CHECK_FALSE(dual_check(unsatisfiable_k2(), reduce_veto_style(veto3, unsatisfiable_k2())).ccav_positive);

  const ReductionOutput a = reduce_approval_style(approval4, planted);
  CHECK(a.instance.candidates.size() == 12);
  CHECK(a.instance.unregistered.size() == planted.triples.size());
  CHECK(a.guaranteed);
  CHECK(dual_check(planted, a).agree());

  CHECK(reduce_auto(veto3, planted).kind == ReductionKind::VetoStyle);
  CHECK(reduce_auto(approval4, planted).kind == ReductionKind::ApprovalStyle);
  // Borda at m = 12: (11..0), alpha_7 = 5 > alpha_10 = 2.
  CHECK(reduce_auto(borda, planted).kind == ReductionKind::VetoStyle);
  CHECK(dual_check(planted, reduce_auto(borda, planted)).agree());

  // 2-veto violates the veto-style inequality: output exists, correctness unclaimed.
  CHECK_FALSE(reduce_veto_style(BuiltinSpec{BuiltinKind::KVeto, 2}, planted).guaranteed);
  CHECK_THROWS_AS(reduce_auto(BuiltinSpec{BuiltinKind::KVeto, 1}, planted), InvalidArgument);
  CHECK_THROWS_AS(reduce_veto_style(veto3, make_3dm(1, {{0, 0, 0}})), InvalidArgument);

  CHECK(reduce_veto_style(veto3, planted).instance.registered == v.instance.registered);
}

TEST_CASE("coefficient reductions: sizes and dual checks") {
  const ThreeDMInstance small = gen_3dm(1, 1, true, 3);
  const ThreeDMInstance planted = make_3dm(1, {{0, 0, 0}});
  const ThreeDMInstance two = gen_3dm(2, 3, true, 5);
  const std::size_t n = two.triples.size();

  const ReductionOutput tc = reduce_three_coeff(2, 1, 1, two);
  CHECK(tc.instance.budget == n + 2 * 2);
  CHECK(tc.instance.candidates.size() == 3 * 2 + 2 * n + 2);
  CHECK(dual_check(two, tc).agree());
  CHECK(dual_check(planted, reduce_three_coeff(2, 1, 1, planted)).ccav_positive);
  // With no triples p already ties X, Y and Z under (2,1,1); the output is flagged.
  CHECK_FALSE(reduce_three_coeff(2, 1, 1, make_3dm(1, {})).guaranteed);
  CHECK_FALSE(dual_check(make_3dm(1, {}), reduce_three_coeff(3, 2, 1, make_3dm(1, {}))).ccav_positive);
  CHECK_THROWS_AS(reduce_three_coeff(1, 1, 1, two), InvalidArgument);
  CHECK_THROWS_AS(reduce_three_coeff(2, 1, 0, two), InvalidArgument);

  const ReductionOutput c1 = reduce_case1({3, 2, 2, 1, 1}, small);
  CHECK(c1.instance.budget == 1);
  CHECK(dual_check(small, c1).ccav_positive);
  CHECK_THROWS_AS(reduce_case1({3, 2, 2, 2, 1}, small), InvalidArgument);

  const ReductionOutput above = reduce_case2(3, 1, two);
  CHECK(above.kind == ReductionKind::Case2Above);
  CHECK(above.instance.budget == 3 * 2);
  CHECK(dual_check(two, above).agree());
  CHECK(reduce_case2(3, 2, two).kind == ReductionKind::Case2Below);
  CHECK(dual_check(two, reduce_case2(3, 2, two)).agree());
  CHECK_THROWS_AS(reduce_case2(2, 1, two), InvalidArgument);
  CHECK_THROWS_AS(reduce_case2(1, 1, two), InvalidArgument);

  CHECK(dual_check(two, reduce_case3(3, 2, 1, two)).agree());
  CHECK_THROWS_AS(reduce_case3(2, 2, 1, two), InvalidArgument);

  const ReductionOutput c4 = reduce_case4(2, 1, unsatisfiable_k2());
  CHECK(c4.instance.budget == 3 + 2 * 2);
  CHECK_FALSE(dual_check(unsatisfiable_k2(), c4).ccav_positive);
  CHECK_THROWS_AS(reduce_case4(1, 1, two), InvalidArgument);

  for (const auto& out : {tc, c1, above, c4}) {
    CHECK(out.instance.candidates.size() == out.vector.size());
    out.instance.validate();
  }
}
