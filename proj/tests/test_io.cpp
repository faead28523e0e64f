#include <doctest.h>

#include <random>

#include "psr/error.hpp"
#include "psr/io.hpp"
#include "support.hpp"

using namespace psr;

namespace {

template <class T, class Parse>
void round_trip(const T& value, Parse parse) {
  const Json doc = to_json(value);
  const T back = parse(parse_json(doc.dump()));
  CHECK(back == value);
  CHECK(to_json(back).dump() == doc.dump());
}

bool same(const CCAVInstance& a, const CCAVInstance& b) {
  return a.candidates == b.candidates && a.registered == b.registered && a.unregistered == b.unregistered &&
         a.preferred == b.preferred && a.budget == b.budget;
}

}  // namespace

TEST_CASE("rationals serialize canonically") {
  Rational half(6, 4);
  half.canonicalize();
  CHECK(to_json(half) == "3/2");
  CHECK(to_json(Rational(-2)) == "-2");
  CHECK(rational_from_json(Json("4/6")) == Rational(2, 3));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  CHECK(parse_vector_literal("1, 1/2 ,1/3") == std::vector<Rational>{1, Rational(1, 2), Rational(1, 3)});
  CHECK_THROWS_AS(parse_vector_literal(""), ParseError);
  CHECK_THROWS_AS(parse_vector_literal("1,,2"), ParseError);
}

TEST_CASE("envelopes") {
  const Json doc = envelope("election", Json{{"candidates", {"a"}}, {"votes", Json::array()}});
  CHECK(doc["format_version"] == "1");
  CHECK(unwrap(doc, "election") == doc["payload"]);
  CHECK(unwrap(doc["payload"], "election") == doc["payload"]);
  CHECK_THROWS_AS(unwrap(doc, "ccav"), ParseError);
  Json wrong = doc;
  wrong["format_version"] = "2";
  CHECK_THROWS_AS(unwrap(wrong, "election"), ParseError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("election documents") {
  const Election e = election_from_json(
      parse_json(R"({"candidates":["a","b"],"votes":[{"order":["a","b"]},{"order":["b","a"],"count":3}]})"));
  CHECK(e.votes.size() == 4);
  CHECK(to_json(e).dump() == R"({"candidates":["a","b"],"votes":[{"order":["a","b"]},{"count":3,"order":["b","a"]}]})");
  CHECK_THROWS_AS(election_from_json(parse_json(R"({"candidates":["a","b"],"votes":[{"order":["a"]}]})")), ParseError);
  CHECK_THROWS_AS(election_from_json(parse_json(R"({"candidates":["a","b"],"votes":[{"order":["a","c"]}]})")),
                  ParseError);
  CHECK_THROWS_AS(election_from_json(parse_json(R"({"candidates":["a","a"],"votes":[]})")), ParseError);
  CHECK_THROWS_AS(
      election_from_json(parse_json(R"({"candidates":["a","b"],"votes":[{"order":["a","b"],"count":0}]})")),
      ParseError);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const CCAVInstance inst = psr::testing::random_instance(rng);
    const CCAVInstance back = ccav_from_json(parse_json(to_json(inst).dump()));
    CHECK(same(inst, back));
    CHECK(to_json(back).dump() == to_json(inst).dump());
    Election e{inst.candidates, inst.registered};
    const Election eb = election_from_json(to_json(e));
    CHECK(eb.candidates == e.candidates);
    CHECK(eb.votes == e.votes);
    round_trip(gen_3dm(2, 5, trial % 2, trial), threedm_from_json);
  }

  PatternSpec p{{3, Rational(5, 2)}, 1, {Rational(1, 3), 0}, {}};
  p.exceptions.emplace(2, make_vector({1, 0}));
  const GeneratorSpec specs[] = {p, BuiltinSpec{BuiltinKind::Borda}, BuiltinSpec{BuiltinKind::KVeto, 2},
                                 TabulatedSpec{{make_vector({0}), make_vector({1, 0})}}};
  for (const auto& spec : specs) {
    const Json doc = to_json(spec);
    CHECK(to_json(generator_from_json(parse_json(doc.dump()))).dump() == doc.dump());
  }
  CHECK_THROWS_AS(generator_from_json(parse_json(R"({"kind":"builtin","name":"k-veto"})")), ParseError);
  CHECK_THROWS_AS(generator_from_json(parse_json(R"({"kind":"builtin","name":"k-veto","k":0})")), ParseError);
  CHECK_THROWS_AS(generator_from_json(parse_json(R"({"kind":"pattern","prefix":["1"],"middle":"2"})")), ParseError);
  CHECK_THROWS_AS(generator_from_json(parse_json(R"({"kind":"spline"})")), ParseError);
}

TEST_CASE("result documents") {
  CHECK(to_json(classify(PatternSpec{{2}, 1, {0}, {}})).dump() == R"({"case":"ApproveVeto","outcome":"poly"})");
  CHECK(to_json(classify(BuiltinSpec{BuiltinKind::Borda})).dump() == R"({"outcome":"np-complete","witness":"Thm48"})");
  const Json two_top = to_json(classify(PatternSpec{{6, 2}, 0, {}, {}}));
  CHECK(two_top["case"] == "TwoTop");
  CHECK(two_top["alpha"] == "3");
  CHECK(two_top["beta"] == "1");

  const CandidateList names({"p", "a"});
  VoteMultiset w;
  w.add({0, 1}, 2);
  CHECK(to_json(SolveResult{true, w, "brute-force"}, names).dump() ==
        R"({"decision":true,"method":"brute-force","witness":[{"count":2,"order":["p","a"]}]})");
  CHECK(to_json(SolveResult{false, std::nullopt, "brute-force"}, names).dump() ==
        R"({"decision":false,"method":"brute-force"})");
}
