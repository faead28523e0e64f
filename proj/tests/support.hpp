#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "psr/core.hpp"

namespace psr::testing {

inline Ranking random_ranking(std::mt19937_64& rng, std::size_t m) {
  Ranking r(m);
  std::iota(r.begin(), r.end(), 0u);
  std::shuffle(r.begin(), r.end(), rng);
  return r;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Canonical num/den; GMP arithmetic assumes canonical operands.
inline Rational frac(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline CandidateList named(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("c" + std::to_string(i));
  return CandidateList(names);
}

/// Random CCAV instance with |C| in [min_m, max_m], |R|, |U| <= 8, k <= 5.
/// Votes are sometimes biased towards a few rankings so duplicates occur.
inline CCAVInstance random_instance(std::mt19937_64& rng, std::size_t min_m = 2, std::size_t max_m = 6) {
  CCAVInstance inst;
  const std::size_t m = uniform(rng, min_m, max_m);
  inst.candidates = named(m);
  inst.preferred = static_cast<std::uint32_t>(uniform(rng, 0, m - 1));
  std::vector<Ranking> palette;
  for (std::size_t i = 0; i < 4; ++i) palette.push_back(random_ranking(rng, m));
  auto draw = [&] { return uniform(rng, 0, 2) == 0 ? palette[uniform(rng, 0, 3)] : random_ranking(rng, m); };
  const std::size_t r = uniform(rng, 0, 8), u = uniform(rng, 0, 8);
  for (std::size_t i = 0; i < r; ++i) inst.registered.add(draw());
  for (std::size_t i = 0; i < u; ++i) inst.unregistered.add(draw());
  inst.budget = uniform(rng, 0, 5);
  return inst;
}

}  // namespace psr::testing
