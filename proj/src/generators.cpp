#include "psr/generators.hpp"

#include <algorithm>

#include "psr/error.hpp"

namespace psr {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool non_increasing(const std::vector<Rational>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

std::vector<Rational> ones_then_zeros(std::size_t ones, std::size_t zeros) {
  std::vector<Rational> v(ones, Rational(1));
  v.resize(ones + zeros, Rational(0));
  return v;
}

PatternSpec builtin_as_pattern(const BuiltinSpec& b) {
  PatternSpec p;
  if (b.kind == BuiltinKind::KApproval) {
    p.prefix.assign(b.k, Rational(1));
    p.middle = 0;
  } else {
    p.middle = 1;
    p.suffix.assign(b.k, Rational(0));
  }
  return p;
}

ScoringVector expand_pattern(const PatternSpec& p, std::size_t m, bool use_exceptions) {
  if (use_exceptions) {
    if (auto it = p.exceptions.find(m); it != p.exceptions.end()) return it->second;
  }
  const std::size_t P = p.prefix.size();
  const std::size_t S = p.suffix.size();
  std::vector<Rational> v;
  v.reserve(m);
  if (m <= P) {
    v.assign(p.prefix.begin(), p.prefix.begin() + static_cast<std::ptrdiff_t>(m));
  } else if (m < P + S) {
    v = p.prefix;
    v.insert(v.end(), p.suffix.end() - static_cast<std::ptrdiff_t>(m - P), p.suffix.end());
  } else {
    v = p.prefix;
    v.insert(v.end(), m - P - S, p.middle);
    v.insert(v.end(), p.suffix.begin(), p.suffix.end());
  }
  return ScoringVector(std::move(v));
}

ScoringVector expand_builtin(const BuiltinSpec& b, std::size_t m) {
  std::vector<Rational> v;
  switch (b.kind) {
    case BuiltinKind::Borda:
      for (std::size_t i = m; i-- > 0;) v.emplace_back(static_cast<unsigned long>(i));
      break;
    case BuiltinKind::Dowdall:
      for (std::size_t i = 1; i <= m; ++i) v.emplace_back(1, static_cast<unsigned long>(i));
      break;
    case BuiltinKind::KApproval:
      v = ones_then_zeros(std::min<std::size_t>(b.k, m), m - std::min<std::size_t>(b.k, m));
      break;
    case BuiltinKind::KVeto: {
      const std::size_t zeros = std::min<std::size_t>(b.k, m);
      v = ones_then_zeros(m - zeros, zeros);
      break;
    }
  }
  return ScoringVector(std::move(v));
}

// Expansion at the stable length, ignoring small-length exceptions.
ScoringVector stable_expansion(const GeneratorSpec& spec, std::size_t m) {
  return std::visit(overloaded{
                        [&](const PatternSpec& p) { return expand_pattern(p, m, false); },
                        [&](const BuiltinSpec& b) { return expand_builtin(b, m); },
                        [&](const TabulatedSpec&) -> ScoringVector {
                          throw Unsupported("tabulated generators cannot be classified");
                        },
                    },
                    spec);
}

}  // namespace

void check_spec(const GeneratorSpec& spec) {
  std::visit(overloaded{
                 [](const PatternSpec& p) {
                   if (!non_increasing(p.prefix)) throw InvalidArgument("pattern prefix must be non-increasing");
                   if (!non_increasing(p.suffix)) throw InvalidArgument("pattern suffix must be non-increasing");
                   if (!p.prefix.empty() && p.prefix.back() < p.middle) {
                     throw InvalidArgument("pattern middle exceeds the last prefix coefficient");
                   }
                   if (!p.suffix.empty() && p.middle < p.suffix.front()) {
                     throw InvalidArgument("pattern middle is below the first suffix coefficient");
                   }
                   const std::size_t stable = p.prefix.size() + p.suffix.size() + 1;
                   for (const auto& [m, v] : p.exceptions) {
                     if (m == 0 || m >= stable) {
                       throw InvalidArgument("pattern exception at m=" + std::to_string(m) +
                                             " must lie below the stable length " + std::to_string(stable));
                     }
                     if (v.size() != m) {
                       throw InvalidArgument("pattern exception at m=" + std::to_string(m) + " has length " +
                                             std::to_string(v.size()));
                     }
                   }
                 },
                 [](const BuiltinSpec& b) {
                   if ((b.kind == BuiltinKind::KApproval || b.kind == BuiltinKind::KVeto) && b.k < 1) {
                     throw InvalidArgument("k-approval / k-veto need k >= 1");
                   }
                 },
                 [](const TabulatedSpec& t) {
                   if (t.family.empty()) throw InvalidArgument("tabulated family is empty");
                   check_family(t.family);
                 },
             },
             spec);
}

ScoringVector expand(const GeneratorSpec& spec, std::size_t m) {
  if (m == 0) throw InvalidArgument("expand needs m >= 1");
  check_spec(spec);
  return std::visit(overloaded{
                        [&](const PatternSpec& p) { return expand_pattern(p, m, true); },
                        [&](const BuiltinSpec& b) { return expand_builtin(b, m); },
                        [&](const TabulatedSpec& t) -> ScoringVector {
                          const std::size_t first = t.family.front().size();
                          if (m < first || m - first >= t.family.size()) {
                            throw InvalidArgument("tabulated family has no vector for m=" + std::to_string(m));
                          }
                          return t.family[m - first];
                        },
                    },
                    spec);
}

ValidationReport validate(const GeneratorSpec& spec, std::size_t check_up_to) {
  ValidationReport report;
  report.checked_up_to = check_up_to;
  try {
    check_spec(spec);
  } catch (const std::exception& e) {
    report.monotone = false;
    report.failures.emplace_back(e.what());
    return report;
  }
  std::size_t first = 1;
  std::size_t last = check_up_to;
  if (const auto* t = std::get_if<TabulatedSpec>(&spec)) {
    first = t->family.front().size();
    last = std::min(last, first + t->family.size() - 1);
  }
  VectorFamily family;
  for (std::size_t m = first; m <= last; ++m) {
    try {
      family.push_back(expand(spec, m));
    } catch (const std::exception& e) {
      report.monotone = false;
      report.failures.push_back("m=" + std::to_string(m) + ": " + e.what());
      family.clear();
      break;
    }
  }
  if (report.monotone) {
    report.pure = check_pure(family);
    report.flexible_pure = check_flexible_pure(family);
    if (!report.pure) report.failures.emplace_back("not pure: some length is not a single insertion into its predecessor");
    if (!report.flexible_pure) report.failures.emplace_back("not flexible-pure");
  }
  return report;
}

std::size_t stable_length(const GeneratorSpec& spec) {
  return std::visit(overloaded{
                        [](const PatternSpec& p) {
                          return std::max<std::size_t>(7, p.prefix.size() + p.suffix.size() + 4);
                        },
                        [](const BuiltinSpec& b) -> std::size_t {
                          if (b.kind == BuiltinKind::KApproval || b.kind == BuiltinKind::KVeto) {
                            return std::max<std::size_t>(7, b.k + 4);
                          }
                          return 7;
                        },
                        [](const TabulatedSpec&) -> std::size_t {
                          throw Unsupported("tabulated generators have no stable length");
                        },
                    },
                    spec);
}

Classification classify(const GeneratorSpec& spec) {
  if (std::holds_alternative<TabulatedSpec>(spec)) {
    throw Unsupported("tabulated generators cannot be classified: a finite table does not determine the family");
  }
  check_spec(spec);
  GeneratorSpec effective = spec;
  if (const auto* b = std::get_if<BuiltinSpec>(&spec);
      b && (b->kind == BuiltinKind::KApproval || b->kind == BuiltinKind::KVeto)) {
    effective = builtin_as_pattern(*b);
  }
  const std::size_t m0 = stable_length(effective);
  const auto report = validate(spec, m0);
  if (!report.flexible_pure) {
    throw InvalidArgument("generator is not flexible-pure up to m=" + std::to_string(m0));
  }

  Classification result;
  result.stable_length = m0;
  result.stable_vector = normalize(stable_expansion(effective, m0));
  const auto& n = result.stable_vector;
  const Integer& a1 = n[0];
  const Integer& a2 = n[1];
  const Integer& a3 = n[2];
  const Integer& a4 = n[3];
  const Integer& a5 = n[m0 - 2];

  auto np = [&](HardnessWitness w) { result.outcome = NPComplete{w}; };
  auto poly = [&](PolyCase c) { result.outcome = PolyTime{c}; };

  if (a4 > n[m0 - 3]) {
    np(HardnessWitness::ManyCoefficients);
  } else if (a4 == 0) {
    if (a3 > 0 && a1 == a3) {
      poly(PolyCase::ThreeApproval);
    } else if (a3 == 0) {
      result.outcome = PolyTime{PolyCase::TwoTop, Rational(a1), Rational(a2)};
    } else {
      np(HardnessWitness::ThreeTop);
    }
  } else if (a2 > a4) {
    np(HardnessWitness::SecondAboveFourth);
  } else if (a2 == a5) {
    if (a1 == a2) {
      poly(PolyCase::OneVeto);
    } else if (a1 == 2 * a2) {
      poly(PolyCase::ApproveVeto);
    } else {
      np(HardnessWitness::TopOverFlat);
    }
  } else if (a1 == a2) {
    if (a5 == 0) {
      poly(PolyCase::TwoVeto);
    } else {
      np(HardnessWitness::FlatOverFifth);
    }
  } else {
    np(HardnessWitness::TopOverMiddleOverFifth);
  }
  return result;
}

std::string_view tag(PolyCase kind) {
  switch (kind) {
    case PolyCase::ThreeApproval: return "ThreeApproval";
    case PolyCase::OneVeto: return "OneVeto";
    case PolyCase::TwoVeto: return "TwoVeto";
    case PolyCase::TwoTop: return "TwoTop";
    case PolyCase::ApproveVeto: return "ApproveVeto";
  }
  return "?";
}

std::string_view tag(HardnessWitness witness) {
  switch (witness) {
    case HardnessWitness::ManyCoefficients: return "Thm48";
    case HardnessWitness::ThreeTop: return "Thm49";
    case HardnessWitness::SecondAboveFourth: return "Thm410_1";
    case HardnessWitness::TopOverFlat: return "Thm410_2";
    case HardnessWitness::TopOverMiddleOverFifth: return "Thm410_3";
    case HardnessWitness::FlatOverFifth: return "Thm410_4";
  }
  return "?";
}

PolyCase poly_case_from_tag(std::string_view text) {
  for (auto c : {PolyCase::ThreeApproval, PolyCase::OneVeto, PolyCase::TwoVeto, PolyCase::TwoTop,
                 PolyCase::ApproveVeto}) {
    if (tag(c) == text) return c;
  }
  throw ParseError("unknown polynomial case '" + std::string(text) + "'");
}

HardnessWitness hardness_witness_from_tag(std::string_view text) {
  for (auto w : {HardnessWitness::ManyCoefficients, HardnessWitness::ThreeTop, HardnessWitness::SecondAboveFourth,
                 HardnessWitness::TopOverFlat, HardnessWitness::TopOverMiddleOverFifth,
                 HardnessWitness::FlatOverFifth}) {
    if (tag(w) == text) return w;
  }
  throw ParseError("unknown hardness witness '" + std::string(text) + "'");
}

ScoringVector canonical_vector(const PolyTime& poly, std::size_t m) {
  switch (poly.kind) {
    case PolyCase::ThreeApproval:
      return expand_builtin({BuiltinKind::KApproval, 3}, m);
    case PolyCase::OneVeto:
      return expand_builtin({BuiltinKind::KVeto, 1}, m);
    case PolyCase::TwoVeto:
      return expand_builtin({BuiltinKind::KVeto, 2}, m);
    case PolyCase::TwoTop: {
      PatternSpec p{{poly.alpha, poly.beta}, Rational(0), {}, {}};
      return expand_pattern(p, m, false);
    }
    case PolyCase::ApproveVeto: {
      PatternSpec p{{Rational(2)}, Rational(1), {Rational(0)}, {}};
      return expand_pattern(p, m, false);
    }
  }
  throw InternalError("unhandled polynomial case");
}

std::string_view builtin_name(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::Borda: return "borda";
    case BuiltinKind::Dowdall: return "dowdall";
    case BuiltinKind::KApproval: return "k-approval";
    case BuiltinKind::KVeto: return "k-veto";
  }
  return "?";
}

BuiltinKind builtin_from_name(std::string_view name) {
  for (auto k : {BuiltinKind::Borda, BuiltinKind::Dowdall, BuiltinKind::KApproval, BuiltinKind::KVeto}) {
    if (builtin_name(k) == name) return k;
  }
  throw ParseError("unknown builtin generator '" + std::string(name) + "'");
}

}  // namespace psr
