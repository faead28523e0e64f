#include <unordered_set>

#include "psr/error.hpp"
#include "psr/hardness.hpp"
#include "psr/vectors.hpp"

namespace psr {

std::string_view reduction_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::VetoStyle: return "veto-style";
    case ReductionKind::ApprovalStyle: return "approval-style";
    case ReductionKind::ThreeCoeff: return "three-coeff";
    case ReductionKind::Case1: return "case1";
    case ReductionKind::Case2Above: return "case2-above";
    case ReductionKind::Case2Below: return "case2-below";
    case ReductionKind::Case3: return "case3";
    case ReductionKind::Case4: return "case4";
  }
  return "?";
}

namespace {

// Collects candidates and relative score multipliers; the last candidate
// added is the dummy that absorbs the realization's surplus points.
class Construction {
 public:
  Construction(const ThreeDMInstance& inst, std::size_t m) : m_(m) {
    add("p");
    for (const auto* set : {&inst.x, &inst.y, &inst.z})
      for (const auto& name : *set) add(name);
  }

  std::uint32_t add(const std::string& name) {
    if (!taken_.insert(name).second)
      throw InvalidArgument("3DM element name '" + name + "' collides with a constructed candidate");
    names_.push_back(name);
    targets_.emplace_back(m_, Integer(0));
    return static_cast<std::uint32_t>(names_.size() - 1);
  }

  /// Adds `times` copies of coefficient `pos` (0-based) to candidate c's score.
  void score(std::uint32_t c, std::size_t pos, long times) { targets_[c][pos] += times; }

  std::uint32_t x(std::uint32_t i) const { return 1 + i; }
  std::uint32_t y(std::uint32_t i, std::size_t k) const { return static_cast<std::uint32_t>(1 + k + i); }
  std::uint32_t z(std::uint32_t i, std::size_t k) const { return static_cast<std::uint32_t>(1 + 2 * k + i); }

  /// `head` first, `tail` last, the remaining candidates in list order between.
  Ranking vote(std::vector<std::uint32_t> head, const std::vector<std::uint32_t>& tail) const {
    std::vector<bool> used(names_.size(), false);
    for (auto c : head) used[c] = true;
    for (auto c : tail) used[c] = true;
    for (std::uint32_t c = 0; c < names_.size(); ++c)
      if (!used[c]) head.push_back(c);
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  }

  void offer(Ranking vote) { pool_.add(std::move(vote)); }

  ReductionOutput finish(const ScoringVector& vector, std::uint64_t budget, std::uint64_t guard, ReductionKind kind,
                         bool guaranteed) {
    if (names_.size() != m_) throw InternalError("reduction built the wrong number of candidates");
    const ScoringVector normal = normalize(vector).to_scoring_vector();
    targets_.pop_back();  // the dummy's own row is implied
    RealizationResult realized = realize_scores(normal, targets_, guard);
    ReductionOutput out{CCAVInstance{CandidateList(names_), std::move(realized.votes), std::move(pool_), 0, budget},
                        vector, kind, guaranteed};
    out.instance.validate();
    return out;
  }

 private:
  std::size_t m_;
  std::vector<std::string> names_;
  std::unordered_set<std::string> taken_;
  std::vector<std::vector<Integer>> targets_;
  VoteMultiset pool_;
};

void check_nontrivial(const ScoringVector& vector) {
  if (vector.trivial()) throw InvalidArgument("reduction needs a non-trivial scoring vector");
}

// The 6k-candidate constructions share candidates: p, s_1..s_3k (X, Y, Z),
// dummies d_1..d_(3k-1) with the last one absorbing the realization surplus.
ReductionOutput six_k(const ScoringVector& vector, const ThreeDMInstance& inst, bool veto, bool guaranteed) {
  inst.validate();
  const std::size_t k = inst.k();
  if (k < 2) throw InvalidArgument("the 6k-candidate reductions need k >= 2");
  const std::size_t m = 6 * k;
  check_nontrivial(vector);
  Construction b(inst, m);
  std::vector<std::uint32_t> d;
  for (std::size_t i = 1; i <= 3 * k - 1; ++i) d.push_back(b.add("d" + std::to_string(i)));
  for (std::uint32_t i = 1; i <= 3 * k; ++i) {
    const long r = i <= k ? 2 : i <= 2 * k ? 1 : 0;  // X, Y, Z
    b.score(i, 0, static_cast<long>(k));
    if (veto) {
      b.score(i, i, -static_cast<long>(k - 1));  // alpha_(1+i)
      b.score(i, m - 1 - r, -1);                 // alpha_(m-r(i))
    } else {
      b.score(i, m - 3 * k + i - 1, -static_cast<long>(k - 1));  // alpha_(m-3k+i)
      b.score(i, 3 - r, -1);                                      // alpha_(1+r'(i)), r' = 1, 2, 3
    }
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i) b.score(d[i], 0, -static_cast<long>(k + 1));

  for (const auto& t : inst.triples) {
    const std::uint32_t sx = b.x(t[0]), sy = b.y(t[1], k), sz = b.z(t[2], k);
    std::vector<std::uint32_t> block;  // s_1..s_3k with d_1, d_2, d_3 in place of x, y, z
    for (std::uint32_t s = 1; s <= 3 * k; ++s) block.push_back(s == sx ? d[0] : s == sy ? d[1] : s == sz ? d[2] : s);
    Ranking v{0};
    if (veto) {
      v.insert(v.end(), block.begin(), block.end());
      v.insert(v.end(), d.begin() + 3, d.end());
      v.insert(v.end(), {sx, sy, sz});
    } else {
      v.insert(v.end(), {sx, sy, sz});
      v.insert(v.end(), d.begin() + 3, d.end());
      v.insert(v.end(), block.begin(), block.end());
    }
    b.offer(std::move(v));
  }
  return b.finish(vector, k, k, veto ? ReductionKind::VetoStyle : ReductionKind::ApprovalStyle, guaranteed);
}

bool veto_condition(const ScoringVector& v, std::size_t k) { return v[3 * k] > v[v.size() - 3]; }
bool approval_condition(const ScoringVector& v, std::size_t k) { return v[3] > v[v.size() - 3 * k]; }

ScoringVector spec_vector(const GeneratorSpec& spec, const ThreeDMInstance& inst) {
  inst.validate();
  if (inst.k() < 2) throw InvalidArgument("the 6k-candidate reductions need k >= 2");
  return expand(spec, 6 * inst.k());
}

ScoringVector from_list(std::vector<Rational> c) { return ScoringVector(std::move(c)); }

}  // namespace

ReductionOutput reduce_veto_style(const GeneratorSpec& spec, const ThreeDMInstance& instance) {
  const ScoringVector v = spec_vector(spec, instance);
  return six_k(v, instance, true, veto_condition(v, instance.k()));
}

ReductionOutput reduce_approval_style(const GeneratorSpec& spec, const ThreeDMInstance& instance) {
  const ScoringVector v = spec_vector(spec, instance);
  return six_k(v, instance, false, approval_condition(v, instance.k()));
}

ReductionOutput reduce_auto(const GeneratorSpec& spec, const ThreeDMInstance& instance) {
  const ScoringVector v = spec_vector(spec, instance);
  if (veto_condition(v, instance.k())) return six_k(v, instance, true, true);
  if (approval_condition(v, instance.k())) return six_k(v, instance, false, true);
  throw InvalidArgument("neither alpha_(3k+1) > alpha_(m-2) nor alpha_4 > alpha_(m-3k+1) holds at m = 6k");
}

ReductionOutput reduce_three_coeff(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                   const ThreeDMInstance& inst) {
  if (!(alpha >= beta && beta >= gamma && gamma > 0 && alpha != gamma))
    throw InvalidArgument("three-coeff needs alpha >= beta >= gamma > 0 and alpha != gamma");
  inst.validate();
  const std::size_t k = inst.k(), n = inst.triples.size(), m = 3 * k + 2 * n + 2;
  std::vector<Rational> c(m, 0);
  c[0] = alpha;
  c[1] = beta;
  c[2] = gamma;
  const ScoringVector vector = from_list(c);
  const long spread = static_cast<long>(n + 2 * k);
  Construction b(inst, m);
  std::vector<std::uint32_t> s, s2;
  for (std::size_t i = 1; i <= n; ++i) s.push_back(b.add("S" + std::to_string(i)));
  for (std::size_t i = 1; i <= n; ++i) s2.push_back(b.add("S" + std::to_string(i) + "'"));
  b.add("d");
  b.score(0, 0, 1);
  b.score(0, 2, 2);
  for (std::uint32_t e = 1; e <= 3 * k; ++e) {
    b.score(e, 1, spread);
    b.score(e, 2, 2);
  }
  for (std::size_t i = 0; i < n; ++i) {
    b.score(s[i], 1, spread);
    if (alpha <= 2 * gamma) b.score(s[i], 0, 1);
    else b.score(s[i], 2, 2);
    b.score(s2[i], 1, spread);
    b.score(s2[i], 0, 1);
    b.score(s2[i], 2, 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = inst.triples[i];
    b.offer(b.vote({b.x(t[0]), 0, s[i]}, {}));
    b.offer(b.vote({b.y(t[1], k), 0, s[i]}, {}));
    b.offer(b.vote({b.z(t[2], k), 0, s2[i]}, {}));
    b.offer(b.vote({s[i], 0, s2[i]}, {}));
  }
  // The converse direction relies on some S_i' beating p before any vote is
  // added, which needs at least one triple.
  return b.finish(vector, n + 2 * k, n + 2 * k, ReductionKind::ThreeCoeff, n > 0);
}

ReductionOutput reduce_case1(const std::array<Rational, 5>& a, const ThreeDMInstance& inst) {
  for (std::size_t i = 0; i + 1 < 5; ++i)
    if (a[i] < a[i + 1]) throw InvalidArgument("case1 coefficients must be non-increasing");
  if (!(a[1] > a[3] && a[3] > 0)) throw InvalidArgument("case1 needs alpha2 > alpha4 > 0");
  inst.validate();
  const std::size_t k = inst.k(), m = 3 * k + 3;
  std::vector<Rational> c(m, a[3]);
  c[0] = a[0];
  c[1] = a[1];
  c[2] = a[2];
  c[m - 2] = a[4];
  c[m - 1] = 0;
  const ScoringVector vector = from_list(c);
  const long kk = static_cast<long>(k);
  Construction b(inst, m);
  const auto d1 = b.add("d1");
  const auto d2 = b.add("d2");
  b.score(0, 3, -kk);
  for (std::uint32_t i = 0; i < k; ++i) {
    b.score(b.x(i), 0, -1);
    b.score(b.x(i), 3, -(kk - 1));
    b.score(b.y(i, k), 1, -1);
    b.score(b.y(i, k), 3, -(kk - 1));
    b.score(b.z(i, k), 3, -(kk - 1));
  }
  b.score(d1, 0, -(kk + 1));
  b.score(d1, 3, -(kk + 1));
  for (const auto& t : inst.triples)
    b.offer(b.vote({b.x(t[0]), b.y(t[1], k), d1, 0}, {d2, b.z(t[2], k)}));
  return b.finish(vector, k, k, ReductionKind::Case1, true);
}

ReductionOutput reduce_case2(const Rational& a1, const Rational& a2, const ThreeDMInstance& inst) {
  if (!(a2 > 0 && a1 > a2 && a1 != 2 * a2)) throw InvalidArgument("case2 needs alpha1 > alpha2 > 0, alpha1 != 2 alpha2");
  inst.validate();
  const std::size_t k = inst.k(), n = inst.triples.size(), m = 3 * k + n + 2;
  std::vector<Rational> c(m, a2);
  c[0] = a1;
  c[m - 1] = 0;
  const ScoringVector vector = from_list(c);
  const NormalizedVector normal = normalize(vector);
  const Integer& b1 = normal[0];
  const Integer& b2 = normal[1];
  const bool above = a1 > 2 * a2;
  Construction b(inst, m);
  std::vector<std::uint32_t> s;
  for (std::size_t i = 1; i <= n; ++i) s.push_back(b.add("S" + std::to_string(i)));
  b.add("d");
  for (std::uint32_t i = 0; i < k; ++i) {
    if (above) {
      b.score(b.y(i, k), 1, 1);
      for (auto e : {b.x(i), b.z(i, k)}) {
        b.score(e, 1, 1);
        b.score(e, 0, -1);
      }
    } else {
      b.score(b.y(i, k), 1, 1);
      b.score(b.y(i, k), 0, -1);
      for (auto e : {b.x(i), b.z(i, k)}) b.score(e, 1, 1);
    }
  }
  // 1 = u * b1 + v * b2 since the normalized pair is coprime.
  const BezoutResult one = bezout(b1, b2);
  if (one.gcd != 1) throw InternalError("case2: normalized coefficients are not coprime");
  for (std::size_t i = 0; i < n; ++i) {
    if (above) {
      b.score(s[i], 1, 2);
      b.score(s[i], 0, -1);
      b.score(s[i], 0, one.u.get_si());
      b.score(s[i], 1, one.v.get_si());
    } else if (3 * b2 < 2 * b1) {
      b.score(s[i], 1, 3);
      b.score(s[i], 0, -2);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = inst.triples[i];
    const auto x = b.x(t[0]), y = b.y(t[1], k), z = b.z(t[2], k);
    if (above) {
      b.offer(b.vote({s[i]}, {y}));
      b.offer(b.vote({z}, {s[i]}));
      b.offer(b.vote({x}, {s[i]}));
    } else {
      b.offer(b.vote({y}, {s[i]}));
      b.offer(b.vote({s[i]}, {x}));
      b.offer(b.vote({s[i]}, {z}));
    }
  }
  return b.finish(vector, 3 * k, 3 * k, above ? ReductionKind::Case2Above : ReductionKind::Case2Below, true);
}

ReductionOutput reduce_case3(const Rational& a1, const Rational& a2, const Rational& a5, const ThreeDMInstance& inst) {
  if (!(a1 > a2 && a2 > a5 && a5 >= 0)) throw InvalidArgument("case3 needs alpha1 > alpha2 > alpha5 >= 0");
  inst.validate();
  const std::size_t k = inst.k(), m = 3 * k + 2;
  std::vector<Rational> c(m, a2);
  c[0] = a1;
  c[m - 2] = a5;
  c[m - 1] = 0;
  const ScoringVector vector = from_list(c);
  Construction b(inst, m);
  b.add("d");
  for (std::uint32_t i = 0; i < k; ++i) {
    b.score(b.x(i), 0, -1);
    b.score(b.x(i), 1, 1);
    b.score(b.y(i, k), 1, 1);
    b.score(b.y(i, k), m - 2, -1);
    b.score(b.z(i, k), 1, 1);
  }
  for (const auto& t : inst.triples) b.offer(b.vote({b.x(t[0])}, {b.y(t[1], k), b.z(t[2], k)}));
  return b.finish(vector, k, k, ReductionKind::Case3, true);
}

ReductionOutput reduce_case4(const Rational& a1, const Rational& a5, const ThreeDMInstance& inst) {
  if (!(a1 > a5 && a5 > 0)) throw InvalidArgument("case4 needs alpha1 > alpha5 > 0");
  inst.validate();
  const std::size_t k = inst.k(), n = inst.triples.size(), m = 3 * k + 2 * n + 2;
  std::vector<Rational> c(m, a1);
  c[m - 2] = a5;
  c[m - 1] = 0;
  const ScoringVector vector = from_list(c);
  Construction b(inst, m);
  std::vector<std::uint32_t> s, s2;
  for (std::size_t i = 1; i <= n; ++i) s.push_back(b.add("S" + std::to_string(i)));
  for (std::size_t i = 1; i <= n; ++i) s2.push_back(b.add("S" + std::to_string(i) + "'"));
  b.add("d");
  for (std::uint32_t e = 1; e <= 3 * k; ++e) b.score(e, 0, 1);
  const bool full = a1 <= 2 * (a1 - a5);  // min(a1, 2(a1 - a5)) = a1
  for (std::size_t i = 0; i < n; ++i) {
    if (full) {
      b.score(s[i], 0, 1);
    } else {
      b.score(s[i], 0, 2);
      b.score(s[i], m - 2, -2);
    }
    b.score(s2[i], 0, 1);
    b.score(s2[i], m - 2, -1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = inst.triples[i];
    b.offer(b.vote({}, {s2[i], s[i]}));
    b.offer(b.vote({}, {s[i], b.x(t[0])}));
    b.offer(b.vote({}, {s[i], b.y(t[1], k)}));
    b.offer(b.vote({}, {s2[i], b.z(t[2], k)}));
  }
  return b.finish(vector, n + 2 * k, n + 2 * k, ReductionKind::Case4, true);
}

DualCheck dual_check(const ThreeDMInstance& instance, const ReductionOutput& output, const BruteForceLimits& limits) {
  DualCheck check;
  check.threedm_positive = solve_3dm_brute(instance).has_value();
  check.ccav_positive = solve_brute_force(output.instance, output.vector, limits).decision;
  return check;
}

}  // namespace psr
