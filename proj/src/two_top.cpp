#include <functional>
#include <string>

#include "psr/error.hpp"
#include "psr/solvers.hpp"
#include "solver_support.hpp"

namespace psr {

namespace {

const std::string kMethod = "two-top";

Integer big(std::uint64_t n) { return Integer(std::to_string(n)); }

class TwoTopSolver {
 public:
  TwoTopSolver(const CCAVInstance& instance, Integer a, Integer b)
      : instance_(instance), a_(std::move(a)), b_(std::move(b)), m_(instance.candidates.size()) {
    std::vector<Integer> w(m_, 0);
    w[0] = a_;
    if (m_ > 1) w[1] = b_;
    weights_ = w;
    base_.assign(m_, 0);
    detail::add_integer_scores(instance.registered, weights_, base_);
    groups_[0].resize(m_);
    groups_[1].resize(m_);
    avail_[0].assign(m_, 0);
    avail_[1].assign(m_, 0);
    const auto& entries = instance.unregistered.entries();
    for (std::size_t i = 0; i < entries.size() && m_ > 1; ++i) {
      const auto& order = entries[i].order;
      // V1: p first, grouped by the second candidate; V2: p second, grouped by the first.
      const int side = order[0] == instance.preferred ? 0 : order[1] == instance.preferred ? 1 : -1;
      if (side < 0) continue;
      const auto rival = side == 0 ? order[1] : order[0];
      groups_[side][rival].push_back(i);
      avail_[side][rival] += entries[i].count;
    }
  }

  const std::vector<Integer>& weights() const { return weights_; }

  std::optional<VoteMultiset> run(std::uint64_t ell) {
    const std::uint64_t k = instance_.budget;
    // Case 1: fewer than ell voters from V2, the rest from V1.
    std::vector<std::uint64_t> use2(m_, 0);
    std::optional<VoteMultiset> found;
    std::function<bool(std::uint32_t, std::uint64_t)> pick_v2 = [&](std::uint32_t c, std::uint64_t left) {
      if (c == m_) {
        std::vector<std::uint64_t> use1(m_, 0);
        std::uint64_t used = 0;
        for (auto x : use2) used += x;
        found = extend(0, use1, use2, k - used);
        return found.has_value();
      }
      for (std::uint64_t x = 0; x <= std::min(left, avail_[1][c]); ++x) {
        use2[c] = x;
        if (pick_v2(c + 1, left - x)) return true;
      }
      use2[c] = 0;
      return false;
    };
    if (pick_v2(0, std::min(ell - 1, k))) return found;

    // Case 2: fewer than ell distinct V1 voters (by second candidate) stay unused.
    std::vector<std::uint32_t> rivals;
    for (std::uint32_t c = 0; c < m_; ++c)
      if (avail_[0][c] > 0) rivals.push_back(c);
    std::vector<std::uint64_t> unused(m_, 0);
    std::function<bool(std::size_t, std::uint64_t)> pick_unused = [&](std::size_t from, std::uint64_t slots) {
      std::vector<std::uint64_t> use1(m_, 0);
      std::uint64_t used = 0;
      for (std::uint32_t c = 0; c < m_; ++c) {
        use1[c] = avail_[0][c] - unused[c];
        used += use1[c];
      }
      if (used <= k) {
        found = extend(1, use1, std::vector<std::uint64_t>(m_, 0), k - used);
        if (found) return true;
      }
      if (slots == 0) return false;
      for (std::size_t r = from; r < rivals.size(); ++r) {
        const auto c = rivals[r];
        for (std::uint64_t u = 1; u <= avail_[0][c]; ++u) {
          unused[c] = u;
          if (pick_unused(r + 1, slots - 1)) return true;
        }
        unused[c] = 0;
      }
      return false;
    };
    if (pick_unused(0, ell - 1)) return found;
    return std::nullopt;
  }

 private:
  // Keep the chosen votes and add up to `budget` more from side
  // `side` (0 = V1, 1 = V2). For each total j the rivals' caps are fixed, so
  // filling greedily decides feasibility.
  std::optional<VoteMultiset> extend(int side, std::vector<std::uint64_t> use1, std::vector<std::uint64_t> use2,
                                     std::uint64_t budget) {
    const std::uint32_t p = instance_.preferred;
    std::vector<Integer> s = base_;
    for (std::uint32_t c = 0; c < m_; ++c) {
      s[p] += a_ * big(use1[c]) + b_ * big(use2[c]);
      s[c] += b_ * big(use1[c]) + a_ * big(use2[c]);
    }
    auto& use = side == 0 ? use1 : use2;
    const Integer& p_gain = side == 0 ? a_ : b_;
    const Integer& c_gain = side == 0 ? b_ : a_;
    std::uint64_t room = 0;
    for (std::uint32_t c = 0; c < m_; ++c) room += avail_[side][c] - use[c];
    const std::uint64_t top = std::min(budget, room);
    for (std::uint64_t j = 0; j <= top; ++j) {
      const Integer final_p = s[p] + p_gain * big(j);
      std::vector<std::uint64_t> add(m_, 0);
      std::uint64_t remaining = j;
      bool ok = true;
      for (std::uint32_t c = 0; c < m_ && ok; ++c) {
        if (c == p) continue;
        if (s[c] > final_p) {
          ok = false;
          break;
        }
        const std::uint64_t free = avail_[side][c] - use[c];
        if (free == 0 || remaining == 0) continue;
        std::uint64_t cap = std::min(free, remaining);
        if (c_gain > 0) {
          const Integer headroom = (final_p - s[c]) / c_gain;
          if (headroom < big(cap)) cap = headroom.get_ui();
        }
        add[c] = cap;
        remaining -= cap;
      }
      if (!ok || remaining > 0) continue;
      for (std::uint32_t c = 0; c < m_; ++c) use[c] += add[c];
      VoteMultiset witness;
      for (std::uint32_t c = 0; c < m_; ++c) {
        if (use1[c] > 0) detail::take_from(instance_, groups_[0][c], use1[c], witness);
        if (use2[c] > 0) detail::take_from(instance_, groups_[1][c], use2[c], witness);
      }
      return witness;
    }
    return std::nullopt;
  }

  const CCAVInstance& instance_;
  Integer a_, b_;
  std::size_t m_;
  std::vector<Integer> weights_;
  std::vector<Integer> base_;
  std::vector<std::vector<std::size_t>> groups_[2];
  std::vector<std::uint64_t> avail_[2];
};

}  // namespace

SolveResult solve_two_top(const CCAVInstance& instance, const Rational& alpha, const Rational& beta) {
  if (beta < 0 || alpha < beta) throw InvalidArgument("two-top solver needs alpha >= beta >= 0");
  instance.validate();
  if (alpha == 0) {
    std::vector<Rational> zeros(instance.candidates.size(), 0);
    return detail::certified(instance, ScoringVector(zeros), {}, kMethod);
  }
  if (beta == 0) return solve_k_approval(instance, 1);
  if (alpha == beta) return solve_k_approval(instance, 2);

  // Integer representatives of (alpha, beta): scale by the common denominator.
  const Rational pair[] = {alpha, beta};
  const Integer lcm = denominator_lcm(pair);
  const Rational sa = alpha * lcm, sb = beta * lcm;
  const Integer a = sa.get_num(), b = sb.get_num();
  Rational ratio(b, a - b);
  ratio.canonicalize();
  const Integer ell_big = ceil(ratio);
  const std::uint64_t ell = ell_big.get_ui();

  TwoTopSolver solver(instance, a, b);
  std::vector<Rational> coefficients(solver.weights().begin(), solver.weights().end());
  const ScoringVector vector(std::move(coefficients));
  if (instance.budget < ell) {
    auto found = detail::search_submultisets(instance, solver.weights(), instance.budget);
    if (!found) return detail::rejected(kMethod);
    return detail::certified(instance, vector, std::move(*found), kMethod);
  }
  auto found = solver.run(ell);
  if (!found) return detail::rejected(kMethod);
  return detail::certified(instance, vector, std::move(*found), kMethod);
}

}  // namespace psr
