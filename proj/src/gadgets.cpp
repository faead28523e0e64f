#include <map>

#include "psr/error.hpp"
#include "psr/hardness.hpp"

namespace psr {

VoteMultiset transfer_votes(const ScoringVector& vector, std::size_t i, std::size_t j, std::size_t kpos,
                            std::size_t lpos) {
  const std::size_t m = vector.size();
  if (i >= m || j >= m || kpos >= m || lpos >= m) throw InvalidArgument("transfer_votes: index out of range");
  if (i == j) throw InvalidArgument("transfer_votes: the two candidates must differ");
  if (kpos == lpos) throw InvalidArgument("transfer_votes: the two positions must differ");

  // v1: c_i at lpos, c_j at kpos, everybody else in index order.
  Ranking first(m);
  std::vector<bool> placed(m, false);
  first[lpos] = static_cast<std::uint32_t>(i);
  first[kpos] = static_cast<std::uint32_t>(j);
  placed[lpos] = placed[kpos] = true;
  std::uint32_t next = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    if (placed[pos]) continue;
    while (next == i || next == j) ++next;
    first[pos] = next++;
  }
  // The m rotations give every candidate every position once; swapping c_i
  // and c_j in v1 then moves alpha_k - alpha_l from c_j to c_i.
  VoteMultiset votes;
  Ranking current = first;
  for (std::size_t r = 0; r < m; ++r) {
    if (r == 0) {
      Ranking swapped = current;
      std::swap(swapped[lpos], swapped[kpos]);
      votes.add(swapped);
    } else {
      votes.add(current);
    }
    Ranking rotated(m);
    for (std::size_t pos = 0; pos < m; ++pos) rotated[(pos + 1) % m] = current[pos];
    current = std::move(rotated);
  }
  return votes;
}

RealizationResult realize_scores(const ScoringVector& vector, const std::vector<std::vector<Integer>>& targets,
                                 std::uint64_t guard) {
  const std::size_t m = vector.size();
  if (m < 3) throw InvalidArgument("realize_scores needs at least 3 candidates");
  if (vector[m - 1] != 0 || vector[0] <= 0)
    throw InvalidArgument("realize_scores needs a vector with last coefficient 0 and a positive first one");
  if (targets.size() != m - 1) throw InvalidArgument("realize_scores: one target row per non-dummy candidate");
  for (const auto& row : targets)
    if (row.size() != m) throw InvalidArgument("realize_scores: target rows must have one entry per position");
  const std::size_t dummy = m - 1;

  // Number of times alpha_pos is transferred from the dummy to candidate c.
  std::map<std::pair<std::size_t, std::size_t>, Integer> transfers;
  for (std::size_t c = 0; c < dummy; ++c) {
    for (std::size_t pos = 0; pos + 1 < m; ++pos) {  // alpha_m = 0 moves nothing
      const Integer& a = targets[c][pos];
      if (a > 0) {
        transfers[{c, pos}] += a;
      } else if (a < 0) {
        // Lowering c relative to everyone: raise every other non-dummy instead.
        for (std::size_t other = 0; other < dummy; ++other)
          if (other != c) transfers[{other, pos}] -= a;
      }
    }
    transfers[{c, 0}] += Integer(std::to_string(guard + 1));
  }

  RealizationResult result;
  for (const auto& [key, times] : transfers) {
    if (times == 0) continue;
    if (!times.fits_ulong_p()) throw InvalidArgument("realize_scores: target multipliers too large");
    const VoteMultiset block = transfer_votes(vector, key.first, dummy, key.second, dummy);
    for (const auto& e : block.entries()) result.votes.add(e.order, e.count * times.get_ui());
  }

  const auto scores = tally(m, result.votes, vector);
  auto relative = [&](std::size_t c) {
    Rational sum = 0;
    for (std::size_t pos = 0; pos < m; ++pos) sum += Rational(targets[c][pos]) * vector[pos];
    return sum;
  };
  result.offset = scores[0] - relative(0);
  const Rational margin = Rational(Integer(std::to_string(guard))) * vector[0];
  for (std::size_t c = 0; c < dummy; ++c) {
    if (scores[c] != result.offset + relative(c)) throw InternalError("realize_scores: score table mismatch");
    if (!(scores[c] > scores[dummy] + margin)) throw InternalError("realize_scores: dummy guard violated");
  }
  return result;
}

}  // namespace psr
