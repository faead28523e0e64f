#include <limits>
#include <random>
#include <set>
#include <unordered_set>

#include "psr/error.hpp"
#include "psr/hardness.hpp"

namespace psr {

void ThreeDMInstance::validate() const {
  const std::size_t n = x.size();
  if (n == 0) throw InvalidArgument("3DM: X must be non-empty");
  if (y.size() != n || z.size() != n) throw InvalidArgument("3DM: X, Y and Z must have equal size");
  std::unordered_set<std::string> seen;
  for (const auto* set : {&x, &y, &z}) {
    for (const auto& name : *set) {
      if (name.empty()) throw InvalidArgument("3DM: empty element name");
      if (!seen.insert(name).second) throw InvalidArgument("3DM: element '" + name + "' appears twice");
    }
  }
  std::set<std::array<std::uint32_t, 3>> distinct;
  for (const auto& t : triples) {
    for (auto c : t)
      if (c >= n) throw InvalidArgument("3DM: triple component out of range");
    if (!distinct.insert(t).second) throw InvalidArgument("3DM: duplicate triple");
  }
}

bool is_cover(const ThreeDMInstance& instance, const Cover& cover) {
  const std::size_t k = instance.k();
  if (cover.size() != k) return false;
  std::vector<bool> used(3 * k, false);
  std::set<std::size_t> indices;
  for (auto i : cover) {
    if (i >= instance.triples.size() || !indices.insert(i).second) return false;
    for (std::size_t d = 0; d < 3; ++d) {
      const std::size_t slot = d * k + instance.triples[i][d];
      if (used[slot]) return false;
      used[slot] = true;
    }
  }
  return true;
}

namespace {

bool search_cover(const ThreeDMInstance& inst, std::size_t from, std::vector<bool>& used, Cover& chosen) {
  const std::size_t k = inst.k();
  if (chosen.size() == k) return true;
  // Not enough triples left to finish.
  if (inst.triples.size() - from < k - chosen.size()) return false;
  for (std::size_t i = from; i < inst.triples.size(); ++i) {
    const auto& t = inst.triples[i];
    if (used[t[0]] || used[k + t[1]] || used[2 * k + t[2]]) continue;
    used[t[0]] = used[k + t[1]] = used[2 * k + t[2]] = true;
    chosen.push_back(i);
    if (search_cover(inst, i + 1, used, chosen)) return true;
    chosen.pop_back();
    used[t[0]] = used[k + t[1]] = used[2 * k + t[2]] = false;
  }
  return false;
}

// Uniform draw from [0, bound) by rejection, so the stream is the same on
// every standard library (std::uniform_int_distribution is not).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[draw(rng, i)]);
}

}  // namespace

std::optional<Cover> solve_3dm_brute(const ThreeDMInstance& instance, std::size_t max_triples) {
  instance.validate();
  if (instance.triples.size() > max_triples)
    throw BoundExceeded("3DM brute force: " + std::to_string(instance.triples.size()) + " triples exceed the limit of " +
                        std::to_string(max_triples));
  std::vector<bool> used(3 * instance.k(), false);
  Cover chosen;
  if (!search_cover(instance, 0, used, chosen)) return std::nullopt;
  if (!is_cover(instance, chosen)) throw InternalError("3DM brute force produced an invalid cover");
  return chosen;
}

ThreeDMInstance gen_3dm(std::size_t k, std::size_t n, bool planted, std::uint64_t seed) {
  if (k == 0) throw InvalidArgument("gen3dm: k must be positive");
  if (k > 1000) throw InvalidArgument("gen3dm: k too large");
  if (n > k * k * k) throw InvalidArgument("gen3dm: n exceeds k^3 distinct triples");
  if (planted && n < k) throw InvalidArgument("gen3dm: a planted cover needs n >= k");
  std::mt19937_64 rng(seed);
  ThreeDMInstance inst;
  for (std::size_t i = 1; i <= k; ++i) {
    inst.x.push_back("x" + std::to_string(i));
    inst.y.push_back("y" + std::to_string(i));
    inst.z.push_back("z" + std::to_string(i));
  }
  std::set<std::array<std::uint32_t, 3>> chosen;
  if (planted) {
    std::vector<std::uint32_t> py(k), pz(k);
    for (std::uint32_t i = 0; i < k; ++i) py[i] = pz[i] = i;
    shuffle(py, rng);
    shuffle(pz, rng);
    for (std::uint32_t i = 0; i < k; ++i) {
      inst.triples.push_back({i, py[i], pz[i]});
      chosen.insert(inst.triples.back());
    }
  }
  while (inst.triples.size() < n) {
    const std::array<std::uint32_t, 3> t{static_cast<std::uint32_t>(draw(rng, k)),
                                         static_cast<std::uint32_t>(draw(rng, k)),
                                         static_cast<std::uint32_t>(draw(rng, k))};
    if (chosen.insert(t).second) inst.triples.push_back(t);
  }
  shuffle(inst.triples, rng);
  return inst;
}

}  // namespace psr
