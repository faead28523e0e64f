#include <string>

#include "psr/error.hpp"
#include "psr/solvers.hpp"
#include "psr/vectors.hpp"

namespace psr {

std::string_view method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::Auto: return "auto";
    case SolveMethod::BruteForce: return "brute";
    case SolveMethod::ThreeApproval: return "three-approval";
    case SolveMethod::OneVeto: return "one-veto";
    case SolveMethod::TwoVeto: return "two-veto";
    case SolveMethod::TwoTop: return "two-top";
    case SolveMethod::ApproveVeto: return "approve-veto";
  }
  return "?";
}

SolveMethod method_from_name(std::string_view name) {
  for (auto m : {SolveMethod::Auto, SolveMethod::BruteForce, SolveMethod::ThreeApproval, SolveMethod::OneVeto,
                 SolveMethod::TwoVeto, SolveMethod::TwoTop, SolveMethod::ApproveVeto}) {
    if (method_name(m) == name) return m;
  }
  throw InvalidArgument("unknown solve method '" + std::string(name) + "'");
}

namespace {

SolveMethod method_for(PolyCase kind) {
  switch (kind) {
    case PolyCase::ThreeApproval: return SolveMethod::ThreeApproval;
    case PolyCase::OneVeto: return SolveMethod::OneVeto;
    case PolyCase::TwoVeto: return SolveMethod::TwoVeto;
    case PolyCase::TwoTop: return SolveMethod::TwoTop;
    case PolyCase::ApproveVeto: return SolveMethod::ApproveVeto;
  }
  throw InternalError("unhandled polynomial case");
}

// Whether `vector` has the shape the named algorithm handles at this length.
bool shape_matches(SolveMethod method, const ScoringVector& vector) {
  const std::size_t m = vector.size();
  const NormalizedVector n = normalize(vector);
  switch (method) {
    case SolveMethod::ThreeApproval:
      return equivalent(vector, canonical_vector({PolyCase::ThreeApproval}, m));
    case SolveMethod::OneVeto:
      return equivalent(vector, canonical_vector({PolyCase::OneVeto}, m));
    case SolveMethod::TwoVeto:
      return equivalent(vector, canonical_vector({PolyCase::TwoVeto}, m));
    case SolveMethod::TwoTop:
      for (std::size_t i = 2; i < m; ++i)
        if (n[i] != 0) return false;
      return true;
    case SolveMethod::ApproveVeto:
      return m >= 3 && equivalent(vector, canonical_vector({PolyCase::ApproveVeto}, m));
    default:
      return true;
  }
}

SolveResult dispatch(SolveMethod method, const CCAVInstance& instance, const ScoringVector& vector,
                     const BruteForceLimits& limits) {
  switch (method) {
    case SolveMethod::ThreeApproval: return solve_k_approval(instance, 3);
    case SolveMethod::OneVeto: return solve_k_veto(instance, 1);
    case SolveMethod::TwoVeto: return solve_k_veto(instance, 2);
    case SolveMethod::TwoTop: {
      const NormalizedVector n = normalize(vector);
      const Rational alpha(n[0]), beta(vector.size() > 1 ? n[1] : Integer(0));
      return solve_two_top(instance, alpha, beta);
    }
    case SolveMethod::ApproveVeto: return solve_approve_veto(instance);
    default: return solve_brute_force(instance, vector, limits);
  }
}

SolveResult run(SolveMethod method, const CCAVInstance& instance, const ScoringVector& vector,
                const BruteForceLimits& limits) {
  SolveResult result = dispatch(method, instance, vector, limits);
  // Algorithms certify under their canonical vector; re-check under the real one.
  if (result.decision && !preferred_wins(instance, *result.witness, vector))
    throw InternalError(result.method + ": witness fails under the generator's own vector");
  return result;
}

}  // namespace

SolveResult solve(const CCAVInstance& instance, const GeneratorSpec& spec, SolveMethod method,
                  const BruteForceLimits& limits) {
  instance.validate();
  const ScoringVector vector = expand(spec, instance.candidates.size());
  if (method == SolveMethod::Auto) {
    SolveMethod chosen = SolveMethod::BruteForce;
    if (!std::holds_alternative<TabulatedSpec>(spec)) {
      const Classification c = classify(spec);
      if (const auto* poly = std::get_if<PolyTime>(&c.outcome)) {
        // Small lengths may fall outside the stable shape (exceptions, m < 3).
        const SolveMethod candidate = method_for(poly->kind);
        if (shape_matches(candidate, vector)) chosen = candidate;
      }
    }
    return run(chosen, instance, vector, limits);
  }
  if (!shape_matches(method, vector))
    throw InvalidArgument("scoring vector does not have the shape required by method '" +
                          std::string(method_name(method)) + "'");
  return run(method, instance, vector, limits);
}

}  // namespace psr
