#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "psr/core.hpp"
#include "psr/vectors.hpp"

namespace psr {

/// Family of the shape (prefix..., middle, ..., middle, suffix...). Below the
/// stable length |prefix|+|suffix| the vector keeps the first prefix
/// coefficients and then the trailing suffix coefficients, so every length
/// arises from the previous one by a single insertion. `exceptions` override
/// specific small lengths.
struct PatternSpec {
  std::vector<Rational> prefix;
  Rational middle;
  std::vector<Rational> suffix;
  std::map<std::size_t, ScoringVector> exceptions;
};

enum class BuiltinKind { Borda, Dowdall, KApproval, KVeto };

struct BuiltinSpec {
  BuiltinKind kind = BuiltinKind::Borda;
  unsigned k = 0;  // used by KApproval / KVeto
};

/// Explicit finite table; vector i has length family[0].size() + i.
struct TabulatedSpec {
  VectorFamily family;
};

using GeneratorSpec = std::variant<PatternSpec, BuiltinSpec, TabulatedSpec>;

/// Throws InvalidArgument when a spec violates its structural invariants.
void check_spec(const GeneratorSpec& spec);

/// The scoring vector for `m` candidates. Throws InvalidArgument when the
/// spec cannot produce a valid vector of that length.
ScoringVector expand(const GeneratorSpec& spec, std::size_t m);

struct ValidationReport {
  std::size_t checked_up_to = 0;
  bool monotone = true;
  bool pure = false;
  bool flexible_pure = false;
  std::vector<std::string> failures;
};

ValidationReport validate(const GeneratorSpec& spec, std::size_t check_up_to);

enum class PolyCase { ThreeApproval, OneVeto, TwoVeto, TwoTop, ApproveVeto };

/// Which hardness construction covers an NP-complete family.
enum class HardnessWitness {
  ManyCoefficients,     // α4 > α(m-2) for some m
  ThreeTop,             // (α, β, γ, 0, ..., 0), α > γ > 0
  SecondAboveFourth,    // (α1, α2, α3, α4, ..., α4, α5, 0), α2 > α4 > 0
  TopOverFlat,          // (α1, α2, ..., α2, 0), α1 ∉ {α2, 2α2}
  TopOverMiddleOverFifth,  // (α1, α2, ..., α2, α5, 0), α1 > α2 > α5
  FlatOverFifth,        // (α1, ..., α1, α5, 0), α1 > α5 > 0
};

struct PolyTime {
  PolyCase kind;
  Rational alpha = 0;  // TwoTop coefficients (normalized)
  Rational beta = 0;
  friend bool operator==(const PolyTime&, const PolyTime&) = default;
};

struct NPComplete {
  HardnessWitness witness;
  friend bool operator==(const NPComplete&, const NPComplete&) = default;
};

struct Classification {
  std::variant<PolyTime, NPComplete> outcome;
  std::size_t stable_length = 0;
  /// Normalized vector at the stable length the decision was made on.
  NormalizedVector stable_vector;

  bool polynomial() const { return std::holds_alternative<PolyTime>(outcome); }
};

/// Stable candidate count from which a pattern family's shape no longer changes.
std::size_t stable_length(const GeneratorSpec& spec);

/// Places a pure (or flexible-pure) pattern/builtin family in the CCAV
/// complexity dichotomy. Throws Unsupported for tabulated specs and
/// InvalidArgument for specs that are not flexible-pure up to the stable length.
Classification classify(const GeneratorSpec& spec);

/// Wire tags: "ThreeApproval", ..., and "Thm48" ... "Thm410_4".
std::string_view tag(PolyCase kind);
std::string_view tag(HardnessWitness witness);
PolyCase poly_case_from_tag(std::string_view text);
HardnessWitness hardness_witness_from_tag(std::string_view text);

/// Canonical vector of a polynomial case at `m` candidates.
ScoringVector canonical_vector(const PolyTime& poly, std::size_t m);

std::string_view builtin_name(BuiltinKind kind);
BuiltinKind builtin_from_name(std::string_view name);

}  // namespace psr
