#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "psr/core.hpp"
#include "psr/generators.hpp"
#include "psr/hardness.hpp"
#include "psr/solvers.hpp"

namespace psr {

using Json = nlohmann::json;

/// Document kinds carried in the optional {format_version, kind, payload} envelope.
inline constexpr std::string_view kFormatVersion = "1";

Json envelope(std::string_view kind, Json payload);
/// Accepts a bare payload or an envelope of the given kind. Throws
/// ParseError on a version or kind mismatch.
Json unwrap(const Json& document, std::string_view kind);
/// Parses JSON text; syntax errors become ParseError.
Json parse_json(std::string_view text);

/// Comma-separated rationals, e.g. "1,1/2,1/3".
std::vector<Rational> parse_vector_literal(std::string_view text);

/// Rationals are written as canonical strings; integers and strings are read.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json votes_to_json(const CandidateList& candidates, const VoteMultiset& votes);
VoteMultiset votes_from_json(const Json& value, const CandidateList& candidates);

Json to_json(const Election& election);
Election election_from_json(const Json& value);

Json to_json(const CCAVInstance& instance);
CCAVInstance ccav_from_json(const Json& value);

Json to_json(const GeneratorSpec& spec);
GeneratorSpec generator_from_json(const Json& value);

Json to_json(const ThreeDMInstance& instance);
ThreeDMInstance threedm_from_json(const Json& value);

Json to_json(const Classification& classification);
Json to_json(const SolveResult& result, const CandidateList& candidates);
Json to_json(const ValidationReport& report);

}  // namespace psr
