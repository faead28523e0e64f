#include "psr/io.hpp"

#include "psr/error.hpp"

namespace psr {

namespace {

const Json& field(const Json& object, const char* name) {
  if (!object.is_object()) throw ParseError("expected a JSON object");
  const auto it = object.find(name);
  if (it == object.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

const Json& array_field(const Json& object, const char* name) {
  const Json& value = field(object, name);
  if (!value.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  return value;
}

std::string string_of(const Json& value, const char* what) {
  if (!value.is_string()) throw ParseError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

std::uint64_t count_of(const Json& value, const char* what) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0))
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return value.get<std::uint64_t>();
}

std::vector<Rational> rationals_from_json(const Json& value) {
  if (!value.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& item : value) out.push_back(rational_from_json(item));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json envelope(std::string_view kind, Json payload) {
  return Json{{"format_version", kFormatVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

Json unwrap(const Json& document, std::string_view kind) {
  if (!document.is_object() || !document.contains("format_version")) return document;
  if (string_of(document["format_version"], "format_version") != kFormatVersion)
    throw ParseError("unsupported format_version");
  if (string_of(field(document, "kind"), "kind") != kind)
    throw ParseError("expected a document of kind '" + std::string(kind) + "'");
  return field(document, "payload");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Rational> parse_vector_literal(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  throw ParseError("rationals must be strings \"p/q\" or integers");
}

Json votes_to_json(const CandidateList& candidates, const VoteMultiset& votes) {
  Json out = Json::array();
  for (const auto& e : votes.entries()) {
    Json order = Json::array();
    for (auto c : e.order) order.push_back(candidates.name(c));
    Json vote{{"order", std::move(order)}};
    if (e.count != 1) vote["count"] = e.count;
    out.push_back(std::move(vote));
  }
  return out;
}

namespace {

// Model-level validation failures in a document are reported as parse errors.
template <class F>
auto structural(F&& f) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

VoteMultiset votes_from_json(const Json& value, const CandidateList& candidates) {
  if (!value.is_array()) throw ParseError("votes must be an array");
  VoteMultiset out;
  for (const auto& vote : value) {
    Ranking order;
    for (const auto& id : array_field(vote, "order")) {
      const auto index = candidates.find(string_of(id, "candidate id"));
      if (!index) throw ParseError("vote names unknown candidate '" + id.get<std::string>() + "'");
      order.push_back(static_cast<std::uint32_t>(*index));
    }
    const std::uint64_t count = vote.contains("count") ? count_of(vote["count"], "count") : 1;
    if (count == 0) throw ParseError("vote count must be positive");
    out.add(std::move(order), count);
  }
  structural([&] { check_votes(candidates.size(), out); });
  return out;
}

namespace {

CandidateList candidates_from_json(const Json& value) {
  std::vector<std::string> names;
  for (const auto& id : array_field(value, "candidates")) names.push_back(string_of(id, "candidate id"));
  return structural([&] { return CandidateList(std::move(names)); });
}

}  // namespace

Json to_json(const Election& election) {
  return Json{{"candidates", election.candidates.names()},
              {"votes", votes_to_json(election.candidates, election.votes)}};
}

Election election_from_json(const Json& value) {
  Election e;
  e.candidates = candidates_from_json(value);
  e.votes = votes_from_json(field(value, "votes"), e.candidates);
  return e;
}

Json to_json(const CCAVInstance& instance) {
  return Json{{"candidates", instance.candidates.names()},
              {"registered", votes_to_json(instance.candidates, instance.registered)},
              {"unregistered", votes_to_json(instance.candidates, instance.unregistered)},
              {"preferred", instance.candidates.name(instance.preferred)},
              {"budget", instance.budget}};
}

CCAVInstance ccav_from_json(const Json& value) {
  CCAVInstance inst;
  inst.candidates = candidates_from_json(value);
  inst.registered = votes_from_json(field(value, "registered"), inst.candidates);
  inst.unregistered = votes_from_json(field(value, "unregistered"), inst.candidates);
  const std::string preferred = string_of(field(value, "preferred"), "preferred");
  const auto index = inst.candidates.find(preferred);
  if (!index) throw ParseError("preferred candidate '" + preferred + "' is not a candidate");
  inst.preferred = static_cast<std::uint32_t>(*index);
  inst.budget = count_of(field(value, "budget"), "budget");
  structural([&] { inst.validate(); });
  return inst;
}

Json to_json(const GeneratorSpec& spec) {
  if (const auto* p = std::get_if<PatternSpec>(&spec)) {
    Json exceptions = Json::object();
    for (const auto& [m, v] : p->exceptions) exceptions[std::to_string(m)] = rationals_to_json(v.coefficients());
    return Json{{"kind", "pattern"},
                {"prefix", rationals_to_json(p->prefix)},
                {"middle", to_json(p->middle)},
                {"suffix", rationals_to_json(p->suffix)},
                {"exceptions", std::move(exceptions)}};
  }
  if (const auto* b = std::get_if<BuiltinSpec>(&spec)) {
    Json out{{"kind", "builtin"}, {"name", builtin_name(b->kind)}};
    if (b->kind == BuiltinKind::KApproval || b->kind == BuiltinKind::KVeto) out["k"] = b->k;
    return out;
  }
  Json family = Json::array();
  for (const auto& v : std::get<TabulatedSpec>(spec).family) family.push_back(rationals_to_json(v.coefficients()));
  return Json{{"kind", "tabulated"}, {"family", std::move(family)}};
}

GeneratorSpec generator_from_json(const Json& value) {
  const std::string kind = string_of(field(value, "kind"), "generator kind");
  GeneratorSpec spec;
  try {
    if (kind == "pattern") {
      PatternSpec p;
      if (value.contains("prefix")) p.prefix = rationals_from_json(value["prefix"]);
      p.middle = rational_from_json(field(value, "middle"));
      if (value.contains("suffix")) p.suffix = rationals_from_json(value["suffix"]);
      if (value.contains("exceptions")) {
        const Json& ex = value["exceptions"];
        if (!ex.is_object()) throw ParseError("exceptions must map lengths to vectors");
        for (const auto& [key, vec] : ex.items()) {
          const Integer m = parse_integer(key);
          if (m <= 0 || !m.fits_ulong_p()) throw ParseError("exception length must be a positive integer");
          p.exceptions.emplace(m.get_ui(), ScoringVector(rationals_from_json(vec)));
        }
      }
      spec = std::move(p);
    } else if (kind == "builtin") {
      BuiltinSpec b;
      b.kind = builtin_from_name(string_of(field(value, "name"), "builtin name"));
      if (b.kind == BuiltinKind::KApproval || b.kind == BuiltinKind::KVeto)
        b.k = static_cast<unsigned>(count_of(field(value, "k"), "k"));
      spec = b;
    } else if (kind == "tabulated") {
      TabulatedSpec t;
      const Json& family = array_field(value, "family");
      for (const auto& vec : family) t.family.emplace_back(rationals_from_json(vec));
      spec = std::move(t);
    } else {
      throw ParseError("unknown generator kind '" + kind + "'");
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid generator: ") + e.what());
  }
  try {
    check_spec(spec);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid generator: ") + e.what());
  }
  return spec;
}

Json to_json(const ThreeDMInstance& instance) {
  Json triples = Json::array();
  for (const auto& t : instance.triples)
    triples.push_back(Json::array({instance.x[t[0]], instance.y[t[1]], instance.z[t[2]]}));
  return Json{{"x", instance.x}, {"y", instance.y}, {"z", instance.z}, {"m", std::move(triples)}};
}

ThreeDMInstance threedm_from_json(const Json& value) {
  ThreeDMInstance inst;
  for (const auto& id : array_field(value, "x")) inst.x.push_back(string_of(id, "element"));
  for (const auto& id : array_field(value, "y")) inst.y.push_back(string_of(id, "element"));
  for (const auto& id : array_field(value, "z")) inst.z.push_back(string_of(id, "element"));
  auto lookup = [](const std::vector<std::string>& set, const Json& id) {
    const std::string name = string_of(id, "triple component");
    for (std::size_t i = 0; i < set.size(); ++i)
      if (set[i] == name) return static_cast<std::uint32_t>(i);
    throw ParseError("triple names unknown element '" + name + "'");
  };
  for (const auto& t : array_field(value, "m")) {
    if (!t.is_array() || t.size() != 3) throw ParseError("each triple must be an array of three element ids");
    inst.triples.push_back({lookup(inst.x, t[0]), lookup(inst.y, t[1]), lookup(inst.z, t[2])});
  }
  try {
    inst.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid 3DM instance: ") + e.what());
  }
  return inst;
}

Json to_json(const Classification& classification) {
  if (const auto* poly = std::get_if<PolyTime>(&classification.outcome)) {
    Json out{{"outcome", "poly"}, {"case", tag(poly->kind)}};
    if (poly->kind == PolyCase::TwoTop) {
      out["alpha"] = to_json(poly->alpha);
      out["beta"] = to_json(poly->beta);
    }
    return out;
  }
  return Json{{"outcome", "np-complete"}, {"witness", tag(std::get<NPComplete>(classification.outcome).witness)}};
}

Json to_json(const SolveResult& result, const CandidateList& candidates) {
  Json out{{"decision", result.decision}, {"method", result.method}};
  if (result.witness) out["witness"] = votes_to_json(candidates, *result.witness);
  return out;
}

Json to_json(const ValidationReport& report) {
  return Json{{"checked_up_to", report.checked_up_to},
              {"monotone", report.monotone},
              {"pure", report.pure},
              {"flexible_pure", report.flexible_pure},
              {"failures", report.failures}};
}

}  // namespace psr
