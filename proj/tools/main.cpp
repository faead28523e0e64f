// Command-line front end. Exit codes: 0 success (solve: decision yes),
// 1 solve decision no, 2 malformed input, 3 unsupported input, 4 search
// bound exceeded, 5 reduction precondition failed, 6 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "psr/error.hpp"
#include "psr/hardness.hpp"
#include "psr/io.hpp"
#include "psr/vectors.hpp"

namespace {

using namespace psr;

enum Exit { kOk = 0, kNo = 1, kBadInput = 2, kUnsupported = 3, kBound = 4, kPrecondition = 5, kInternal = 6 };

// Errors while building a reduction are precondition failures, not bad input.
struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_document(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_json(buffer.str());
}

void print(const Json& value) { std::cout << value.dump() << '\n'; }

int cmd_normalize(const std::string& literal) {
  const NormalizedVector n = normalize(ScoringVector(parse_vector_literal(literal)));
  std::string out = "[";
  for (std::size_t i = 0; i < n.size(); ++i) out += (i ? "," : "") + n[i].get_str();
  std::cout << out << "]\n";
  return kOk;
}

int cmd_classify(const std::string& path) {
  const GeneratorSpec spec = generator_from_json(unwrap(read_document(path), "generator"));
  print(to_json(classify(spec)));
  return kOk;
}

int cmd_validate(const std::string& path, std::size_t up_to) {
  const GeneratorSpec spec = generator_from_json(unwrap(read_document(path), "generator"));
  print(to_json(validate(spec, up_to)));
  return kOk;
}

int cmd_solve(const std::string& instance_path, const std::string& spec_path, const std::string& method,
              const BruteForceLimits& limits) {
  const CCAVInstance inst = ccav_from_json(unwrap(read_document(instance_path), "ccav"));
  const GeneratorSpec spec = generator_from_json(unwrap(read_document(spec_path), "generator"));
  const SolveResult result = solve(inst, spec, method_from_name(method), limits);
  print(to_json(result, inst.candidates));
  return result.decision ? kOk : kNo;
}

Json winners_json(const Election& e, const ScoringVector& v) {
  Json out = Json::array();
  for (const auto& w : winners(evaluate(e, v))) out.push_back(w);
  return out;
}

int cmd_distinguish(const std::string& a, const std::string& b) {
  const ScoringVector v1(parse_vector_literal(a)), v2(parse_vector_literal(b));
  if (v1.size() != v2.size()) throw ParseError("vectors differ in length");
  const auto election = distinguish(v1, v2);
  if (!election) {
    print(Json{{"equivalent", true}});
    return kOk;
  }
  print(Json{{"equivalent", false},
             {"election", envelope("election", to_json(*election))},
             {"verification", {{"winners_v1", winners_json(*election, v1)}, {"winners_v2", winners_json(*election, v2)}}}});
  return kOk;
}

ReductionOutput build_reduction(const std::string& kind, const ThreeDMInstance& inst, const std::string& generator,
                                const std::string& coefficients) {
  auto spec = [&] {
    if (generator.empty()) throw ParseError("--generator is required for case '" + kind + "'");
    return generator_from_json(unwrap(read_document(generator), "generator"));
  };
  auto coeffs = [&](std::size_t want) {
    if (coefficients.empty()) throw ParseError("--coefficients is required for case '" + kind + "'");
    auto c = parse_vector_literal(coefficients);
    if (c.size() != want)
      throw ParseError("case '" + kind + "' takes " + std::to_string(want) + " coefficients");
    return c;
  };
  if (kind == "veto-style" || kind == "approval-style" || kind == "auto") {
    const GeneratorSpec s = spec();
    try {
      if (kind == "veto-style") return reduce_veto_style(s, inst);
      if (kind == "approval-style") return reduce_approval_style(s, inst);
      return reduce_auto(s, inst);
    } catch (const InvalidArgument& e) {
      throw PreconditionFailed(e.what());
    }
  }
  std::vector<Rational> c;
  if (kind == "three-coeff") c = coeffs(3);
  else if (kind == "case1") c = coeffs(5);
  else if (kind == "case2") c = coeffs(2);
  else if (kind == "case3") c = coeffs(3);
  else if (kind == "case4") c = coeffs(2);
  else throw ParseError("unknown reduction case '" + kind + "'");
  try {
    if (kind == "three-coeff") return reduce_three_coeff(c[0], c[1], c[2], inst);
    if (kind == "case1") return reduce_case1({c[0], c[1], c[2], c[3], c[4]}, inst);
    if (kind == "case2") return reduce_case2(c[0], c[1], inst);
    if (kind == "case3") return reduce_case3(c[0], c[1], c[2], inst);
    return reduce_case4(c[0], c[1], inst);
  } catch (const InvalidArgument& e) {
    throw PreconditionFailed(e.what());
  }
}

int cmd_reduce(const std::string& path, const std::string& kind, const std::string& generator,
               const std::string& coefficients, bool check, const BruteForceLimits& limits) {
  const ThreeDMInstance inst = threedm_from_json(unwrap(read_document(path), "threedm"));
  const ReductionOutput out = build_reduction(kind, inst, generator, coefficients);
  Json doc = envelope("ccav", to_json(out.instance));
  doc["reduction"] = reduction_name(out.kind);
  doc["guaranteed"] = out.guaranteed;
  doc["candidate_count"] = out.instance.candidates.size();
  Json vector = Json::array();
  for (const auto& a : out.vector.coefficients()) vector.push_back(to_json(a));
  doc["vector"] = std::move(vector);
  if (check) {
    const DualCheck d = dual_check(inst, out, limits);
    doc["check"] = {{"threedm_positive", d.threedm_positive}, {"ccav_positive", d.ccav_positive}, {"agree", d.agree()}};
  }
  print(doc);
  return kOk;
}

int cmd_gen3dm(std::size_t k, std::size_t n, bool planted, std::uint64_t seed) {
  print(envelope("threedm", to_json(gen_3dm(k, n, planted, seed))));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positional scoring rules: normalization, CCAV classification, solvers and 3DM reductions"};
  app.require_subcommand(1);

  std::string vector_literal, v1, v2, spec_path, instance_path, method = "auto", threedm_path, reduce_case,
                                                                    generator_path, coefficients;
  std::size_t up_to = 12, k = 2, n = 4;
  std::uint64_t seed = 0;
  bool planted = false, check = false;
  BruteForceLimits limits;

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the normalized form of a scoring vector");
  normalize_cmd->add_option("--vector", vector_literal, "Comma-separated rationals, e.g. 1,1/2,1/3")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a generator's CCAV complexity");
  classify_cmd->add_option("spec", spec_path, "Generator JSON file")->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check monotonicity and purity of a generator");
  validate_cmd->add_option("spec", spec_path, "Generator JSON file")->required();
  validate_cmd->add_option("--up-to", up_to, "Largest candidate count to check");

  auto* solve_cmd = app.add_subcommand("solve", "Decide a CCAV instance (exit 0 = yes, 1 = no)");
  solve_cmd->add_option("instance", instance_path, "CCAV JSON file")->required();
  solve_cmd->add_option("spec", spec_path, "Generator JSON file")->required();
  solve_cmd->add_option("--method", method,
                        "auto, brute, three-approval, one-veto, two-veto, two-top or approve-veto");
  solve_cmd->add_option("--max-distinct", limits.max_distinct_votes, "Brute-force bound on distinct votes");
  solve_cmd->add_option("--max-subsets", limits.max_subsets, "Brute-force bound on enumerated subsets");

  auto* distinguish_cmd = app.add_subcommand("distinguish", "Build an election separating two vectors");
  distinguish_cmd->add_option("--v1", v1, "First vector")->required();
  distinguish_cmd->add_option("--v2", v2, "Second vector")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a 3DM instance to CCAV");
  reduce_cmd->add_option("threedm", threedm_path, "3DM JSON file")->required();
  reduce_cmd->add_option("--case", reduce_case,
                         "veto-style, approval-style, auto, three-coeff, case1, case2, case3 or case4")
      ->required();
  reduce_cmd->add_option("--generator", generator_path, "Generator JSON file (veto-style, approval-style, auto)");
  reduce_cmd->add_option("--coefficients", coefficients, "Coefficients for three-coeff and case1..case4");
  reduce_cmd->add_flag("--check", check, "Run both brute-force oracles and report agreement");

  auto* gen_cmd = app.add_subcommand("gen3dm", "Generate a random 3DM instance");
  gen_cmd->add_option("--k", k, "Size of X, Y and Z");
  gen_cmd->add_option("--n", n, "Number of triples");
  gen_cmd->add_flag("--planted", planted, "Hide a cover in the instance");
  gen_cmd->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(vector_literal);
    if (*classify_cmd) return cmd_classify(spec_path);
    if (*validate_cmd) return cmd_validate(spec_path, up_to);
    if (*solve_cmd) return cmd_solve(instance_path, spec_path, method, limits);
    if (*distinguish_cmd) return cmd_distinguish(v1, v2);
    if (*reduce_cmd) {
      // Reduction outputs can exceed the default brute-force bounds.
      return cmd_reduce(threedm_path, reduce_case, generator_path, coefficients, check, BruteForceLimits{32, 10'000'000});
    }
    if (*gen_cmd) {
      try {
        return cmd_gen3dm(k, n, planted, seed);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
    }
  } catch (const PreconditionFailed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Unsupported& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBound;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
