#include "tarski/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "tarski/con_compare.hpp"
#include "tarski/error.hpp"
#include "tarski/refinement.hpp"

namespace tarski::cli {

using io::Json;

namespace {

struct Context {
  const Json& input;
  const Options& options;
  Json bounds = Json::object();
};

Action action_of(const Context& ctx, const char* key = "action") {
  return io::parse_action(io::field(ctx.input, key, ""), std::string("/") + key);
}

Json witness_json(const std::optional<Point>& w) { return w ? io::to_json(*w) : Json(nullptr); }

Json configurations_json(const std::vector<Configuration>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(io::to_json(c));
  return out;
}

Json describe_cells(const CellPartitionReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations) out.push_back(v.describe());
  return out;
}

// --- configurations and equations ------------------------------------------

Json con_compute(Context& ctx) {
  const Action action = action_of(ctx);
  const auto cs = compute_configurations(action, io::parse_pair(io::field(ctx.input, "pair", ""), "/pair", action));
  const auto cells = verify_cell_partition(cs);
  Json base = Json::array();
  for (const auto& b : cs.base_cells()) base.push_back(io::to_json(b));
  return {{"status", "ok"},
          {"configurations", configurations_json(cs.configurations())},
          {"count", cs.size()},
          {"base_cells", base},
          {"cell_partition", cells.ok() ? Json("ok") : Json(describe_cells(cells))}};
}

Json system_json(const LinearSystem& system) {
  Json rows = Json::array();
  for (const auto& l : system.labels) rows.push_back(l.describe());
  return {{"variables", configurations_json(system.variables)}, {"rows", rows}};
}

Json solve_report(const LinearSystem& system) {
  const auto result = solve_feasibility(system);
  Json out = system_json(system);
  out["pivots"] = result.pivots;
  if (result.feasible()) {
    out["status"] = "feasible";
    out["solution"] = io::to_json(result.solution);
    out["verified"] = verify_solution(system, result.solution).ok();
  } else {
    out["status"] = "infeasible";
    out["certificate"] = io::to_json(result.certificate);
    out["verified"] = verify_certificate(system, result.certificate).ok;
  }
  return out;
}

Json eq_solve(Context& ctx) {
  const Action action = action_of(ctx);
  const auto cs = compute_configurations(action, io::parse_pair(io::field(ctx.input, "pair", ""), "/pair", action));
  return solve_report(build_equations(cs));
}

Json eq_verify(Context& ctx) {
  const Action action = action_of(ctx);
  const auto cs = compute_configurations(action, io::parse_pair(io::field(ctx.input, "pair", ""), "/pair", action));
  const auto system = build_equations(cs);
  Json out = system_json(system);
  if (ctx.input.contains("solution")) {
    const auto f = io::parse_rationals(ctx.input["solution"], "/solution");
    const auto check = verify_solution(system, f);
    out["status"] = check.ok() ? "ok" : "violated";
    out["checked"] = "solution";
    if (!check.ok()) out["detail"] = check.detail;
    return out;
  }
  if (ctx.input.contains("certificate")) {
    const auto y = io::parse_rationals(ctx.input["certificate"], "/certificate");
    const auto check = verify_certificate(system, y);
    out["status"] = check.ok ? "ok" : "invalid";
    out["checked"] = "certificate";
    if (!check.ok) out["detail"] = check.reason;
    return out;
  }
  throw InputError("expected a \"solution\" or a \"certificate\"", "/");
}

RefinementMode parse_mode(const Json& j) {
  if (!j.is_string()) throw InputError("expected a string", "/mode");
  const auto s = j.get<std::string>();
  if (s == "partition") return RefinementMode::Partition;
  if (s == "string") return RefinementMode::String;
  if (s == "composed") return RefinementMode::Composed;
  throw InputError("unknown mode \"" + s + "\" (expected partition, string or composed)", "/mode");
}

Json coarsen(Context& ctx) {
  const Action action = action_of(ctx);
  const RefinementMode mode = parse_mode(io::field(ctx.input, "mode", ""));
  const auto fine = compute_configurations(action, io::parse_pair(io::field(ctx.input, "fine", ""), "/fine", action));
  const auto coarse =
      compute_configurations(action, io::parse_pair(io::field(ctx.input, "coarse", ""), "/coarse", action));
  std::vector<Rational> z;
  std::string source;
  if (ctx.input.contains("solution")) {
    z = io::parse_rationals(ctx.input["solution"], "/solution");
    source = "input";
  } else if (action.is_finite()) {
    z = counting_solution(fine);
    source = "counting";
  } else {
    const auto result = solve_feasibility(build_equations(fine));
    if (!result.feasible()) {
      return {{"status", "infeasible"}, {"detail", "the fine system has no normalized solution"}};
    }
    z = result.solution;
    source = "simplex";
  }
  const auto coarse_z = coarsen_solution(mode, fine, coarse, z);
  return {{"status", "ok"},
          {"fine_solution_source", source},
          {"fine_variables", configurations_json(fine.configurations())},
          {"fine_solution", io::to_json(z)},
          {"coarse_variables", configurations_json(coarse.configurations())},
          {"coarse_solution", io::to_json(coarse_z)},
          {"coarse_verified", verify_solution(build_equations(coarse), coarse_z).ok()}};
}

Json compare_con(Context& ctx) {
  const Action a = action_of(ctx, "a");
  const Action b = action_of(ctx, "b");
  ConBounds bounds;
  if (ctx.input.contains("bounds")) {
    const Json& j = ctx.input["bounds"];
    if (j.contains("max_tuple_length")) bounds.max_tuple_length = io::parse_count(j["max_tuple_length"], "/bounds/max_tuple_length");
    if (j.contains("max_word_length")) bounds.max_word_length = io::parse_count(j["max_word_length"], "/bounds/max_word_length");
    if (j.contains("max_blocks")) bounds.max_blocks = io::parse_count(j["max_blocks"], "/bounds/max_blocks");
  }
  if (ctx.options.bound_length) bounds.max_word_length = *ctx.options.bound_length;
  if (ctx.options.bound_pieces) bounds.max_blocks = *ctx.options.bound_pieces;
  if (ctx.input.contains("partitions_a")) {
    std::vector<Partition> ps;
    for (std::size_t i = 0; i < ctx.input["partitions_a"].size(); ++i) {
      ps.push_back(io::parse_sets(ctx.input["partitions_a"][i], "/partitions_a/" + std::to_string(i), a));
    }
    bounds.partitions_a = std::move(ps);
  }
  if (ctx.input.contains("partitions_b")) {
    std::vector<Partition> ps;
    for (std::size_t i = 0; i < ctx.input["partitions_b"].size(); ++i) {
      ps.push_back(io::parse_sets(ctx.input["partitions_b"][i], "/partitions_b/" + std::to_string(i), b));
    }
    bounds.partitions_b = std::move(ps);
  }
  ctx.bounds["max_tuple_length"] = bounds.max_tuple_length;
  ctx.bounds["max_word_length"] = bounds.max_word_length;
  ctx.bounds["max_blocks"] = bounds.max_blocks;
  const auto report = con_included(a, b, bounds);
  Json out = {{"status", report.included ? "included-up-to-bounds" : "counterexample"},
              {"a_pairs_checked", report.a_pairs_checked},
              {"b_pairs_enumerated", report.b_pairs_enumerated}};
  if (report.counterexample) {
    out["counterexample"] = io::to_json(*report.counterexample);
    out["counterexample_configurations"] = configurations_json(report.counterexample_configurations);
  }
  return out;
}

Json probe_cardinality(Context& ctx) {
  const Action action = action_of(ctx);
  const std::size_t n = io::parse_count(io::field(ctx.input, "n", ""), "/n");
  const auto probe = cardinality_probe(action, n);
  Json out = {{"status", probe.admits ? "yes" : "no"}, {"n", n}};
  if (probe.witness) {
    Json blocks = Json::array();
    for (const auto& b : *probe.witness) blocks.push_back(io::to_json(b));
    out["witness"] = blocks;
  }
  return out;
}

// --- paradox engine ---------------------------------------------------------

const char* decomposition_kind(DecompositionCheck::Kind k) {
  switch (k) {
    case DecompositionCheck::Kind::Ok: return "ok";
    case DecompositionCheck::Kind::WrongUniverse: return "wrong-universe";
    case DecompositionCheck::Kind::Overlap: return "overlap";
    case DecompositionCheck::Kind::CoverGap: return "cover-gap";
    case DecompositionCheck::Kind::TranslateOverlap: return "translate-overlap";
    case DecompositionCheck::Kind::PiecesDoNotExhaust: return "pieces-do-not-exhaust";
  }
  return "";
}

Json check_json(const DecompositionCheck& c) {
  Json out = {{"status", c.ok() ? "ok" : "failed"}, {"condition", decomposition_kind(c.kind)}};
  if (!c.ok()) {
    out["detail"] = c.detail;
    out["witness"] = witness_json(c.witness);
  }
  return out;
}

Json paradox_verify(Context& ctx) {
  const Action action = action_of(ctx);
  const auto dec = io::parse_decomposition(io::field(ctx.input, "decomposition", ""), "/decomposition", action);
  ctx.bounds["strict_partition"] = ctx.options.strict_partition;
  Json out = check_json(verify_decomposition(action, dec, ctx.options.strict_partition));
  out["pieces"] = dec.piece_count();
  return out;
}

Json paradox_chain(Context& ctx) {
  const Action action = action_of(ctx);
  const auto chain = io::parse_chain(io::field(ctx.input, "chain", ""), "/chain", action);
  const auto result = chain_to_decomposition(action, chain);
  Json prefixes = Json::array(), differences = Json::array(), telescoping = Json::array();
  for (const auto& s : result.prefixes) prefixes.push_back(io::to_json(s));
  for (const auto& d : result.differences) differences.push_back(io::to_json(d));
  for (const auto& e : result.telescoping) telescoping.push_back(io::to_json(e));
  Json out = {{"status", "ok"},
              {"decomposition", io::to_json(result.decomposition)},
              {"pieces", result.decomposition.piece_count()},
              {"piece_bound", result.piece_bound},
              {"conclusion", "tarski number of the action <= " + std::to_string(result.piece_bound)},
              {"prefixes", prefixes},
              {"differences", differences},
              {"telescoping", telescoping},
              {"verification", check_json(verify_decomposition(action, result.decomposition))}};
  if (chain.sets.size() == 2) {
    out["note"] =
        "verified bound only; cyclicity of stabilizers and tarski number exactly 4 rest on an external result "
        "(Wagon) that is cited, not checked";
  }
  return out;
}

SearchBounds search_bounds(const Context& ctx) {
  SearchBounds b;
  if (ctx.input.contains("bounds")) {
    const Json& j = ctx.input["bounds"];
    if (j.contains("max_pieces")) b.max_pieces = io::parse_count(j["max_pieces"], "/bounds/max_pieces");
    if (j.contains("depth")) b.depth = io::parse_count(j["depth"], "/bounds/depth");
    if (j.contains("translator_length")) b.translator_length = io::parse_count(j["translator_length"], "/bounds/translator_length");
    if (j.contains("max_candidates")) b.max_candidates = io::parse_count(j["max_candidates"], "/bounds/max_candidates");
  }
  if (ctx.options.bound_pieces) b.max_pieces = *ctx.options.bound_pieces;
  if (ctx.options.bound_depth) b.depth = *ctx.options.bound_depth;
  if (ctx.options.bound_length) b.translator_length = *ctx.options.bound_length;
  return b;
}

Json paradox_search(Context& ctx) {
  const Action action = action_of(ctx);
  const SearchBounds b = search_bounds(ctx);
  ctx.bounds["max_pieces"] = b.max_pieces;
  ctx.bounds["depth"] = b.depth;
  ctx.bounds["translator_length"] = b.translator_length;
  ctx.bounds["max_candidates"] = b.max_candidates;
  const auto result = bounded_paradox_search(action, b);
  Json out = {{"status", result.found ? "found" : "none-within-bounds"},
              {"candidates_examined", result.candidates_examined}};
  if (result.found) {
    out["decomposition"] = io::to_json(*result.found);
    out["pieces"] = result.found->piece_count();
  }
  if (!result.obstruction.empty()) out["obstruction"] = result.obstruction;
  return out;
}

Json paradox_pattern(Context& ctx) {
  const Action action = action_of(ctx);
  const auto cs = compute_configurations(action, io::parse_pair(io::field(ctx.input, "pair", ""), "/pair", action));
  const auto pattern = io::parse_pattern(io::field(ctx.input, "pattern", ""), "/pattern");
  const auto check = pattern_check(cs, pattern);
  Json out;
  switch (check.kind) {
    case PatternCheck::Kind::Holds: out["status"] = "holds"; break;
    case PatternCheck::Kind::OutOfRange: throw InputError(check.detail, "/pattern");
    case PatternCheck::Kind::SharedBlock: out["status"] = "fails"; out["condition"] = "shared-block"; break;
    case PatternCheck::Kind::Uncovered: out["status"] = "fails"; out["condition"] = "uncovered"; break;
  }
  if (!check.holds()) {
    out["detail"] = check.detail;
    out["family"] = check.family;
    if (check.counterexample) out["counterexample"] = io::to_json(*check.counterexample);
    return out;
  }
  const auto dec = pattern_decomposition(cs, pattern);
  out["decomposition"] = io::to_json(dec);
  out["verification"] = check_json(verify_decomposition(action, dec));
  out["equations"] = solve_feasibility(build_equations(cs)).feasible() ? "feasible" : "infeasible";
  return out;
}

Json pingpong_cyclic(Context& ctx) {
  const Action action = action_of(ctx);
  const auto cert = check_pingpong_cyclic(action, io::parse_tableau(io::field(ctx.input, "tableau", ""), "/tableau", action));
  Json out = {{"status", cert.ok ? "ok" : "failed"}, {"verified", cert.verified}};
  if (cert.ok) {
    out["conclusion"] = cert.conclusion;
  } else {
    out["failure"] = cert.failure;
    out["row"] = cert.index + 1;
    out["witness"] = witness_json(cert.witness);
  }
  return out;
}

const char* subgroup_status(SubgroupPingPongReport::Status s) {
  switch (s) {
    case SubgroupPingPongReport::Status::Ok: return "ok";
    case SubgroupPingPongReport::Status::OverlappingSets: return "overlapping-sets";
    case SubgroupPingPongReport::Status::EmptySet: return "empty-set";
    case SubgroupPingPongReport::Status::SizeCondition: return "size-condition";
    case SubgroupPingPongReport::Status::InclusionFailed: return "inclusion-failed";
  }
  return "";
}

Json pingpong_subgroups(Context& ctx) {
  const Action action = action_of(ctx);
  const Json& groups_json = io::field(ctx.input, "groups", "");
  if (!groups_json.is_array()) throw InputError("expected an array", "/groups");
  std::vector<SubgroupSpec> groups;
  for (std::size_t i = 0; i < groups_json.size(); ++i) {
    const std::string p = "/groups/" + std::to_string(i);
    const Json& g = groups_json[i];
    SubgroupSpec spec;
    if (ctx.options.bound_length) spec.exponent_bound = static_cast<long>(*ctx.options.bound_length);
    if (g.is_object() && g.contains("generator")) {
      spec.kind = SubgroupSpec::Kind::Cyclic;
      spec.elements.push_back(io::parse_element(g["generator"], p + "/generator", action));
      if (g.contains("exponent_bound")) {
        spec.exponent_bound = static_cast<long>(io::parse_count(g["exponent_bound"], p + "/exponent_bound"));
      }
    } else {
      spec.kind = SubgroupSpec::Kind::Listed;
      spec.elements = io::parse_elements(io::field(g, "elements", p), p + "/elements", action);
    }
    groups.push_back(std::move(spec));
  }
  const auto sets = io::parse_sets(io::field(ctx.input, "sets", ""), "/sets", action);
  const auto report = check_pingpong_subgroups(action, groups, sets);
  ctx.bounds["exponent_bound"] = report.exponent_bound;
  Json orders = Json::array();
  for (const auto& o : report.orders) orders.push_back(o ? Json(*o) : Json("infinite"));
  Json out = {{"status", subgroup_status(report.status)},
              {"detail", report.detail},
              {"orders", orders},
              {"exhaustive", report.exhaustive},
              {"inclusions_checked", report.inclusions_checked}};
  if (report.witness) out["witness"] = io::to_json(*report.witness);
  return out;
}

Json witness_nonabelian(Context& ctx) {
  const Action action = action_of(ctx);
  NonabelianWitness w = ctx.input.contains("witness")
                            ? io::parse_nonabelian(ctx.input["witness"], "/witness", action)
                            : make_nonabelian_witness(action, io::parse_element(io::field(ctx.input, "g1", ""), "/g1", action),
                                                      io::parse_element(io::field(ctx.input, "g2", ""), "/g2", action));
  const auto check = verify_nonabelian(action, w);
  return {{"status", check.ok ? "ok" : "failed"}, {"reason", check.reason}, {"witness", io::to_json(w)}};
}

Json witness_infinite_order(Context& ctx) {
  const Action action = action_of(ctx);
  if (ctx.input.contains("witness")) {
    const auto w = io::parse_infinite_order(ctx.input["witness"], "/witness", action);
    const auto check = verify_infinite_order(action, w);
    return {{"status", check.ok ? "ok" : "failed"}, {"reason", check.reason}, {"witness", io::to_json(w)}};
  }
  const auto a = io::parse_element(io::field(ctx.input, "a", ""), "/a", action);
  const auto outcome = make_infinite_order_witness(action, a);
  if (!outcome.witness) {
    Json out = {{"status", "failed"}, {"reason", outcome.reason}};
    if (outcome.finite_order) out["order"] = *outcome.finite_order;
    return out;
  }
  const auto check = verify_infinite_order(action, *outcome.witness);
  return {{"status", check.ok ? "ok" : "failed"}, {"reason", check.reason}, {"witness", io::to_json(*outcome.witness)}};
}

using Handler = Json (*)(Context&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"con compute", con_compute},
      {"eq solve", eq_solve},
      {"eq verify", eq_verify},
      {"coarsen", coarsen},
      {"compare con", compare_con},
      {"probe cardinality", probe_cardinality},
      {"paradox verify", paradox_verify},
      {"paradox chain", paradox_chain},
      {"paradox search", paradox_search},
      {"paradox pattern", paradox_pattern},
      {"pingpong cyclic", pingpong_cyclic},
      {"pingpong subgroups", pingpong_subgroups},
      {"witness nonabelian", witness_nonabelian},
      {"witness infinite-order", witness_infinite_order},
  };
  return table;
}

Json error_report(const Options& options, const std::string& digest, const char* kind, const std::string& location,
                  const std::string& message) {
  Json out = {{"command", options.command}, {"status", "error"}, {"error", kind}, {"message", message}};
  if (!location.empty()) out["location"] = location;
  if (!digest.empty()) out["input_digest"] = digest;
  return out;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "con compute",      "eq solve",          "eq verify",         "coarsen",         "compare con",
      "probe cardinality", "paradox verify",   "paradox chain",     "paradox search",  "paradox pattern",
      "pingpong cyclic",  "pingpong subgroups", "witness nonabelian", "witness infinite-order"};
  return names;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Outcome run(const Options& options, std::string_view input) {
  const std::string digest = "sha256:" + sha256_hex(input);
  const auto handler = handlers().find(options.command);
  if (handler == handlers().end()) {
    return {kExitInput, error_report(options, digest, "input", "command", "unknown command \"" + options.command + "\"")};
  }
  Json document;
  try {
    document = Json::parse(input);
  } catch (const Json::parse_error& e) {
    return {kExitInput, error_report(options, digest, "input", "byte " + std::to_string(e.byte), e.what())};
  }

  const auto start = std::chrono::steady_clock::now();
  Context ctx{document, options};
  Json result;
  try {
    result = handler->second(ctx);
  } catch (const InputError& e) {
    return {kExitInput, error_report(options, digest, "input", e.location(), e.what())};
  } catch (const Json::exception& e) {
    return {kExitInput, error_report(options, digest, "input", "", e.what())};
  } catch (const BoundExceeded& e) {
    return {kExitBound, error_report(options, digest, "bound-exceeded", "", e.what())};
  } catch (const HypothesisError& e) {
    result = {{"status", "hypothesis-failed"},
              {"hypothesis", e.hypothesis()},
              {"detail", e.what()},
              {"witness", witness_json(e.witness())}};
  }
  const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  ctx.bounds["max_group_order"] = kDefaultMaxGroupOrder;
  if (options.seed) ctx.bounds["seed"] = *options.seed;
  result["command"] = options.command;
  result["bounds"] = ctx.bounds;
  result["input_digest"] = digest;
  if (options.timings) result["timings"] = {{"total_ms", elapsed}};
  return {kExitOk, result};
}

int main(int argc, char** argv) {
  CLI::App app{"Configuration equations, paradoxical decompositions and ping-pong certificates for group actions"};
  app.require_subcommand(1);

  Options options;
  std::string input_path;
  std::string output_path;
  std::size_t depth = 0, length = 0, pieces = 0;
  std::uint64_t seed = 0;
  auto* o_depth = app.add_option("--bound-depth", depth, "cone depth for paradox search");
  auto* o_length = app.add_option("--bound-length", length, "translator or word length bound");
  auto* o_pieces = app.add_option("--bound-pieces", pieces, "maximum number of pieces or blocks");
  auto* o_seed = app.add_option("--seed", seed, "seed echoed into the report");
  app.add_option("--input", input_path, "input JSON document (default: standard input)");
  app.add_option("--output", output_path, "report destination (default: standard output)");
  app.add_flag("--strict-partition", options.strict_partition, "require translates to form exact partitions");
  app.add_flag("--timings", options.timings, "include wall-clock timings in the report");

  std::map<CLI::App*, std::string> leaves;
  std::map<std::string, CLI::App*> groups;
  for (const auto& name : commands()) {
    const auto space = name.find(' ');
    const std::string head = name.substr(0, space);
    if (space == std::string::npos) {
      auto* sub = app.add_subcommand(head);
      sub->fallthrough();
      leaves[sub] = name;
      continue;
    }
    auto& group = groups[head];
    if (!group) {
      group = app.add_subcommand(head);
      group->fallthrough();
      group->require_subcommand(1);
    }
    auto* leaf = group->add_subcommand(name.substr(space + 1));
    leaf->fallthrough();
    leaves[leaf] = name;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  for (const auto& [sub, name] : leaves) {
    if (sub->parsed()) options.command = name;
  }
  if (*o_depth) options.bound_depth = depth;
  if (*o_length) options.bound_length = length;
  if (*o_pieces) options.bound_pieces = pieces;
  if (*o_seed) options.seed = seed;

  std::string input;
  if (input_path.empty()) {
    input.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << input_path << "\n";
      return kExitInput;
    }
    input.assign(std::istreambuf_iterator<char>(in), {});
  }

  const Outcome outcome = run(options, input);
  const std::string text = outcome.report.dump(2) + "\n";
  if (outcome.exit_code != kExitOk) {
    std::cerr << "error: " << outcome.report.value("message", std::string()) << "\n";
  }
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    out << text;
  }
  return outcome.exit_code;
}

}  // namespace tarski::cli
