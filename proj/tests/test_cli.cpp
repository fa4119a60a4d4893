#include <doctest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "tarski/cli.hpp"
#include "tarski/error.hpp"

using namespace tarski;
using io::Json;

namespace {
std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TARSKI_FIXTURE_DIR) + "/" + name + ".json");
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), {}};
}

cli::Outcome run(const std::string& command, const std::string& input, cli::Options options = {}) {
  options.command = command;
  return cli::run(options, input);
}
}  // namespace

TEST_CASE("eq solve on the bundled fixtures") {
  const auto f2 = run("eq solve", fixture("f2-ab-5block"));
  CHECK(f2.exit_code == 0);
  CHECK(f2.report["status"] == "infeasible");
  CHECK(f2.report["verified"] == true);
  CHECK(f2.report["certificate"].size() == 11);

  const auto triv = run("eq solve", fixture("trivial-action"));
  CHECK(triv.report["status"] == "feasible");
  CHECK(triv.report["solution"] == Json::array({"1/3", "1/3", "1/3"}));
}

TEST_CASE("every fixture runs under its command") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"con compute", "z3-cycle"},           {"eq solve", "z3-cycle"},
      {"coarsen", "z4-quotient"},            {"paradox verify", "f2-classical-decomposition"},
      {"paradox pattern", "f2-classical-decomposition"}, {"paradox chain", "f2-chain-n2"},
      {"pingpong cyclic", "f2-pingpong-cyclic"}, {"witness nonabelian", "s3-nonabelian-witness"}};
  for (const auto& [command, name] : cases) {
    CAPTURE(command);
    const auto out = run(command, fixture(name));
    CHECK(out.exit_code == 0);
    const std::string status = out.report["status"];
    CHECK((status == "ok" || status == "holds" || status == "feasible"));
  }
  const auto z3 = run("con compute", fixture("z3-cycle"));
  CHECK(z3.report["configurations"] == Json::parse("[[1,2],[2,1],[2,2]]"));
  const auto chain = run("paradox chain", fixture("f2-chain-n2"));
  CHECK(chain.report["piece_bound"] == 4);
  CHECK(chain.report["pieces"] == 4);
}

TEST_CASE("bad words exit 2 with a location") {
  const auto out = run("con compute",
                       R"({"action":{"backend":"free-self","rank":2},"pair":{"tuple":["aX"],"partition":[{"kind":"full"}]}})");
  CHECK(out.exit_code == cli::kExitInput);
  CHECK(out.report["location"] == "/pair/tuple/0 offset 1");
}

TEST_CASE("schema errors exit 2") {
  CHECK(run("eq solve", "{not json").exit_code == cli::kExitInput);
  const auto missing = run("eq solve", R"({"action":{"backend":"free-self","rank":2}})");
  CHECK(missing.exit_code == cli::kExitInput);
  CHECK(missing.report["location"] == "/");
  const auto backend = run("eq solve", R"({"action":{"backend":"nope"},"pair":{}})");
  CHECK(backend.report["location"] == "/action/backend");
  const auto point = run("con compute", R"({"action":{"backend":"finite","degree":2,"generators":[[1,0]]},
      "pair":{"tuple":["a"],"partition":[[0],[1,5]]}})");
  CHECK(point.exit_code == cli::kExitInput);
  CHECK(point.report["location"] == "/pair/partition/1/1");
  CHECK(run("no such", "{}").exit_code == cli::kExitInput);
}

TEST_CASE("bound overflow exits 3") {
  const auto out = run("paradox search",
                       R"({"action":{"backend":"free-self","rank":2},"bounds":{"max_candidates":5}})");
  CHECK(out.exit_code == cli::kExitBound);
  CHECK(out.report["error"] == "bound-exceeded");
}

TEST_CASE("reports are byte-stable and self-describing") {
  const std::string input = fixture("f2-ab-5block");
  const auto a = run("eq solve", input), b = run("eq solve", input);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.report["input_digest"] == "sha256:" + cli::sha256_hex(input));
  cli::Options flags;
  flags.bound_pieces = 4;
  flags.bound_depth = 1;
  flags.bound_length = 1;
  const auto s = run("paradox search", R"({"action":{"backend":"free-self","rank":2}})", flags);
  CHECK(s.report["status"] == "found");
  CHECK(s.report["bounds"]["max_pieces"] == 4);
  CHECK(s.report["bounds"]["depth"] == 1);
  CHECK(s.report["bounds"]["translator_length"] == 1);
  CHECK_FALSE(s.report.contains("timings"));
  flags.timings = true;
  CHECK(run("paradox search", R"({"action":{"backend":"free-self","rank":2}})", flags).report.contains("timings"));
}

TEST_CASE("sha256 of known strings") {
  CHECK(cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("round trip of serialized values") {
  const Action f2 = Action::free_self(2);
  const PointSet s = set_union(SymbolicSet::cone(2, FreeWord::parse("ab")), SymbolicSet::singleton(2, FreeWord::parse("B")));
  CHECK(io::parse_set(io::to_json(s), "", f2) == s);
  const Action fin = Action::finite(4, {Permutation({1, 2, 3, 0})});
  const PointSet fs = FiniteSet(4, {0, 3});
  CHECK(io::parse_set(io::to_json(fs), "", fin) == fs);
  const GroupElement g = Permutation({1, 2, 3, 0});
  CHECK(io::parse_element(io::to_json(g), "", fin) == g);
  const GroupElement word = FreeWord::parse("abA");
  CHECK(io::parse_element(io::to_json(word), "", f2) == word);
  CHECK(io::parse_rational(io::to_json(Rational(-3, 7)), "") == Rational(-3, 7));
  for (const auto& a : {f2, fin, Action::trivial_finite(3, 2), Action::trivial_free(2, 1),
                        Action::finite_regular({Permutation({1, 0, 2}), Permutation({0, 2, 1})})}) {
    CHECK(io::to_json(io::parse_action(io::to_json(a), "")) == io::to_json(a));
  }
  const ParadoxicalDecomposition dec{{{s, FreeWord::parse("a")}}, {{complement(s), FreeWord()}}};
  const auto back = io::parse_decomposition(io::to_json(dec), "", f2);
  CHECK(io::to_json(back) == io::to_json(dec));
  const ParadoxPattern pat{{{0, 2}, {1, 3}}, {{2, 5}}};
  CHECK(io::to_json(io::parse_pattern(io::to_json(pat), "")) == io::to_json(pat));
  const ConfigurationPair pair{{FreeWord::parse("a")}, {fs, complement(fs)}};
  CHECK(io::to_json(io::parse_pair(io::to_json(pair), "", fin)) == io::to_json(pair));
}
