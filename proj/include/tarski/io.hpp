#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tarski/action.hpp"
#include "tarski/config.hpp"
#include "tarski/equations.hpp"
#include "tarski/paradox.hpp"

namespace tarski::io {

using Json = nlohmann::json;

// Serialization. Words are strings ("e" for the identity), permutations are
// image arrays, rationals are "p/q" strings, sets are {"kind": ...} trees.
Json to_json(const FreeWord& w);
Json to_json(const Permutation& p);
Json to_json(const GroupElement& g);
Json to_json(const Point& p);
Json to_json(const PointSet& s);
Json to_json(const Rational& q);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Configuration& c);
Json to_json(const Action& a);
Json to_json(const ConfigurationPair& pair);
Json to_json(const ParadoxicalDecomposition& dec);
Json to_json(const PingPongChain& chain);
Json to_json(const CyclicTableau& tableau);
Json to_json(const NonabelianWitness& w);
Json to_json(const InfiniteOrderWitness& w);
Json to_json(const ParadoxPattern& p);

// Parsing. `path` is a JSON pointer used as the location of any InputError.
FreeWord parse_word(const Json& j, const std::string& path);
Permutation parse_permutation(const Json& j, const std::string& path);
GroupElement parse_element(const Json& j, const std::string& path, const Action& action);
std::vector<GroupElement> parse_elements(const Json& j, const std::string& path, const Action& action);
Action parse_action(const Json& j, const std::string& path);
PointSet parse_set(const Json& j, const std::string& path, const Action& action);
std::vector<PointSet> parse_sets(const Json& j, const std::string& path, const Action& action);
ConfigurationPair parse_pair(const Json& j, const std::string& path, const Action& action);
Configuration parse_configuration(const Json& j, const std::string& path);
Rational parse_rational(const Json& j, const std::string& path);
std::vector<Rational> parse_rationals(const Json& j, const std::string& path);
ParadoxicalDecomposition parse_decomposition(const Json& j, const std::string& path, const Action& action);
PingPongChain parse_chain(const Json& j, const std::string& path, const Action& action);
CyclicTableau parse_tableau(const Json& j, const std::string& path, const Action& action);
NonabelianWitness parse_nonabelian(const Json& j, const std::string& path, const Action& action);
InfiniteOrderWitness parse_infinite_order(const Json& j, const std::string& path, const Action& action);
ParadoxPattern parse_pattern(const Json& j, const std::string& path);

/// The member `key` of object `j`; throws InputError at `path` when missing.
const Json& field(const Json& j, const std::string& key, const std::string& path);
std::size_t parse_count(const Json& j, const std::string& path);

}  // namespace tarski::io
