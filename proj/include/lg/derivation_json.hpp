#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "lg/derivation.hpp"
#include "lg/parse.hpp"

namespace lg {

class DerivationFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json to_json(const Derivation& d) {
  nlohmann::json node;
  node["rule"] = std::string(rule_name(d.rule));
  node["conclusion"] = render(d.conclusion);
  nlohmann::json premises = nlohmann::json::array();
  for (const Derivation& p : d.premises) premises.push_back(to_json(p));
  node["premises"] = std::move(premises);
  return node;
}

inline Derivation derivation_from_json(const nlohmann::json& node) {
  if (!node.is_object())
    throw DerivationFormatError("derivation node must be an object");
  for (const char* key : {"rule", "conclusion", "premises"})
    if (!node.contains(key))
      throw DerivationFormatError(std::string("missing key \"") + key + '"');
  if (!node["rule"].is_string() || !node["conclusion"].is_string() ||
      !node["premises"].is_array())
    throw DerivationFormatError("bad field types in derivation node");
  Derivation d;
  const std::string rule = node["rule"].get<std::string>();
  std::optional<RuleLabel> label = rule_from_name(rule);
  if (!label) throw DerivationFormatError("unknown rule label \"" + rule + '"');
  d.rule = *label;
  try {
    d.conclusion = parse_sequent(node["conclusion"].get<std::string>());
  } catch (const ParseError& e) {
    throw DerivationFormatError(std::string("bad conclusion: ") + e.what());
  }
  for (const nlohmann::json& p : node["premises"])
    d.premises.push_back(derivation_from_json(p));
  return d;
}

}  // namespace lg
