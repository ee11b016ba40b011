#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zipkit/prooftree.hpp"

namespace zipkit {

struct RulesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace rules_detail {

// nlohmann reports byte offsets; turn one into line/column for messages.
inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace rules_detail

// Rule table format: a JSON array of {"rule": <name>, "priority": <0..1>}
// entries, in selection-tie order. Names must be known, priorities must be
// numbers in [0, 1], and no rule may appear twice.
inline std::vector<RuleTableEntry> parse_rules(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = rules_detail::line_col(text, e.byte ? e.byte - 1 : 0);
    throw RulesError("rules: invalid JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(col));
  }
  if (!doc.is_array()) throw RulesError("rules: expected a top-level array of rule entries");
  if (doc.empty()) throw RulesError("rules: the rule table is empty");

  std::vector<RuleTableEntry> out;
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& e = doc[i];
    std::string at = "rules: entry " + std::to_string(i);
    if (!e.is_object()) throw RulesError(at + " is not an object");
    if (!e.contains("rule") || !e["rule"].is_string()) throw RulesError(at + " lacks a string \"rule\"");
    if (!e.contains("priority") || !e["priority"].is_number())
      throw RulesError(at + " lacks a numeric \"priority\"");
    std::string name = e["rule"].get<std::string>();
    double prio = e["priority"].get<double>();
    auto kind = rule_kind_from(name);
    if (!kind) throw RulesError(at + ": unknown rule \"" + name + "\"");
    if (prio < 0.0 || prio > 1.0)
      throw RulesError(at + ": priority " + std::to_string(prio) + " is outside [0, 1]");
    for (const auto& s : seen)
      if (s == name) throw RulesError(at + ": rule \"" + name + "\" appears twice");
    seen.push_back(name);
    out.push_back(RuleTableEntry{*kind, prio});
  }
  return out;
}

inline std::vector<RuleTableEntry> load_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RulesError("rules: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str());
}

}  // namespace zipkit
