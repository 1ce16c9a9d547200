#pragma once

#include <string>
#include <vector>

namespace planprobe {

enum class Mode { Basic, Extended };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

// One schedulable task. Maps 1:1 to a mock tool.
struct ActionSpec {
  std::string id;         // stable symbol, e.g. "a1"
  std::string phrase;     // activity noun phrase, e.g. "network diagnosis"
  std::string tool_name;  // snake_case of phrase, e.g. "network_diagnosis"
  std::string description;

  bool operator==(const ActionSpec&) const = default;
};

using ActionSet = std::vector<ActionSpec>;

// "network diagnosis" -> "network_diagnosis". Lowercases, maps any non
// alphanumeric run to a single underscore, trims edges.
std::string normalize_tool_name(const std::string& phrase);

// Builds ActionSpecs a1..an from activity phrases.
ActionSet make_action_set(const std::vector<std::string>& phrases);

const ActionSpec* find_action(const ActionSet& actions, const std::string& id);
const ActionSpec* find_action_by_tool(const ActionSet& actions, const std::string& tool_name);

}  // namespace planprobe
