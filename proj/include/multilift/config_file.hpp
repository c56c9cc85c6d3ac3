#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "multilift/scenario.hpp"

namespace multilift {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plain-text `section.key = value` files; '#' starts a comment. Values are
// scalars, space-separated triples, or bare words. The full key list is
// documented in the README.
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Applies overrides on top of cfg. Unknown keys and malformed values raise
// ConfigError; geometry-affecting keys rebuild the attachment arrays.
void apply_config(const std::map<std::string, std::string>& kv,
                  ScenarioConfig* cfg);

// parse + apply + validate in one go, starting from the group defaults named
// in the file (scenario.group / scenario.controller) or from `base`.
ScenarioConfig load_config(const std::string& path,
                           const ScenarioConfig& base);

}  // namespace multilift
