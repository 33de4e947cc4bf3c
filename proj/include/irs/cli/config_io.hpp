#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "irs/sysmodel.hpp"

namespace irs::cli {

/// Malformed configuration text or an out-of-range field. The message
/// carries the source name, line number and key when known.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Keys accepted in configuration files and as --<key> overrides.
inline constexpr std::string_view kConfigKeys[] = {"n_elements", "d1_m", "d2_m", "dL_m",
                                                   "v1",         "v2",   "vL",   "gamma_bar_db"};

/// Parses flat `key = value` text; '#' starts a comment. Unset keys keep the
/// defaults of SystemConfig. Does not validate ranges (see SystemConfig::validate).
SystemConfig parse_config(std::string_view text, std::string_view source = "<config>");

SystemConfig load_config(const std::string& path);

/// Sets one field from its textual value; throws ConfigError on bad input.
void apply_setting(SystemConfig& config, std::string_view key, std::string_view value,
                   std::string_view where = "<flag>");

/// Serialises to the parse_config format; parse_config(dump_config(c)) == c.
std::string dump_config(const SystemConfig& config);

}  // namespace irs::cli
