#pragma once

#include <stdexcept>
#include <string>

namespace fairsim {

/// Invalid scenario or component parameters. The message names the offending
/// field(s); the CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unknown built-in scenario name. Message lists the valid names.
struct CatalogError : ConfigError {
    explicit CatalogError(const std::string& msg) : ConfigError(msg) {}
};

}  // namespace fairsim
