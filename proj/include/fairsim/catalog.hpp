#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairsim/config.hpp"

namespace fairsim {

struct SweepSpec {
    SweepAxis axis = SweepAxis::Threshold;
    std::vector<double> values;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string anchor;  // which study/figure the entry reproduces
    ScenarioConfig config;
    std::optional<SweepSpec> sweep;  // present for the sweep-family entries
};

/// The built-in scenarios reproducing studies 1-3 and the appendix variants.
const std::vector<CatalogEntry>& catalog();

/// Shorthand names, each resolving to a canonical catalog entry.
const std::vector<std::pair<std::string, std::string>>& catalog_aliases();

/// Looks up an entry by name or alias; throws CatalogError listing the valid
/// names otherwise.
const CatalogEntry& catalog_entry(const std::string& name);

/// The entry's scenario config.
ScenarioConfig builtin(const std::string& name);

}  // namespace fairsim
