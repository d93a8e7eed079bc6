#pragma once

#include <string>
#include <vector>

#include "socioeco/scenario.hpp"

namespace socioeco {

struct PresetInfo {
    std::string name;
    std::string summary;
    /// True for the deliberately non-leaderless control, which is expected to
    /// fail verification.
    bool negative_control = false;
};

const std::vector<PresetInfo>& preset_list();

bool is_preset(const std::string& name);

/// Returns a bundled scenario by name; throws InputError for unknown names.
Scenario preset(const std::string& name);

/// Loads a scenario file, or a bundled preset when the argument matches a
/// preset name and no such file exists.
Scenario load_scenario_or_preset(const std::string& path_or_name);

}  // namespace socioeco
