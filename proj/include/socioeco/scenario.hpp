#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "socioeco/integrate.hpp"
#include "socioeco/model.hpp"
#include "socioeco/synthesis.hpp"

namespace socioeco {

/// Request to solve for social orientations instead of stating them.
struct SynthesizeDirective {
    double scale = 1.0;
    bool operator==(const SynthesizeDirective&) const = default;
};

struct ScenarioAgent {
    double alpha = 1.0;
    double R_threshold = 1.0;
    /// Explicit social orientation; absent when the scenario synthesizes.
    std::optional<double> s;
    bool operator==(const ScenarioAgent&) const = default;
};

struct Tolerances {
    double leaderless = 1e-10;
    double consistency = 1e-6;
    double lyapunov_increase = 1e-9;
    bool operator==(const Tolerances&) const = default;
};

/// A complete, self-describing simulation setup. Either every agent carries
/// an explicit orientation or none does and a synthesize directive is
/// present; the two are mutually exclusive.
struct Scenario {
    std::string name;
    std::string description;
    ResourceParams resource;
    std::vector<ScenarioAgent> agents;
    std::optional<SynthesizeDirective> synthesize;
    Eigen::MatrixXd weights;
    FullState initial;
    IntegratorConfig integrator;
    std::string out_dir = ".";
    Tolerances tolerances;

    int n() const { return static_cast<int>(agents.size()); }
    bool operator==(const Scenario& other) const;
};

/// Parses and fully validates a scenario document. Throws ParseError on
/// malformed JSON and ValidationError listing every violated invariant with
/// its field path.
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);

nlohmann::json scenario_to_json(const Scenario& s);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// Scenario with its models built; orientations come from the synthesize
/// directive when present.
struct ResolvedScenario {
    DimensionalModel dimensional;
    NondimModel model;
    std::optional<SynthesisResult> synthesis;
};

ResolvedScenario resolve(const Scenario& s);

}  // namespace socioeco
