#include "socioeco/presets.hpp"

#include <filesystem>

namespace socioeco {

namespace {

// Shared 5-agent ecological parameters used by the star studies: agent 4 has
// a scarcity threshold above the carrying capacity and ends up contributing
// resource at steady state.
const double kAlpha5[5] = {0.4340, 0.2046, 0.1891, 0.6935, 0.2108};
const double kThreshold5[5] = {0.2262, 0.4788, 0.4582, 1.1745, 0.8483};

std::vector<ScenarioAgent> agents5() {
    std::vector<ScenarioAgent> agents;
    for (int i = 0; i < 5; ++i) agents.push_back({kAlpha5[i], kThreshold5[i], std::nullopt});
    return agents;
}

Scenario base_scenario(std::string name, std::string description, int n) {
    Scenario s;
    s.name = std::move(name);
    s.description = std::move(description);
    s.resource = {1.0, 1.0};
    s.initial.x = 0.1;
    s.initial.y = Eigen::VectorXd::Zero(n);
    s.integrator.method = Method::rk4;
    s.integrator.step = 1e-3;
    s.integrator.t_end = 50.0;
    s.integrator.record_every = 10;
    return s;
}

// Star with the hub first: hub row holds the listed leaf weights, every leaf
// listens to the hub with weight 1.
Eigen::MatrixXd star_weights(const std::array<double, 4>& hub_row) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(5, 5);
    for (int k = 0; k < 4; ++k) {
        w(0, k + 1) = hub_row[static_cast<std::size_t>(k)];
        w(k + 1, 0) = 1.0;
    }
    return w;
}

Scenario make_line5() {
    Scenario s = base_scenario(
        "line-5", "5-node line graph, end nodes fully attached to their only neighbor; "
                  "orientations synthesized to balance influence.", 5);
    s.agents = agents5();
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(5, 5);
    w(0, 1) = 1.0;
    w(4, 3) = 1.0;
    for (int i = 1; i <= 3; ++i) {
        w(i, i - 1) = 0.5;
        w(i, i + 1) = 0.5;
    }
    s.weights = w;
    s.synthesize = SynthesizeDirective{0.53};
    return s;
}

Scenario make_cycle6() {
    Scenario s = base_scenario(
        "cycle-6", "6-node cycle with uniform 0.5 ties; symmetric, so the balanced "
                   "orientations are uniform. Ecological parameters are illustrative.", 6);
    for (int i = 0; i < 6; ++i) s.agents.push_back({0.3, 0.5, std::nullopt});
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(6, 6);
    for (int i = 0; i < 6; ++i) {
        w(i, (i + 1) % 6) = 0.5;
        w(i, (i + 5) % 6) = 0.5;
    }
    s.weights = w;
    s.synthesize = SynthesizeDirective{0.41};
    return s;
}

Scenario make_star_random() {
    Scenario s = base_scenario(
        "star-random", "5-node star, randomly weighted hub row; orientations synthesized.", 5);
    s.agents = agents5();
    s.weights = star_weights({0.05, 0.33, 0.37, 0.25});
    s.synthesize = SynthesizeDirective{0.87};
    return s;
}

Scenario make_star_uniform() {
    Scenario s = base_scenario(
        "star-uniform", "5-node star, uniform hub row; orientations synthesized.", 5);
    s.agents = agents5();
    s.weights = star_weights({0.25, 0.25, 0.25, 0.25});
    s.synthesize = SynthesizeDirective{0.89};
    return s;
}

Scenario make_star_skewed() {
    Scenario s = base_scenario(
        "star-skewed", "5-node star, hub attention concentrated on one leaf; "
                       "orientations synthesized.", 5);
    s.agents = agents5();
    s.weights = star_weights({0.01, 0.01, 0.01, 0.97});
    s.synthesize = SynthesizeDirective{0.72};
    return s;
}

Scenario make_star_nonleaderless() {
    Scenario s = base_scenario(
        "star-nonleaderless",
        "Negative control: the star-random network with uniform explicit orientations, "
        "so the hub out-influences everyone and the aggregate reduction breaks.", 5);
    for (int i = 0; i < 5; ++i) s.agents.push_back({kAlpha5[i], kThreshold5[i], 0.5});
    s.weights = star_weights({0.05, 0.33, 0.37, 0.25});
    return s;
}

}  // namespace

const std::vector<PresetInfo>& preset_list() {
    static const std::vector<PresetInfo> list = {
        {"line-5", "5-node line graph, synthesized orientations", false},
        {"cycle-6", "6-node uniform cycle, synthesized orientations", false},
        {"star-random", "5-node star, random hub weights", false},
        {"star-uniform", "5-node star, uniform hub weights", false},
        {"star-skewed", "5-node star, skewed hub weights", false},
        {"star-nonleaderless", "negative control, expected to fail verification", true},
    };
    return list;
}

bool is_preset(const std::string& name) {
    for (const auto& p : preset_list()) {
        if (p.name == name) return true;
    }
    return false;
}

Scenario preset(const std::string& name) {
    if (name == "line-5") return make_line5();
    if (name == "cycle-6") return make_cycle6();
    if (name == "star-random") return make_star_random();
    if (name == "star-uniform") return make_star_uniform();
    if (name == "star-skewed") return make_star_skewed();
    if (name == "star-nonleaderless") return make_star_nonleaderless();
    throw InputError("unknown preset: " + name);
}

Scenario load_scenario_or_preset(const std::string& path_or_name) {
    if (!std::filesystem::exists(path_or_name) && is_preset(path_or_name)) {
        return preset(path_or_name);
    }
    return load_scenario(path_or_name);
}

}  // namespace socioeco
