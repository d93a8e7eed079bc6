#include "socioeco/scenario.hpp"

#include <cmath>
#include <fstream>

namespace socioeco {

using nlohmann::json;

namespace {

struct Collector {
    std::vector<std::string> issues;

    void add(const std::string& path, const std::string& msg) {
        issues.push_back(path + ": " + msg);
    }

    // Returns nullptr when missing/mistyped, recording the issue.
    const json* object(const json& j, const std::string& path, const char* key, bool required) {
        if (!j.contains(key)) {
            if (required) add(path + key, "required object is missing");
            return nullptr;
        }
        if (!j[key].is_object()) {
            add(path + key, "expected an object");
            return nullptr;
        }
        return &j[key];
    }

    std::optional<double> number(const json& j, const std::string& path, const char* key,
                                 bool required) {
        if (!j.contains(key)) {
            if (required) add(path + key, "required number is missing");
            return std::nullopt;
        }
        if (!j[key].is_number()) {
            add(path + key, "expected a number");
            return std::nullopt;
        }
        return j[key].get<double>();
    }

    std::optional<std::string> text(const json& j, const std::string& path, const char* key) {
        if (!j.contains(key)) return std::nullopt;
        if (!j[key].is_string()) {
            add(path + key, "expected a string");
            return std::nullopt;
        }
        return j[key].get<std::string>();
    }
};

}  // namespace

Scenario scenario_from_json(const json& j) {
    Collector c;
    Scenario s;

    if (!j.is_object()) throw ValidationError("scenario: document must be a JSON object");

    if (auto v = c.text(j, "", "name")) s.name = *v;
    if (auto v = c.text(j, "", "description")) s.description = *v;

    if (const json* res = c.object(j, "", "resource", true)) {
        if (auto v = c.number(*res, "resource.", "r", true)) s.resource.r = *v;
        if (auto v = c.number(*res, "resource.", "Rmax", true)) s.resource.Rmax = *v;
    }

    int n_explicit_s = 0;
    if (j.contains("agents") && j["agents"].is_array()) {
        for (std::size_t i = 0; i < j["agents"].size(); ++i) {
            const std::string path = "agents[" + std::to_string(i) + "].";
            const json& a = j["agents"][i];
            ScenarioAgent agent;
            if (!a.is_object()) {
                c.add("agents[" + std::to_string(i) + "]", "expected an object");
                s.agents.push_back(agent);
                continue;
            }
            if (auto v = c.number(a, path, "alpha", true)) agent.alpha = *v;
            if (auto v = c.number(a, path, "R_threshold", true)) agent.R_threshold = *v;
            if (a.contains("s")) {
                if (auto v = c.number(a, path, "s", false)) {
                    agent.s = *v;
                    ++n_explicit_s;
                }
            }
            s.agents.push_back(agent);
        }
    } else {
        c.add("agents", "required array is missing");
    }

    if (j.contains("synthesize")) {
        if (const json* sy = c.object(j, "", "synthesize", false)) {
            SynthesizeDirective d;
            if (auto v = c.number(*sy, "synthesize.", "scale", true)) d.scale = *v;
            s.synthesize = d;
        }
    }

    if (j.contains("weights") && j["weights"].is_array()) {
        const auto& rows = j["weights"];
        const int n = static_cast<int>(rows.size());
        s.weights = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
                c.add("weights[" + std::to_string(i) + "]",
                      "expected a row of " + std::to_string(n) + " numbers");
                continue;
            }
            for (int k = 0; k < n; ++k) {
                if (!rows[i][k].is_number()) {
                    c.add("weights[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                          "expected a number");
                } else {
                    s.weights(i, k) = rows[i][k].get<double>();
                }
            }
        }
    } else {
        c.add("weights", "required array of rows is missing");
    }

    if (const json* init = c.object(j, "", "initial", true)) {
        if (auto v = c.number(*init, "initial.", "x", true)) s.initial.x = *v;
        if (init->contains("y") && (*init)["y"].is_array()) {
            const auto& ys = (*init)["y"];
            s.initial.y.resize(static_cast<Eigen::Index>(ys.size()));
            for (std::size_t i = 0; i < ys.size(); ++i) {
                if (!ys[i].is_number()) {
                    c.add("initial.y[" + std::to_string(i) + "]", "expected a number");
                } else {
                    s.initial.y(static_cast<Eigen::Index>(i)) = ys[i].get<double>();
                }
            }
        } else {
            c.add("initial.y", "required array is missing");
        }
    }

    if (j.contains("integrator")) {
        if (const json* integ = c.object(j, "", "integrator", false)) {
            if (auto v = c.text(*integ, "integrator.", "method")) {
                if (*v == "rk4") s.integrator.method = Method::rk4;
                else if (*v == "rk45") s.integrator.method = Method::rk45;
                else c.add("integrator.method", "expected \"rk4\" or \"rk45\", got \"" + *v + "\"");
            }
            if (auto v = c.number(*integ, "integrator.", "step", false)) s.integrator.step = *v;
            if (auto v = c.number(*integ, "integrator.", "abs_tol", false))
                s.integrator.abs_tol = *v;
            if (auto v = c.number(*integ, "integrator.", "rel_tol", false))
                s.integrator.rel_tol = *v;
            if (auto v = c.number(*integ, "integrator.", "t_end", false)) s.integrator.t_end = *v;
            if (integ->contains("record_every")) {
                if (!(*integ)["record_every"].is_number_integer()) {
                    c.add("integrator.record_every", "expected an integer");
                } else {
                    s.integrator.record_every = (*integ)["record_every"].get<int>();
                }
            }
        }
    }

    if (j.contains("output")) {
        if (const json* out = c.object(j, "", "output", false)) {
            if (auto v = c.text(*out, "output.", "dir")) s.out_dir = *v;
        }
    }

    if (j.contains("tolerances")) {
        if (const json* tol = c.object(j, "", "tolerances", false)) {
            if (auto v = c.number(*tol, "tolerances.", "leaderless", false))
                s.tolerances.leaderless = *v;
            if (auto v = c.number(*tol, "tolerances.", "consistency", false))
                s.tolerances.consistency = *v;
            if (auto v = c.number(*tol, "tolerances.", "lyapunov_increase", false))
                s.tolerances.lyapunov_increase = *v;
        }
    }

    // Semantic validation on top of the structural pass.
    const int n = s.n();
    if (n < 2) c.add("agents", "need at least 2 agents, got " + std::to_string(n));
    if (!(s.resource.r > 0.0)) c.add("resource.r", "must be > 0");
    if (!(s.resource.Rmax > 0.0)) c.add("resource.Rmax", "must be > 0");
    for (int i = 0; i < n; ++i) {
        const std::string path = "agents[" + std::to_string(i) + "]";
        if (!(s.agents[i].alpha > 0.0)) c.add(path + ".alpha", "must be > 0");
        if (s.agents[i].s && !(*s.agents[i].s > 0.0)) c.add(path + ".s", "must be > 0");
    }
    if (n_explicit_s != 0 && n_explicit_s != n) {
        c.add("agents", "orientations s must be given for all agents or for none");
    }
    if (s.synthesize && n_explicit_s > 0) {
        c.add("synthesize", "mutually exclusive with explicit agent orientations");
    }
    if (!s.synthesize && n_explicit_s == 0 && n > 0) {
        c.add("agents", "no orientations given and no synthesize directive present");
    }
    if (s.synthesize && !(s.synthesize->scale > 0.0)) c.add("synthesize.scale", "must be > 0");

    if (s.weights.rows() == n) {
        for (const auto& issue : weight_issues(s.weights)) c.issues.push_back(issue);
    } else if (s.weights.rows() > 0) {
        c.add("weights", "matrix size " + std::to_string(s.weights.rows()) +
                             " does not match agent count " + std::to_string(n));
    }

    if (!(s.initial.x > 0.0)) c.add("initial.x", "must be > 0 (z = log x is taken)");
    if (static_cast<int>(s.initial.y.size()) != n) {
        c.add("initial.y", "length " + std::to_string(s.initial.y.size()) +
                               " does not match agent count " + std::to_string(n));
    }

    if (s.integrator.method == Method::rk4 && !(s.integrator.step > 0.0))
        c.add("integrator.step", "must be > 0");
    if (s.integrator.method == Method::rk45) {
        if (!(s.integrator.abs_tol > 0.0)) c.add("integrator.abs_tol", "must be > 0");
        if (!(s.integrator.rel_tol > 0.0)) c.add("integrator.rel_tol", "must be > 0");
    }
    if (!(s.integrator.t_end > 0.0)) c.add("integrator.t_end", "must be > 0");
    if (s.integrator.record_every < 1) c.add("integrator.record_every", "must be >= 1");
    if (!(s.tolerances.leaderless > 0.0)) c.add("tolerances.leaderless", "must be > 0");
    if (!(s.tolerances.consistency > 0.0)) c.add("tolerances.consistency", "must be > 0");
    if (!(s.tolerances.lyapunov_increase > 0.0))
        c.add("tolerances.lyapunov_increase", "must be > 0");

    if (!c.issues.empty()) throw ValidationError(c.issues);
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open scenario file: " + path.string());
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    Scenario s = scenario_from_json(j);
    if (s.name.empty()) s.name = path.stem().string();
    return s;
}

json scenario_to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["description"] = s.description;
    j["resource"] = {{"r", s.resource.r}, {"Rmax", s.resource.Rmax}};
    j["agents"] = json::array();
    for (const auto& a : s.agents) {
        json ja = {{"alpha", a.alpha}, {"R_threshold", a.R_threshold}};
        if (a.s) ja["s"] = *a.s;
        j["agents"].push_back(ja);
    }
    if (s.synthesize) j["synthesize"] = {{"scale", s.synthesize->scale}};
    j["weights"] = json::array();
    for (Eigen::Index i = 0; i < s.weights.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < s.weights.cols(); ++k) row.push_back(s.weights(i, k));
        j["weights"].push_back(row);
    }
    j["initial"] = {{"x", s.initial.x}, {"y", json::array()}};
    for (Eigen::Index i = 0; i < s.initial.y.size(); ++i)
        j["initial"]["y"].push_back(s.initial.y(i));
    j["integrator"] = {{"method", to_string(s.integrator.method)},
                       {"t_end", s.integrator.t_end},
                       {"record_every", s.integrator.record_every}};
    if (s.integrator.method == Method::rk4) {
        j["integrator"]["step"] = s.integrator.step;
    } else {
        j["integrator"]["abs_tol"] = s.integrator.abs_tol;
        j["integrator"]["rel_tol"] = s.integrator.rel_tol;
    }
    j["output"] = {{"dir", s.out_dir}};
    j["tolerances"] = {{"leaderless", s.tolerances.leaderless},
                       {"consistency", s.tolerances.consistency},
                       {"lyapunov_increase", s.tolerances.lyapunov_increase}};
    return j;
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f << scenario_to_json(s).dump(2) << '\n';
}

bool Scenario::operator==(const Scenario& other) const {
    auto same_matrix = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
        return a.rows() == b.rows() && a.cols() == b.cols() &&
               (a.size() == 0 || (a.array() == b.array()).all());
    };
    auto same_vector = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        return a.size() == b.size() && (a.size() == 0 || (a.array() == b.array()).all());
    };
    return name == other.name && description == other.description &&
           resource.r == other.resource.r && resource.Rmax == other.resource.Rmax &&
           agents == other.agents && synthesize == other.synthesize &&
           same_matrix(weights, other.weights) && initial.x == other.initial.x &&
           same_vector(initial.y, other.initial.y) &&
           integrator.method == other.integrator.method && integrator.step == other.integrator.step &&
           integrator.abs_tol == other.integrator.abs_tol &&
           integrator.rel_tol == other.integrator.rel_tol &&
           integrator.t_end == other.integrator.t_end &&
           integrator.record_every == other.integrator.record_every && out_dir == other.out_dir &&
           tolerances == other.tolerances;
}

ResolvedScenario resolve(const Scenario& s) {
    ResolvedScenario out;
    SocialWeights weights = validate_weights(s.weights);

    if (s.synthesize) {
        std::vector<EcoParams> eco;
        eco.reserve(s.agents.size());
        for (const auto& a : s.agents) eco.push_back({a.alpha, a.R_threshold});
        out.synthesis =
            synthesize_orientations(weights, eco, s.resource, s.synthesize->scale);
        out.dimensional = out.synthesis->model;
    } else {
        out.dimensional.resource = s.resource;
        out.dimensional.weights = weights;
        out.dimensional.agents.reserve(s.agents.size());
        for (const auto& a : s.agents) {
            out.dimensional.agents.push_back({a.alpha, *a.s, a.R_threshold});
        }
    }
    out.model = nondimensionalize(out.dimensional);
    return out;
}

}  // namespace socioeco
