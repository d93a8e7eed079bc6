#include "socioeco/reports.hpp"

namespace socioeco {

using nlohmann::json;

json to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

json to_json(const AssumptionFlags& flags) {
    return {{"ok", flags.ok()},
            {"leaderless", flags.leaderless},
            {"leaderless_residual", flags.leaderless_residual},
            {"leaderless_tol", flags.leaderless_tol},
            {"rho_in_range", flags.rho_in_range},
            {"rho_violations", flags.rho_violations}};
}

json to_json(const AggregateConstants& c) {
    return {{"K1", c.K1}, {"K2", c.K2}, {"ratio", c.ratio()}};
}

json to_json(const EquilibriumReport& rep) {
    json j = to_json(rep.constants);
    j["z0"] = rep.z0;
    j["u0"] = rep.u0;
    j["x0"] = rep.x0;
    j["R0"] = rep.R0;
    j["y_star"] = to_json(rep.y_star);
    j["assumptions_ok"] = to_json(rep.assumptions);
    return j;
}

json to_json(const SynthesisResult& res) {
    return {{"n", res.model.n()},
            {"scale", res.scale},
            {"products", to_json(res.products)},
            {"orientations", to_json(res.orientations)},
            {"residual", res.residual}};
}

json to_json(const InfluenceReport& rep) {
    json roles = json::array();
    for (auto r : rep.roles) roles.push_back(to_string(r));
    return {{"in_influence", to_json(rep.in_influence)},
            {"out_influence", to_json(rep.out_influence)},
            {"net_influence", to_json(rep.net_influence)},
            {"roles", roles},
            {"role_tol", rep.role_tol}};
}

json to_json(const ConsistencyReport& rep) {
    return {{"max_z_dev", rep.max_z_dev}, {"max_u_dev", rep.max_u_dev}};
}

json to_json(const MonotonicityReport& rep) {
    return {{"violations", rep.violations},
            {"max_increase", rep.max_increase},
            {"initial_value", rep.initial_value},
            {"final_value", rep.final_value}};
}

}  // namespace socioeco
