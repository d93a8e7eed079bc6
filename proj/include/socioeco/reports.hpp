#pragma once

#include <json.hpp>

#include "socioeco/aggregate.hpp"
#include "socioeco/model.hpp"
#include "socioeco/synthesis.hpp"
#include "socioeco/verify.hpp"

namespace socioeco {

nlohmann::json to_json(const Eigen::VectorXd& v);
nlohmann::json to_json(const AssumptionFlags& flags);
nlohmann::json to_json(const AggregateConstants& c);
nlohmann::json to_json(const EquilibriumReport& rep);
nlohmann::json to_json(const SynthesisResult& res);
nlohmann::json to_json(const InfluenceReport& rep);
nlohmann::json to_json(const ConsistencyReport& rep);
nlohmann::json to_json(const MonotonicityReport& rep);

}  // namespace socioeco
