#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "socioeco/aggregate.hpp"
#include "socioeco/model.hpp"

namespace socioeco {

/// In-place right-hand side: f(t, y, dydt).
using VectorField = std::function<void(double, const Eigen::VectorXd&, Eigen::VectorXd&)>;

enum class Method { rk4, rk45 };

const char* to_string(Method m);

struct IntegratorConfig {
    Method method = Method::rk4;
    /// Fixed step for rk4.
    double step = 1e-3;
    /// Local error tolerances for the embedded rk45 pair.
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double t_end = 50.0;
    /// Keep every k-th sample; the initial and final states are always kept.
    int record_every = 1;
};

struct TrajectoryMeta {
    std::string method;
    double step = 0.0;
    double abs_tol = 0.0;
    double rel_tol = 0.0;
    std::string fingerprint;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
    TrajectoryMeta meta;

    std::size_t samples() const { return times.size(); }
    int dim() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }
};

/// Deterministic integration of y' = f(t, y) from t0 to cfg.t_end. Identical
/// inputs produce bit-identical trajectories on one platform. The rk4 grid is
/// uniform with an exact landing on t_end; rk45 adapts its step to the local
/// error tolerances and lands on t_end exactly.
///
/// Throws NonFiniteState when the state overflows or turns NaN (reports the
/// first bad time) and StepUnderflow when the adaptive step falls below 1e-14.
Trajectory integrate(const VectorField& f, const Eigen::VectorXd& y0,
                     const IntegratorConfig& cfg, double t0 = 0.0,
                     std::string fingerprint = {});

VectorField make_full_field(NondimModel m);
VectorField make_dimensional_field(DimensionalModel m);
VectorField make_aggregate_field(AggregateConstants c);
VectorField make_shifted_field(AggregateConstants c);

}  // namespace socioeco
