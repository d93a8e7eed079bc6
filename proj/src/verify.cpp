#include "socioeco/verify.hpp"

#include <cmath>
#include <limits>

namespace socioeco {

Trajectory map_to_aggregate(const Trajectory& full) {
    Trajectory agg;
    agg.times = full.times;
    agg.meta = full.meta;
    agg.states.reserve(full.states.size());
    for (const auto& s : full.states) {
        Eigen::VectorXd zu(2);
        zu(0) = std::log(s(0));
        zu(1) = s.tail(s.size() - 1).sum();
        agg.states.push_back(std::move(zu));
    }
    return agg;
}

ConsistencyReport aggregate_consistency(const Trajectory& full, const Trajectory& aggregate) {
    if (full.samples() != aggregate.samples()) {
        throw GridMismatch("trajectories have " + std::to_string(full.samples()) + " and " +
                           std::to_string(aggregate.samples()) + " samples");
    }
    if (aggregate.dim() != 2 || full.dim() < 2) {
        throw GridMismatch("expected a full (x, y...) and an aggregate (z, u) trajectory");
    }
    for (std::size_t k = 0; k < full.samples(); ++k) {
        if (full.times[k] != aggregate.times[k]) {
            throw GridMismatch("time grids differ at sample " + std::to_string(k));
        }
    }

    constexpr double inf = std::numeric_limits<double>::infinity();
    ConsistencyReport rep;
    for (std::size_t k = 0; k < full.samples(); ++k) {
        const auto& s = full.states[k];
        const double x = s(0);
        const double z_mapped = std::log(x);
        const double u_mapped = s.tail(s.size() - 1).sum();
        const double dz = (x > 0.0 && std::isfinite(z_mapped))
                              ? std::abs(z_mapped - aggregate.states[k](0))
                              : inf;
        const double du = std::abs(u_mapped - aggregate.states[k](1));
        rep.max_z_dev = std::max(rep.max_z_dev, dz);
        rep.max_u_dev = std::max(rep.max_u_dev, std::isfinite(du) ? du : inf);
    }
    return rep;
}

MonotonicityReport lyapunov_monotonicity(const Trajectory& aggregate, const AggregateConstants& c,
                                         double tol, bool shifted_frame) {
    const double ratio = c.ratio();
    const double z0 = std::log1p(ratio);
    const double u0 = -ratio;

    MonotonicityReport rep;
    double prev = 0.0;
    for (std::size_t k = 0; k < aggregate.samples(); ++k) {
        const auto& s = aggregate.states[k];
        const double v = shifted_frame ? s(0) : s(0) - z0;
        const double w = shifted_frame ? s(1) : s(1) - u0;
        const double value = lyapunov(v, w, c);
        if (!std::isfinite(value)) {
            ++rep.violations;
            rep.max_increase = std::numeric_limits<double>::infinity();
        } else if (k > 0) {
            const double increase = value - prev;
            if (increase > tol) ++rep.violations;
            rep.max_increase = std::max(rep.max_increase, increase);
        }
        if (k == 0) rep.initial_value = value;
        rep.final_value = value;
        prev = value;
    }
    return rep;
}

}  // namespace socioeco
