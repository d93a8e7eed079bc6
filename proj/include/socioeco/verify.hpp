#pragma once

#include "socioeco/aggregate.hpp"
#include "socioeco/integrate.hpp"

namespace socioeco {

/// Maps a full-system trajectory (x, y_1..y_n) into aggregate coordinates
/// (z, u) = (log x, sum y). Samples with x <= 0 map to a non-finite z; the
/// consistency and monotonicity checks below treat those as failures.
Trajectory map_to_aggregate(const Trajectory& full);

struct ConsistencyReport {
    /// max over time of |log x(t) - z(t)|
    double max_z_dev = 0.0;
    /// max over time of |sum y(t) - u(t)|
    double max_u_dev = 0.0;
    double worst() const { return max_z_dev > max_u_dev ? max_z_dev : max_u_dev; }
};

/// Compares a full-system trajectory against an independently integrated
/// aggregate trajectory on the same time grid. Under the leaderless condition
/// the reduction is exact, so the deviation is pure integrator error; a
/// growing deviation exposes a network that is not leaderless.
/// Throws GridMismatch when the grids differ.
ConsistencyReport aggregate_consistency(const Trajectory& full, const Trajectory& aggregate);

struct MonotonicityReport {
    /// Number of sample pairs where V increased by more than the tolerance.
    int violations = 0;
    double max_increase = 0.0;
    double initial_value = 0.0;
    double final_value = 0.0;
};

/// Evaluates the Lyapunov function at every sample of an aggregate (z, u)
/// trajectory (or a shifted (v, w) one when shifted_frame is set) and reports
/// any increase above tol between consecutive samples. Non-finite values
/// count as violations.
MonotonicityReport lyapunov_monotonicity(const Trajectory& aggregate, const AggregateConstants& c,
                                         double tol = 1e-9, bool shifted_frame = false);

}  // namespace socioeco
