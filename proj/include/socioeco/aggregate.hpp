#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "socioeco/model.hpp"

namespace socioeco {

/// Coefficients of the two-state aggregate dynamics:
///   K1 = sum_i a_i,  K2 = sum_i a_i (rho_i - 1)
/// with a_i the cached eco_weight. K1 is always positive; when every rho_i
/// lies in (0, 2), |K2| <= K1 and K2/K1 + 1 > 0.
struct AggregateConstants {
    double K1 = 0.0;
    double K2 = 0.0;
    double ratio() const { return K2 / K1; }
};

AggregateConstants aggregate_constants(const NondimModel& m);

/// Outcome of checking the two stability preconditions: a leaderless network
/// and every environmentalism rho_i inside the open interval (0, 2).
struct AssumptionFlags {
    bool leaderless = false;
    double leaderless_residual = 0.0;
    double leaderless_tol = 0.0;
    bool rho_in_range = false;
    std::vector<int> rho_violations;
    bool ok() const { return leaderless && rho_in_range; }
};

AssumptionFlags check_assumptions(const NondimModel& m, double leaderless_tol = 1e-10);

/// (dz, du) for the aggregate pair z = log x, u = sum(y):
///   dz = 1 - e^z - u,  du = K1 (e^z - 1) - K2.
std::pair<double, double> aggregate_vector_field(double z, double u, const AggregateConstants& c);

/// (dv, dw) for the equilibrium-shifted pair v = z - z0, w = u - u0:
///   dv = -e^{z0} (e^v - 1) - w,  dw = (K1 + K2)(e^v - 1).
/// Throws DegenerateSum when K1 + K2 <= 0.
std::pair<double, double> shifted_vector_field(double v, double w, const AggregateConstants& c);

/// V(v, w) = e^v - v - 1 + w^2 / (2 (K1 + K2)). Positive definite and
/// radially unbounded; V(0, 0) = 0. Throws DegenerateSum when K1 + K2 <= 0.
double lyapunov(double v, double w, const AggregateConstants& c);

/// Closed-form time derivative along trajectories:
/// dV/dt = -e^{z0} (e^v - 1)^2 <= 0, vanishing exactly on the v = 0 axis.
double lyapunov_rate(double v, double w, const AggregateConstants& c);

struct ShiftedState {
    double v = 0.0;
    double w = 0.0;
};

struct EquilibriumReport {
    AggregateConstants constants;
    AssumptionFlags assumptions;
    double z0 = 0.0;  ///< log(K2/K1 + 1)
    double u0 = 0.0;  ///< -K2/K1
    double x0 = 0.0;  ///< K2/K1 + 1, the dimensionless resource level
    double R0 = 0.0;  ///< x0 * Rmax, the dimensional resource level
    /// Individual steady-state efforts; empty when the assumptions fail.
    Eigen::VectorXd y_star;
};

/// Computes the unique aggregate equilibrium and, when both assumptions hold,
/// the individual steady-state efforts. Throws DegenerateRatio when
/// K2/K1 + 1 <= 0 (only possible when some rho_i is outside (0, 2)).
EquilibriumReport equilibrium(const NondimModel& m, double leaderless_tol = 1e-10);

/// Solves the per-agent steady-state conditions
///   (1 - nu_i)(x0 - rho_i) + nu_i sum_j w_ij (y_j - y_i) = 0
/// subject to sum(y) = u0. The unconstrained system is singular with kernel
/// spanned by the all-ones direction; the rank deficiency is resolved by
/// appending the sum constraint and solving in the least-squares sense, then
/// verifying the residual. Throws SingularBeyondKernel when the numerical
/// rank is below n - 1 (weights not strongly connected).
Eigen::VectorXd individual_equilibrium(const NondimModel& m, double x0, double u0);

}  // namespace socioeco
