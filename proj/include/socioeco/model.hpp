#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "socioeco/errors.hpp"

namespace socioeco {

/// Renewable resource: logistic growth at rate r, saturation at Rmax.
struct ResourceParams {
    double r = 1.0;
    double Rmax = 1.0;
};

/// One consumer. alpha weighs the ecological signal, s the social one,
/// R_threshold is the resource level below which the agent perceives scarcity.
struct AgentParams {
    double alpha = 1.0;
    double s = 1.0;
    double R_threshold = 1.0;
};

/// Directed social ties. w(i, j) is the strength of the tie from j to i,
/// i.e. how much agent i listens to agent j. Diagonal is zero and every
/// row sums to 1 (within kRowSumTol) for validated matrices.
struct SocialWeights {
    Eigen::MatrixXd w;
    int n() const { return static_cast<int>(w.rows()); }
};

inline constexpr double kRowSumTol = 1e-12;

/// Human-readable invariant violations of a raw weight matrix, empty if valid.
/// Paths are spelled like "weights.row[2]" so scenario errors stay navigable.
std::vector<std::string> weight_issues(const Eigen::MatrixXd& raw);

/// Validates a raw matrix (n >= 2). Throws NegativeEntry, NonZeroDiagonal or
/// RowSumNotOne on the first violation. Never renormalizes: the input file is
/// the single source of truth for the network.
SocialWeights validate_weights(const Eigen::MatrixXd& raw);

/// Resource plus n agents plus their ties, in physical units.
struct DimensionalModel {
    ResourceParams resource;
    std::vector<AgentParams> agents;
    SocialWeights weights;
    int n() const { return static_cast<int>(agents.size()); }
};

std::vector<std::string> model_issues(const DimensionalModel& m);

/// Dimensionless form of the model. Per agent:
///   beta = (alpha Rmax + r s) / r^2   (sensitivity)
///   nu   = r s / (alpha Rmax + r s)   (socio-ecological relevance, in (0,1))
///   rho  = R_threshold / Rmax         (environmentalism)
/// eco_weight caches a_i = beta_i (1 - nu_i) = alpha_i Rmax / r^2, the
/// coefficient of the ecological term after aggregation. Note the ecological
/// coefficient is sometimes written as a product with a separate symbol; here
/// it is always the cached a_i and never recomputed from beta and nu twice.
struct NondimModel {
    Eigen::VectorXd beta;
    Eigen::VectorXd nu;
    Eigen::VectorXd rho;
    Eigen::VectorXd eco_weight;
    SocialWeights weights;
    /// Original units, kept so results can be rescaled back (R0 = x0 * Rmax).
    ResourceParams dimensional;
    int n() const { return static_cast<int>(beta.size()); }
};

NondimModel nondimensionalize(const DimensionalModel& m);

/// Builds a NondimModel directly from dimensionless parameters; eco_weight is
/// derived as beta (1 - nu). Intended for tests and synthetic models.
NondimModel make_nondim(const Eigen::VectorXd& beta, const Eigen::VectorXd& nu,
                        const Eigen::VectorXd& rho, SocialWeights weights,
                        ResourceParams dimensional = {});

/// Dimensionless phase point. x > 0 is required by anything that takes log x;
/// consumption efforts y may be negative (agents can contribute resource).
struct FullState {
    double x = 0.0;
    Eigen::VectorXd y;

    Eigen::VectorXd flatten() const;
    static FullState unflatten(const Eigen::VectorXd& v);
};

/// d/dtau of (R, e_1..e_n):
///   dR = r R (1 - R/Rmax) - R sum(e)
///   de_i = alpha_i (R - R_i) + s_i sum_j w_ij (e_j - e_i)
/// State layout: state(0) = R, state(1 + i) = e_i.
void dimensional_vector_field(const Eigen::VectorXd& state, const DimensionalModel& m,
                              Eigen::VectorXd& deriv);
Eigen::VectorXd dimensional_vector_field(const Eigen::VectorXd& state, const DimensionalModel& m);

/// d/dt of (x, y_1..y_n):
///   dx = (1 - x) x - x sum(y)
///   dy_i = beta_i ((1 - nu_i)(x - rho_i) + nu_i sum_j w_ij (y_j - y_i))
void nondim_vector_field(const Eigen::VectorXd& state, const NondimModel& m,
                         Eigen::VectorXd& deriv);
Eigen::VectorXd nondim_vector_field(const Eigen::VectorXd& state, const NondimModel& m);

enum class Role { leader, follower, neutral };

const char* to_string(Role role);

/// Per-agent influence balance. in_influence(i) = sum_j beta_i nu_i w_ij,
/// out_influence(i) = sum_j beta_j nu_j w_ji, net = out - in. An agent is a
/// leader when net > tol, a follower when net < -tol, neutral otherwise.
struct InfluenceReport {
    Eigen::VectorXd in_influence;
    Eigen::VectorXd out_influence;
    Eigen::VectorXd net_influence;
    std::vector<Role> roles;
    double role_tol = 1e-9;
};

InfluenceReport influence(const NondimModel& m, double role_tol = 1e-9);

/// max_i |sum_j (w_ij beta_i nu_i - w_ji beta_j nu_j)|; zero iff leaderless.
double leaderless_residual(const NondimModel& m);

bool is_leaderless(const NondimModel& m, double tol = 1e-10);

/// Stable 64-bit content hash of all model parameters, as a hex string.
std::string model_fingerprint(const NondimModel& m);

}  // namespace socioeco
