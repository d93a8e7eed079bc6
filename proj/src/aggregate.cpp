#include "socioeco/aggregate.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>

namespace socioeco {

AggregateConstants aggregate_constants(const NondimModel& m) {
    AggregateConstants c;
    for (int i = 0; i < m.n(); ++i) {
        c.K1 += m.eco_weight(i);
        c.K2 += m.eco_weight(i) * (m.rho(i) - 1.0);
    }
    return c;
}

AssumptionFlags check_assumptions(const NondimModel& m, double leaderless_tol) {
    AssumptionFlags flags;
    flags.leaderless_residual = leaderless_residual(m);
    flags.leaderless_tol = leaderless_tol;
    flags.leaderless = flags.leaderless_residual <= leaderless_tol;
    for (int i = 0; i < m.n(); ++i) {
        if (!(m.rho(i) > 0.0 && m.rho(i) < 2.0)) flags.rho_violations.push_back(i);
    }
    flags.rho_in_range = flags.rho_violations.empty();
    return flags;
}

std::pair<double, double> aggregate_vector_field(double z, double u, const AggregateConstants& c) {
    const double em1 = std::expm1(z);
    return {-em1 - u, c.K1 * em1 - c.K2};
}

namespace {

double checked_sum(const AggregateConstants& c) {
    const double sum = c.K1 + c.K2;
    if (!(sum > 0.0)) throw DegenerateSum(sum);
    return sum;
}

}  // namespace

std::pair<double, double> shifted_vector_field(double v, double w, const AggregateConstants& c) {
    const double sum = checked_sum(c);
    const double x0 = sum / c.K1;  // e^{z0}
    const double em1 = std::expm1(v);
    return {-x0 * em1 - w, sum * em1};
}

double lyapunov(double v, double w, const AggregateConstants& c) {
    const double sum = checked_sum(c);
    return std::expm1(v) - v + w * w / (2.0 * sum);
}

double lyapunov_rate(double v, double w, const AggregateConstants& c) {
    (void)w;
    const double sum = checked_sum(c);
    const double x0 = sum / c.K1;
    const double em1 = std::expm1(v);
    return -x0 * em1 * em1;
}

Eigen::VectorXd individual_equilibrium(const NondimModel& m, double x0, double u0) {
    const int n = m.n();
    const Eigen::MatrixXd& w = m.weights.w;

    // A y = b with A = diag(nu) (w - diag(row sums)); singular along ones.
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        const double row_sum = w.row(i).sum();
        for (int j = 0; j < n; ++j) {
            A(i, j) = m.nu(i) * (w(i, j) - (i == j ? row_sum : 0.0));
        }
        b(i) = -(1.0 - m.nu(i)) * (x0 - m.rho(i));
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double sv_max = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        if (sv(k) > 1e-10 * sv_max && sv(k) > 0.0) ++rank;
    }
    if (rank < n - 1) throw SingularBeyondKernel(rank, n);

    Eigen::MatrixXd M(n + 1, n);
    M.topRows(n) = A;
    M.row(n).setOnes();
    Eigen::VectorXd rhs(n + 1);
    rhs.head(n) = b;
    rhs(n) = u0;

    const Eigen::VectorXd y = M.colPivHouseholderQr().solve(rhs);

    const double resid = (M * y - rhs).cwiseAbs().maxCoeff();
    const double scale =
        std::max({1.0, rhs.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()});
    if (resid > 1e-6 * scale) {
        throw NumericError("steady-state solve residual " + std::to_string(resid) +
                           " too large; model is not leaderless");
    }
    return y;
}

EquilibriumReport equilibrium(const NondimModel& m, double leaderless_tol) {
    EquilibriumReport rep;
    rep.constants = aggregate_constants(m);
    rep.assumptions = check_assumptions(m, leaderless_tol);

    const double ratio = rep.constants.ratio();
    if (!(1.0 + ratio > 0.0)) throw DegenerateRatio(ratio);

    // log1p keeps z0 accurate when x0 is near 1 (K2 near 0).
    rep.z0 = std::log1p(ratio);
    rep.u0 = -ratio;
    rep.x0 = 1.0 + ratio;
    rep.R0 = rep.x0 * m.dimensional.Rmax;

    if (rep.assumptions.ok()) {
        rep.y_star = individual_equilibrium(m, rep.x0, rep.u0);
    }
    return rep;
}

}  // namespace socioeco
