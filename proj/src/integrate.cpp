#include "socioeco/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace socioeco {

const char* to_string(Method m) {
    return m == Method::rk4 ? "rk4" : "rk45";
}

namespace {

constexpr double kMinStep = 1e-14;

bool all_finite(const Eigen::VectorXd& v) {
    return v.allFinite();
}

void validate_config(const IntegratorConfig& cfg, double t0) {
    std::vector<std::string> issues;
    if (!(cfg.t_end > t0))
        issues.push_back("integrator.t_end: must exceed the start time " + std::to_string(t0));
    if (cfg.method == Method::rk4 && !(cfg.step > 0.0))
        issues.push_back("integrator.step: must be > 0");
    if (cfg.method == Method::rk45) {
        if (!(cfg.abs_tol > 0.0)) issues.push_back("integrator.abs_tol: must be > 0");
        if (!(cfg.rel_tol > 0.0)) issues.push_back("integrator.rel_tol: must be > 0");
    }
    if (cfg.record_every < 1) issues.push_back("integrator.record_every: must be >= 1");
    if (!issues.empty()) throw ValidationError(issues);
}

Trajectory run_rk4(const VectorField& f, const Eigen::VectorXd& y0, const IntegratorConfig& cfg,
                   double t0) {
    const double span = cfg.t_end - t0;
    const double h = cfg.step;
    long long nsteps = static_cast<long long>(std::ceil(span / h - 1e-9));
    if (nsteps < 1) nsteps = 1;
    while (nsteps > 1 && t0 + static_cast<double>(nsteps - 1) * h >= cfg.t_end) --nsteps;
    auto grid = [&](long long i) {
        return i == nsteps ? cfg.t_end : t0 + static_cast<double>(i) * h;
    };

    Trajectory traj;
    traj.times.reserve(static_cast<std::size_t>(nsteps / cfg.record_every + 2));
    traj.states.reserve(traj.times.capacity());
    traj.times.push_back(t0);
    traj.states.push_back(y0);

    const Eigen::Index dim = y0.size();
    Eigen::VectorXd y = y0, k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    for (long long i = 0; i < nsteps; ++i) {
        const double t = grid(i);
        const double tn = grid(i + 1);
        const double hi = tn - t;
        f(t, y, k1);
        tmp = y + 0.5 * hi * k1;
        f(t + 0.5 * hi, tmp, k2);
        tmp = y + 0.5 * hi * k2;
        f(t + 0.5 * hi, tmp, k3);
        tmp = y + hi * k3;
        f(tn, tmp, k4);
        y += (hi / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!all_finite(y)) throw NonFiniteState(tn);
        if ((i + 1) % cfg.record_every == 0 || i + 1 == nsteps) {
            traj.times.push_back(tn);
            traj.states.push_back(y);
        }
    }
    return traj;
}

// Dormand-Prince 5(4) coefficients.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// Difference between the 5th and the embedded 4th order weights.
constexpr double d1 = 71.0 / 57600.0, d3 = -71.0 / 16695.0, d4 = 71.0 / 1920.0,
                 d5 = -17253.0 / 339200.0, d6 = 22.0 / 525.0, d7 = -1.0 / 40.0;
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;

Trajectory run_rk45(const VectorField& f, const Eigen::VectorXd& y0, const IntegratorConfig& cfg,
                    double t0) {
    const double span = cfg.t_end - t0;

    Trajectory traj;
    traj.times.push_back(t0);
    traj.states.push_back(y0);

    const Eigen::Index dim = y0.size();
    Eigen::VectorXd y = y0, ynew(dim), tmp(dim);
    Eigen::VectorXd k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);

    double t = t0;
    double h = std::min(0.01 * span, 0.1);
    f(t, y, k1);
    long long accepted = 0;
    bool final_recorded = false;

    while (t < cfg.t_end) {
        bool landing = false;
        if (t + h >= cfg.t_end) {
            h = cfg.t_end - t;
            landing = true;
        }
        if (h < kMinStep) throw StepUnderflow(t);

        tmp = y + h * (a21 * k1);
        f(t + c2 * h, tmp, k2);
        tmp = y + h * (a31 * k1 + a32 * k2);
        f(t + c3 * h, tmp, k3);
        tmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(t + c4 * h, tmp, k4);
        tmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(t + c5 * h, tmp, k5);
        tmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(t + h, tmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        f(t + h, ynew, k7);

        double err_sq = 0.0;
        bool err_finite = true;
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double e =
                h * (d1 * k1(i) + d3 * k3(i) + d4 * k4(i) + d5 * k5(i) + d6 * k6(i) + d7 * k7(i));
            const double sc =
                cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
            const double ratio = e / sc;
            if (!std::isfinite(ratio)) err_finite = false;
            err_sq += ratio * ratio;
        }
        const double err = std::sqrt(err_sq / static_cast<double>(dim));

        if (err_finite && err <= 1.0) {
            const double tn = landing ? cfg.t_end : t + h;
            if (!all_finite(ynew)) throw NonFiniteState(tn);
            y = ynew;
            k1 = k7;  // first-same-as-last
            t = tn;
            ++accepted;
            if (accepted % cfg.record_every == 0 || t >= cfg.t_end) {
                traj.times.push_back(t);
                traj.states.push_back(y);
                if (t >= cfg.t_end) final_recorded = true;
            }
        }

        double factor;
        if (!err_finite) {
            factor = 0.2;
        } else if (err == 0.0) {
            factor = 5.0;
        } else {
            factor = std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        }
        h *= factor;
    }
    if (!final_recorded) {
        traj.times.push_back(t);
        traj.states.push_back(y);
    }
    return traj;
}

}  // namespace

Trajectory integrate(const VectorField& f, const Eigen::VectorXd& y0, const IntegratorConfig& cfg,
                     double t0, std::string fingerprint) {
    validate_config(cfg, t0);
    if (y0.size() < 1) throw ValidationError("integrate: empty initial state");
    if (!all_finite(y0)) throw NonFiniteState(t0);

    Trajectory traj =
        cfg.method == Method::rk4 ? run_rk4(f, y0, cfg, t0) : run_rk45(f, y0, cfg, t0);
    traj.meta.method = to_string(cfg.method);
    if (cfg.method == Method::rk4) {
        traj.meta.step = cfg.step;
    } else {
        traj.meta.abs_tol = cfg.abs_tol;
        traj.meta.rel_tol = cfg.rel_tol;
    }
    traj.meta.fingerprint = std::move(fingerprint);
    return traj;
}

VectorField make_full_field(NondimModel m) {
    return [m = std::move(m)](double, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) {
        nondim_vector_field(y, m, dydt);
    };
}

VectorField make_dimensional_field(DimensionalModel m) {
    return [m = std::move(m)](double, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) {
        dimensional_vector_field(y, m, dydt);
    };
}

VectorField make_aggregate_field(AggregateConstants c) {
    return [c](double, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) {
        dydt.resize(2);
        const auto [dz, du] = aggregate_vector_field(y(0), y(1), c);
        dydt(0) = dz;
        dydt(1) = du;
    };
}

VectorField make_shifted_field(AggregateConstants c) {
    return [c](double, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) {
        dydt.resize(2);
        const auto [dv, dw] = shifted_vector_field(y(0), y(1), c);
        dydt(0) = dv;
        dydt(1) = dw;
    };
}

}  // namespace socioeco
