#include "socioeco/model.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>

namespace socioeco {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

std::vector<std::string> weight_issues(const Eigen::MatrixXd& raw) {
    std::vector<std::string> issues;
    if (raw.rows() != raw.cols()) {
        issues.push_back("weights: matrix must be square, got " + std::to_string(raw.rows()) +
                         "x" + std::to_string(raw.cols()));
        return issues;
    }
    const int n = static_cast<int>(raw.rows());
    if (n < 2) {
        issues.push_back("weights: need at least 2 agents, got " + std::to_string(n));
        return issues;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (raw(i, j) < 0.0) {
                issues.push_back("weights[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]: negative entry " + num(raw(i, j)));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (raw(i, i) != 0.0) {
            issues.push_back("weights[" + std::to_string(i) + "][" + std::to_string(i) +
                             "]: diagonal must be 0, got " + num(raw(i, i)));
        }
    }
    for (int i = 0; i < n; ++i) {
        const double sum = raw.row(i).sum();
        if (std::abs(sum - 1.0) > kRowSumTol) {
            issues.push_back("weights.row[" + std::to_string(i) + "]: sums to " + num(sum) +
                             ", deviation " + num(sum - 1.0));
        }
    }
    return issues;
}

SocialWeights validate_weights(const Eigen::MatrixXd& raw) {
    if (raw.rows() != raw.cols() || raw.rows() < 2) {
        throw ValidationError("weights must be a square matrix with n >= 2, got " +
                              std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));
    }
    const int n = static_cast<int>(raw.rows());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (raw(i, j) < 0.0) throw NegativeEntry(i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (raw(i, i) != 0.0) throw NonZeroDiagonal(i);
    }
    for (int i = 0; i < n; ++i) {
        const double sum = raw.row(i).sum();
        if (std::abs(sum - 1.0) > kRowSumTol) throw RowSumNotOne(i, sum - 1.0);
    }
    return SocialWeights{raw};
}

std::vector<std::string> model_issues(const DimensionalModel& m) {
    std::vector<std::string> issues;
    if (!(m.resource.r > 0.0)) issues.push_back("resource.r: must be > 0, got " + num(m.resource.r));
    if (!(m.resource.Rmax > 0.0))
        issues.push_back("resource.Rmax: must be > 0, got " + num(m.resource.Rmax));
    for (std::size_t i = 0; i < m.agents.size(); ++i) {
        const auto& a = m.agents[i];
        if (!(a.alpha > 0.0))
            issues.push_back("agents[" + std::to_string(i) + "].alpha: must be > 0, got " +
                             num(a.alpha));
        if (!(a.s > 0.0))
            issues.push_back("agents[" + std::to_string(i) + "].s: must be > 0, got " + num(a.s));
    }
    if (m.n() != m.weights.n()) {
        issues.push_back("agents: count " + std::to_string(m.n()) +
                         " does not match weight matrix size " + std::to_string(m.weights.n()));
    }
    auto wi = weight_issues(m.weights.w);
    issues.insert(issues.end(), wi.begin(), wi.end());
    return issues;
}

NondimModel nondimensionalize(const DimensionalModel& m) {
    const int n = m.n();
    const double r = m.resource.r;
    const double Rmax = m.resource.Rmax;
    NondimModel out;
    out.beta.resize(n);
    out.nu.resize(n);
    out.rho.resize(n);
    out.eco_weight.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto& a = m.agents[i];
        const double denom = a.alpha * Rmax + r * a.s;
        out.beta(i) = denom / (r * r);
        out.nu(i) = r * a.s / denom;
        out.rho(i) = a.R_threshold / Rmax;
        out.eco_weight(i) = a.alpha * Rmax / (r * r);
    }
    out.weights = m.weights;
    out.dimensional = m.resource;
    return out;
}

NondimModel make_nondim(const Eigen::VectorXd& beta, const Eigen::VectorXd& nu,
                        const Eigen::VectorXd& rho, SocialWeights weights,
                        ResourceParams dimensional) {
    std::vector<std::string> issues;
    const int n = static_cast<int>(beta.size());
    if (nu.size() != n || rho.size() != n || weights.n() != n)
        issues.push_back("make_nondim: beta/nu/rho/weights sizes disagree");
    for (int i = 0; i < n && issues.empty(); ++i) {
        if (!(beta(i) > 0.0)) issues.push_back("beta[" + std::to_string(i) + "]: must be > 0");
        if (!(nu(i) > 0.0 && nu(i) < 1.0))
            issues.push_back("nu[" + std::to_string(i) + "]: must be in (0,1)");
    }
    if (!issues.empty()) throw ValidationError(issues);
    NondimModel out;
    out.beta = beta;
    out.nu = nu;
    out.rho = rho;
    out.eco_weight = (beta.array() * (1.0 - nu.array())).matrix();
    out.weights = std::move(weights);
    out.dimensional = dimensional;
    return out;
}

Eigen::VectorXd FullState::flatten() const {
    Eigen::VectorXd v(y.size() + 1);
    v(0) = x;
    v.tail(y.size()) = y;
    return v;
}

FullState FullState::unflatten(const Eigen::VectorXd& v) {
    FullState s;
    s.x = v(0);
    s.y = v.tail(v.size() - 1);
    return s;
}

void dimensional_vector_field(const Eigen::VectorXd& state, const DimensionalModel& m,
                              Eigen::VectorXd& deriv) {
    const int n = m.n();
    const double R = state(0);
    deriv.resize(n + 1);
    double total_effort = 0.0;
    for (int i = 0; i < n; ++i) total_effort += state(1 + i);
    deriv(0) = m.resource.r * R * (1.0 - R / m.resource.Rmax) - R * total_effort;
    for (int i = 0; i < n; ++i) {
        const auto& a = m.agents[i];
        double social = 0.0;
        for (int j = 0; j < n; ++j) {
            social += m.weights.w(i, j) * (state(1 + j) - state(1 + i));
        }
        deriv(1 + i) = a.alpha * (R - a.R_threshold) + a.s * social;
    }
}

Eigen::VectorXd dimensional_vector_field(const Eigen::VectorXd& state, const DimensionalModel& m) {
    Eigen::VectorXd d;
    dimensional_vector_field(state, m, d);
    return d;
}

void nondim_vector_field(const Eigen::VectorXd& state, const NondimModel& m,
                         Eigen::VectorXd& deriv) {
    const int n = m.n();
    const double x = state(0);
    deriv.resize(n + 1);
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += state(1 + i);
    deriv(0) = (1.0 - x) * x - x * total;
    for (int i = 0; i < n; ++i) {
        double social = 0.0;
        for (int j = 0; j < n; ++j) {
            social += m.weights.w(i, j) * (state(1 + j) - state(1 + i));
        }
        deriv(1 + i) = m.beta(i) * ((1.0 - m.nu(i)) * (x - m.rho(i)) + m.nu(i) * social);
    }
}

Eigen::VectorXd nondim_vector_field(const Eigen::VectorXd& state, const NondimModel& m) {
    Eigen::VectorXd d;
    nondim_vector_field(state, m, d);
    return d;
}

const char* to_string(Role role) {
    switch (role) {
        case Role::leader: return "leader";
        case Role::follower: return "follower";
        case Role::neutral: return "neutral";
    }
    return "?";
}

InfluenceReport influence(const NondimModel& m, double role_tol) {
    const int n = m.n();
    InfluenceReport rep;
    rep.in_influence.resize(n);
    rep.out_influence.resize(n);
    rep.net_influence.resize(n);
    rep.roles.resize(n);
    rep.role_tol = role_tol;
    const Eigen::VectorXd p = (m.beta.array() * m.nu.array()).matrix();
    for (int i = 0; i < n; ++i) {
        double in = 0.0, out = 0.0;
        for (int j = 0; j < n; ++j) {
            in += m.weights.w(i, j) * p(i);
            out += m.weights.w(j, i) * p(j);
        }
        rep.in_influence(i) = in;
        rep.out_influence(i) = out;
        const double net = out - in;
        rep.net_influence(i) = net;
        rep.roles[i] = std::abs(net) <= role_tol ? Role::neutral
                       : net > 0.0               ? Role::leader
                                                 : Role::follower;
    }
    return rep;
}

double leaderless_residual(const NondimModel& m) {
    const int n = m.n();
    const Eigen::VectorXd p = (m.beta.array() * m.nu.array()).matrix();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            acc += m.weights.w(i, j) * p(i) - m.weights.w(j, i) * p(j);
        }
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

bool is_leaderless(const NondimModel& m, double tol) {
    return leaderless_residual(m) <= tol;
}

namespace {

void fnv_mix(std::uint64_t& h, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int k = 0; k < 8; ++k) {
        h ^= (bits >> (8 * k)) & 0xffu;
        h *= 0x100000001b3ull;
    }
}

}  // namespace

std::string model_fingerprint(const NondimModel& m) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    fnv_mix(h, m.dimensional.r);
    fnv_mix(h, m.dimensional.Rmax);
    for (int i = 0; i < m.n(); ++i) {
        fnv_mix(h, m.beta(i));
        fnv_mix(h, m.nu(i));
        fnv_mix(h, m.rho(i));
        fnv_mix(h, m.eco_weight(i));
    }
    for (int i = 0; i < m.weights.n(); ++i)
        for (int j = 0; j < m.weights.n(); ++j) fnv_mix(h, m.weights.w(i, j));
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace socioeco
