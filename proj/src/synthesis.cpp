#include "socioeco/synthesis.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace socioeco {

namespace {

// Relative singular-value cutoff separating kernel directions from the rest.
constexpr double kKernelSvTol = 1e-10;
// Entries at or below this (after normalization to max entry 1) are treated
// as non-positive.
constexpr double kPositivityFloor = 1e-12;

}  // namespace

InfluenceMatrix build_influence_matrix(const SocialWeights& weights) {
    const int n = weights.n();
    InfluenceMatrix im;
    im.W.resize(n, n);
    for (int i = 0; i < n; ++i) {
        double row_out = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i) {
                im.W(i, j) = weights.w(j, i);
                row_out += weights.w(i, j);
            }
        }
        im.W(i, i) = -row_out;
    }
    return im;
}

Eigen::VectorXd kernel_vector(const InfluenceMatrix& im) {
    const int n = im.n();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(im.W, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double sv_max = sv(0);

    int kernel_dim = 0;
    for (int k = n - 1; k >= 0; --k) {
        if (sv(k) <= kKernelSvTol * sv_max) ++kernel_dim;
        else break;
    }
    if (kernel_dim != 1) throw KernelDimensionError(kernel_dim);

    Eigen::VectorXd p = svd.matrixV().col(n - 1);
    Eigen::Index imax;
    p.cwiseAbs().maxCoeff(&imax);
    if (p(imax) < 0.0) p = -p;
    p /= p(imax);
    if (p.minCoeff() <= kPositivityFloor) throw NonPositiveKernel();

    const double residual = (im.W * p).cwiseAbs().maxCoeff();
    if (residual > 1e-10) {
        throw NumericError("kernel residual " + std::to_string(residual) + " exceeds 1e-10");
    }
    return p;
}

SynthesisResult synthesize_orientations(const SocialWeights& weights,
                                        const std::vector<EcoParams>& eco,
                                        const ResourceParams& resource, double scale) {
    const int n = weights.n();
    if (static_cast<int>(eco.size()) != n) {
        throw ValidationError("synthesize: got " + std::to_string(eco.size()) +
                              " ecological parameter sets for " + std::to_string(n) + " agents");
    }
    if (!(scale > 0.0)) throw ValidationError("synthesize: scale must be > 0");

    const InfluenceMatrix im = build_influence_matrix(weights);
    const Eigen::VectorXd p = kernel_vector(im);

    SynthesisResult res;
    res.scale = scale;
    res.products = scale * p;
    res.orientations = resource.r * scale * p;
    res.residual = (im.W * p).cwiseAbs().maxCoeff();
    res.model.resource = resource;
    res.model.weights = weights;
    res.model.agents.reserve(n);
    for (int i = 0; i < n; ++i) {
        res.model.agents.push_back({eco[i].alpha, res.orientations(i), eco[i].R_threshold});
    }
    return res;
}

}  // namespace socioeco
