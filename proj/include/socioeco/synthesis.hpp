#pragma once

#include <Eigen/Dense>
#include <vector>

#include "socioeco/model.hpp"

namespace socioeco {

/// Edge-weight matrix whose kernel characterizes leaderless configurations:
/// off-diagonal entry (i, j) is w(j, i) and diagonal entry (i, i) is
/// -sum_{j != i} w(i, j). Columns sum to zero by construction, so the matrix
/// is always singular; for a strongly connected graph the kernel is
/// one-dimensional and spanned by a strictly positive vector.
struct InfluenceMatrix {
    Eigen::MatrixXd W;
    int n() const { return static_cast<int>(W.rows()); }
};

InfluenceMatrix build_influence_matrix(const SocialWeights& weights);

/// Kernel direction of W via singular value decomposition. The smallest
/// singular direction is accepted as the kernel only when its singular value
/// is <= 1e-10 times the largest one. The result is normalized so its largest
/// entry is exactly 1 and is strictly positive.
///
/// Throws KernelDimensionError when the numerical kernel dimension is not 1
/// (graph not strongly connected) and NonPositiveKernel when the kernel
/// direction has entries <= 0 (no positive orientations exist).
Eigen::VectorXd kernel_vector(const InfluenceMatrix& im);

/// Ecological side of one agent; the social orientation is what gets solved for.
struct EcoParams {
    double alpha = 1.0;
    double R_threshold = 1.0;
};

struct SynthesisResult {
    /// beta_i nu_i of the synthesized model, equal to scale times the
    /// normalized kernel vector.
    Eigen::VectorXd products;
    /// Social orientations s_i = r * scale * kernel_i.
    Eigen::VectorXd orientations;
    /// max |W p| over the normalized kernel (largest entry 1).
    double residual = 0.0;
    double scale = 1.0;
    /// Complete model carrying the synthesized orientations.
    DimensionalModel model;
};

/// Solves for social orientations that make the given network leaderless,
/// using the identity beta_i nu_i = s_i / r. The kernel is normalized to
/// largest entry 1 before the user scale is applied, so products are
/// comparable across graphs.
SynthesisResult synthesize_orientations(const SocialWeights& weights,
                                        const std::vector<EcoParams>& eco,
                                        const ResourceParams& resource, double scale = 1.0);

}  // namespace socioeco
