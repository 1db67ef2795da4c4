#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "uniexp/unitary.hpp"

namespace uniexp {

/// 2n+1 strictly increasing interpolation nodes in [-1,1].
class NodeSet {
public:
    explicit NodeSet(std::vector<double> nodes);

    int degree() const { return (static_cast<int>(nodes_.size()) - 1) / 2; }
    const std::vector<double>& nodes() const { return nodes_; }

private:
    std::vector<double> nodes_;
};

struct SupportTestSplit {
    std::vector<double> support; // even positions of the ascending node list
    std::vector<double> test;    // odd positions
};

struct InterpolationResult {
    UnitaryBarycentric approximant;
    std::vector<double> residuals;      // |r(i x_j) - e^{i omega x_j}| per node
    std::vector<int> unattainable;      // node indices failing the pointwise condition
};

enum class RankPolicy {
    Throw,  // rank-deficiency error on ambiguous null space
    Accept, // keep the computed null vector (linearized solution)
};

/// Chebyshev nodes cos((2j-1)pi/(2m)), j=1..m, ascending.  Mirror-symmetric
/// in exact floating point (middle node exactly 0 for odd m).
std::vector<double> chebyshev_nodes(int m);

SupportTestSplit split_support_test(const NodeSet& nodes);

/// Real rotated Loewner matrix A_{kj} = sin(omega (t_k - s_j)/2)/(t_k - s_j).
Eigen::MatrixXd rotated_loewner_matrix(double omega, std::span<const double> support,
                                       std::span<const double> test);

/// Unitary rational interpolant at the given nodes: the rotated weight vector
/// is the right singular vector of the smallest singular value of the rotated
/// Loewner matrix.  Nodes whose pointwise residual exceeds
/// 1e-8 * max(1, sup-error) are flagged unattainable.
InterpolationResult interpolate_unitary(double omega, const NodeSet& nodes,
                                        RankPolicy policy = RankPolicy::Throw);

} // namespace uniexp
