#include "uniexp/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"

namespace uniexp {

NodeSet::NodeSet(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty() || nodes_.size() % 2 == 0)
        throw std::invalid_argument("node count must be odd (2n+1)");
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        if (!(nodes_[j] >= -1.0 && nodes_[j] <= 1.0))
            throw std::invalid_argument("interpolation node outside [-1,1]");
        if (j > 0 && !(nodes_[j - 1] < nodes_[j]))
            throw CoincidentNodeError("interpolation nodes must be strictly increasing");
    }
}

std::vector<double> chebyshev_nodes(int m) {
    if (m < 1) throw std::invalid_argument("need at least one node");
    // sin form of cos((2j-1)pi/(2m)): exactly mirror-symmetric, middle node
    // exactly zero for odd m.
    std::vector<double> nodes(m);
    for (int j = 1; j <= m; ++j)
        nodes[j - 1] = std::sin(detail::kPi * (2 * j - m - 1) / (2.0 * m));
    return nodes;
}

SupportTestSplit split_support_test(const NodeSet& nodes) {
    SupportTestSplit split;
    const auto& x = nodes.nodes();
    for (std::size_t j = 0; j < x.size(); ++j)
        (j % 2 == 0 ? split.support : split.test).push_back(x[j]);
    return split;
}

Eigen::MatrixXd rotated_loewner_matrix(double omega, std::span<const double> support,
                                       std::span<const double> test) {
    Eigen::MatrixXd a(test.size(), support.size());
    for (std::size_t k = 0; k < test.size(); ++k)
        for (std::size_t j = 0; j < support.size(); ++j) {
            double d = test[k] - support[j];
            if (d == 0.0) throw CoincidentNodeError("support and test nodes coincide");
            a(k, j) = std::sin(0.5 * omega * d) / d;
        }
    return a;
}

namespace {

bool exactly_mirrored(const std::vector<double>& x) {
    const std::size_t m = x.size();
    for (std::size_t j = 0; j < m; ++j)
        if (x[j] != -x[m - 1 - j]) return false;
    return true;
}

// For a mirrored support set the null vector is symmetric or antisymmetric
// under reversal; project onto the dominant branch so the interpolant is
// structurally symmetric.
void symmetrize_weights(std::vector<double>& v) {
    const std::size_t m = v.size();
    double norm_sym = 0.0, norm_asym = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.5 * (v[j] + v[m - 1 - j]);
        double a = 0.5 * (v[j] - v[m - 1 - j]);
        norm_sym += s * s;
        norm_asym += a * a;
    }
    if (norm_sym >= norm_asym) {
        for (std::size_t j = 0; j < (m + 1) / 2; ++j) {
            double s = 0.5 * (v[j] + v[m - 1 - j]);
            v[j] = s;
            v[m - 1 - j] = s;
        }
    } else {
        for (std::size_t j = 0; j < (m + 1) / 2; ++j) {
            double a = 0.5 * (v[j] - v[m - 1 - j]);
            v[j] = a;
            v[m - 1 - j] = -a;
        }
    }
}

} // namespace

InterpolationResult interpolate_unitary(double omega, const NodeSet& nodes, RankPolicy policy) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    const int n = nodes.degree();
    auto split = split_support_test(nodes);

    std::vector<double> v(n + 1, 0.0);
    if (n == 0) {
        v[0] = 1.0;
    } else {
        Eigen::MatrixXd a = rotated_loewner_matrix(omega, split.support, split.test);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        if (n >= 2 && sv(n - 1) < 1e-14 * sv(0) && policy == RankPolicy::Throw)
            throw RankDeficiencyError("rotated Loewner null space dimension is ambiguous");
        Eigen::VectorXd nv = svd.matrixV().col(n);
        for (int j = 0; j <= n; ++j) v[j] = nv(j);
    }
    if (exactly_mirrored(split.support)) symmetrize_weights(v);

    UnitaryBarycentric r(omega, split.support, std::move(v));

    InterpolationResult result{std::move(r), {}, {}};
    const auto& x = nodes.nodes();
    result.residuals.resize(x.size(), 0.0);
    double resid_max = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j % 2 == 0) continue; // support nodes interpolate exactly
        double rj;
        try {
            Complex val = eval_barycentric(result.approximant, x[j]);
            rj = std::abs(val - std::polar(1.0, omega * x[j]));
        } catch (const SpuriousPoleError&) {
            rj = std::numeric_limits<double>::infinity();
        }
        result.residuals[j] = rj;
        resid_max = std::max(resid_max, rj);
    }

    // Coarse sup-error estimate used only to scale the attainability gate.
    double sup = resid_max;
    for (int i = 0; i < 129; ++i) {
        double xx = -1.0 + 2.0 * i / 128.0;
        try {
            sup = std::max(sup, std::abs(eval_barycentric(result.approximant, xx) -
                                         std::polar(1.0, omega * xx)));
        } catch (const SpuriousPoleError&) {
        }
    }
    double gate = 1e-8 * std::max(1.0, sup);
    for (std::size_t j = 0; j < x.size(); ++j)
        if (result.residuals[j] > gate) result.unattainable.push_back(static_cast<int>(j));
    return result;
}

} // namespace uniexp
