#include "uniexp/lawson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include <Eigen/Dense>

#include "uniexp/interpolation.hpp"
#include "detail.hpp"

namespace uniexp {

namespace {

void symmetrize(std::vector<double>& v) {
    const std::size_t m = v.size();
    double norm_sym = 0.0, norm_asym = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.5 * (v[j] + v[m - 1 - j]);
        double a = 0.5 * (v[j] - v[m - 1 - j]);
        norm_sym += s * s;
        norm_asym += a * a;
    }
    for (std::size_t j = 0; j < (m + 1) / 2; ++j) {
        if (norm_sym >= norm_asym) {
            double s = 0.5 * (v[j] + v[m - 1 - j]);
            v[j] = v[m - 1 - j] = s;
        } else {
            double a = 0.5 * (v[j] - v[m - 1 - j]);
            v[j] = a;
            v[m - 1 - j] = -a;
        }
    }
}

} // namespace

LawsonResult aaa_lawson_cheb(int n, double omega, const LawsonOptions& opts) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    if (!(omega > 0.0) || omega >= (n + 1) * detail::kPi)
        throw InfeasibleFrequencyError("omega outside (0,(n+1)*pi)");
    if (opts.grid_size <= 2 * n + 2) throw std::invalid_argument("grid_size must exceed 2n+2");

    const std::vector<double> support = chebyshev_nodes(n + 1);
    std::vector<double> test;
    test.reserve(opts.grid_size);
    for (double t : chebyshev_nodes(opts.grid_size)) {
        bool clash = false;
        for (double s : support)
            if (std::abs(t - s) < 1e-10) clash = true;
        if (!clash) test.push_back(t);
    }
    const int m = static_cast<int>(test.size());

    Eigen::MatrixXd a = rotated_loewner_matrix(omega, support, test);
    std::vector<double> gamma(m, 1.0 / m);

    std::unique_ptr<UnitaryBarycentric> best;
    double best_sup = std::numeric_limits<double>::infinity();
    int stalled = 0;
    int iter = 0;
    for (iter = 1; iter <= opts.iterations; ++iter) {
        Eigen::MatrixXd weighted = a;
        for (int k = 0; k < m; ++k) weighted.row(k) *= std::sqrt(gamma[k]);
        std::vector<double> v(n + 1, 1.0);
        if (n > 0) {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(weighted, Eigen::ComputeFullV);
            Eigen::VectorXd nv = svd.matrixV().col(n);
            for (int j = 0; j <= n; ++j) v[j] = nv(j);
            symmetrize(v);
        }
        UnitaryBarycentric r(omega, support, std::move(v));

        std::vector<double> res(m);
        double sup = 0.0;
        for (int k = 0; k < m; ++k) {
            res[k] = std::abs(eval_barycentric(r, test[k]) - std::polar(1.0, omega * test[k]));
            sup = std::max(sup, res[k]);
        }
        double prev = best_sup;
        if (sup < best_sup) {
            best_sup = sup;
            best = std::make_unique<UnitaryBarycentric>(r);
        }
        if (sup == 0.0) break; // exact fit
        stalled = (prev - best_sup) < opts.stagnation_tol * prev ? stalled + 1 : 0;
        if (stalled >= 3) break;

        double total = 0.0;
        for (int k = 0; k < m; ++k) {
            gamma[k] = std::max(gamma[k] * res[k], 1e-30);
            total += gamma[k];
        }
        for (double& g : gamma) g /= total;
    }
    return {*best, std::min(iter, opts.iterations), best_sup};
}

} // namespace uniexp
