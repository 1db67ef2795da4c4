#include "uniexp/brasil.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>

#include "uniexp/analysis.hpp"
#include "uniexp/pade.hpp"
#include "detail.hpp"

namespace uniexp {

namespace {

// Phase errors below this estimate are not measurable in double precision;
// extrema are then evaluated through the leading-order term -C prod(x-x_j).
constexpr double kAsymptoticGate = 1e-11;
// Direct sup measurements below this are dominated by rounding noise.
constexpr double kMeasurableError = 1e-13;

using PhaseFn = std::function<double(double)>;

std::vector<double> symmetrized(std::span<const double> nodes) {
    const std::size_t m = nodes.size();
    std::vector<double> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = 0.5 * (nodes[j] - nodes[m - 1 - j]);
    return out;
}

std::vector<double> initial_nodes(int n, double omega, const SolverOptions& opts) {
    const int m = 2 * n + 1;
    Init mode = opts.init;
    if (mode == Init::Auto) mode = omega <= n * detail::kPi ? Init::Chebyshev : Init::UniformLimit;
    switch (mode) {
    case Init::Chebyshev:
        return chebyshev_nodes(m);
    case Init::UniformLimit: {
        std::vector<double> nodes(m);
        for (int k = 1; k <= m; ++k) nodes[k - 1] = -1.0 + k / (n + 1.0);
        return nodes;
    }
    case Init::Warm:
        if (static_cast<int>(opts.warm_nodes.size()) != m)
            throw std::invalid_argument("warm start needs 2n+1 nodes");
        return opts.warm_nodes;
    default:
        throw std::invalid_argument("unknown initialization strategy");
    }
}

// One extremum of |delta| per node interval; endpoints forced to +-1.
// Assumes the node set is exactly mirrored and delta odd: the right half is
// searched and mirrored, so reported points and values are symmetric exactly.
std::vector<Extremum> find_extrema(const PhaseFn& delta, std::span<const double> nodes,
                                   double tol) {
    const int m = static_cast<int>(nodes.size()); // 2n+1
    const int n = (m - 1) / 2;
    std::vector<Extremum> ext(m + 1);
    auto mag = [&](double x) { return std::abs(delta(x)); };
    for (int i = n + 1; i <= m; ++i) {
        double lo = nodes[i - 1];
        double hi = i < m ? nodes[i] : 1.0;
        Extremum e;
        if (i == m) {
            e = {1.0, delta(1.0)};
        } else {
            auto [x, f] = detail::scan_golden_max(mag, lo, hi, tol);
            e = {x, delta(x)};
        }
        ext[i] = e;
        ext[m - i] = {-e.x, -e.value};
    }
    return ext;
}

bool alternating_signs(const std::vector<Extremum>& ext) {
    for (std::size_t j = 0; j < ext.size(); ++j) {
        if (ext[j].value == 0.0) return false;
        if (j > 0 && (ext[j].value > 0.0) == (ext[j - 1].value > 0.0)) return false;
    }
    return true;
}

double relative_deviation(const std::vector<Extremum>& ext) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& e : ext) {
        double a = std::abs(e.value);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    return hi > 0.0 ? (hi - lo) / hi : 0.0;
}

std::vector<double> lerp_nodes(std::span<const double> from, std::span<const double> to,
                               double t) {
    std::vector<double> out(from.size());
    for (std::size_t j = 0; j < from.size(); ++j) out[j] = from[j] + t * (to[j] - from[j]);
    return out;
}

struct Iterate {
    UnitaryBarycentric approximant;
    std::vector<double> nodes;
    std::vector<Extremum> extrema;
    double deviation = std::numeric_limits<double>::infinity();
    int iteration = 0;
};

} // namespace

std::vector<Extremum> local_extrema(const UnitaryBarycentric& r, std::span<const double> nodes,
                                    double search_tol) {
    std::vector<double> sym(nodes.begin(), nodes.end());
    bool mirrored = true;
    for (std::size_t j = 0; j < sym.size(); ++j)
        if (sym[j] != -sym[sym.size() - 1 - j]) mirrored = false;
    PhaseFn delta = [&r](double x) { return phase_error(r, x); };
    std::vector<Extremum> ext;
    if (mirrored) {
        ext = find_extrema(delta, sym, search_tol);
    } else {
        const int m = static_cast<int>(sym.size());
        ext.resize(m + 1);
        auto mag = [&](double x) { return std::abs(delta(x)); };
        ext[0] = {-1.0, delta(-1.0)};
        ext[m] = {1.0, delta(1.0)};
        for (int i = 1; i < m; ++i) {
            auto [x, f] = detail::scan_golden_max(mag, sym[i - 1], sym[i], search_tol);
            ext[i] = {x, delta(x)};
        }
    }
    if (!alternating_signs(ext))
        throw SignChangeError("phase error does not change sign across the claimed nodes");
    return ext;
}

RescaleResult rescale_intervals(std::span<const double> nodes,
                                std::span<const double> extremum_magnitudes, double gamma) {
    const std::size_t m = nodes.size();
    if (extremum_magnitudes.size() != m + 1)
        throw std::invalid_argument("need one extremum magnitude per interval");
    RescaleResult out;
    out.nodes.assign(nodes.begin(), nodes.end());
    for (double e : extremum_magnitudes) {
        if (e < 0.0) throw std::invalid_argument("extremum magnitudes must be nonnegative");
        if (e == 0.0) {
            out.exact_fit = true;
            return out;
        }
    }
    double mean_log = 0.0;
    for (double e : extremum_magnitudes) mean_log += std::log(e);
    mean_log /= static_cast<double>(m + 1);

    // per-interval factor clipped to [1/2, 2]: near omega = (n+1)pi the
    // extrema ratios grow huge and unclipped steps overshoot into wraps
    const double clip = std::log(2.0);
    std::vector<double> len(m + 1);
    double total = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
        double lo = k == 0 ? -1.0 : nodes[k - 1];
        double hi = k == m ? 1.0 : nodes[k];
        double step = std::clamp(gamma * (mean_log - std::log(extremum_magnitudes[k])), -clip, clip);
        len[k] = (hi - lo) * std::exp(step);
        total += len[k];
    }
    double acc = -1.0;
    for (std::size_t k = 0; k < m; ++k) {
        acc += 2.0 * len[k] / total;
        out.nodes[k] = acc;
    }
    return out;
}

BestApproximation best_approx(int n, double omega, const SolverOptions& opts) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    if (omega >= (n + 1) * detail::kPi)
        throw InfeasibleFrequencyError("omega >= (n+1)*pi: every unitary function attains error 2");

    const double estimate = best_error_estimate(n, omega);
    const bool asymptotic = estimate < kAsymptoticGate;
    const double leading = pade_error_bound(n, omega); // C in delta ~ -C prod(x-x_j)

    std::vector<double> nodes = symmetrized(initial_nodes(n, omega, opts));
    std::vector<double> last_good;
    std::vector<double> proposal;
    std::unique_ptr<Iterate> best;
    bool have_step = false;
    bool exact_fit = false;
    bool tried_alt_init = false;

    double damp = std::clamp(opts.damping, 1e-6, 1.0);
    int iterations = 0;

    while (iterations < opts.max_iterations) {
        ++iterations;
        bool ok = false;
        std::vector<Extremum> ext;
        std::unique_ptr<UnitaryBarycentric> approx;
        try {
            auto interp =
                interpolate_unitary(omega, NodeSet(nodes), RankPolicy::Accept);
            approx = std::make_unique<UnitaryBarycentric>(interp.approximant);
            PhaseFn delta;
            if (asymptotic) {
                const std::vector<double> xs = nodes;
                const double c = leading;
                delta = [xs, c](double x) {
                    double p = 1.0;
                    for (double xj : xs) p *= (x - xj);
                    return -c * p;
                };
            } else {
                const UnitaryBarycentric& r = *approx;
                delta = [r](double x) { return phase_error(r, x); };
            }
            ext = find_extrema(delta, nodes, opts.extremum_search_tol);
            ok = alternating_signs(ext);
        } catch (const CoincidentNodeError&) {
        } catch (const RankDeficiencyError&) {
        } catch (const SpuriousPoleError&) {
        } catch (const SignChangeError&) {
        }

        if (const char* dbg = std::getenv("UNIEXP_DEBUG"); dbg && *dbg == '1') {
            double dev = ok ? relative_deviation(ext) : -1.0;
            std::fprintf(stderr, "it=%3d ok=%d damp=%.4f dev=%.3e\n", iterations, ok, damp, dev);
        }
        if (!ok) {
            if (!have_step) {
                // initial guess failed outright: try the other initialization once
                if (!tried_alt_init && opts.init == Init::Auto) {
                    tried_alt_init = true;
                    SolverOptions alt = opts;
                    alt.init = omega <= n * detail::kPi ? Init::UniformLimit : Init::Chebyshev;
                    nodes = symmetrized(initial_nodes(n, omega, alt));
                    continue;
                }
                break;
            }
            damp *= 0.5;
            if (damp < 1e-3) damp = 0.25; // re-approach instead of giving up
            nodes = symmetrized(lerp_nodes(last_good, proposal, damp));
            continue;
        }

        double deviation = relative_deviation(ext);
        last_good = nodes;
        have_step = true;
        // only iterates with the correct orientation (Prop-style positive
        // first extremum) qualify as solutions
        if (ext.front().value > 0.0 && (!best || deviation < best->deviation))
            best = std::make_unique<Iterate>(Iterate{*approx, nodes, ext, deviation, iterations});
        if (best && best->deviation <= opts.eq_tolerance) break;

        std::vector<double> mags(ext.size());
        for (std::size_t j = 0; j < ext.size(); ++j) mags[j] = std::abs(ext[j].value);
        auto resc = rescale_intervals(nodes, mags, opts.rescale_exponent);
        if (resc.exact_fit) {
            exact_fit = true;
            break;
        }
        proposal = resc.nodes;
        damp = std::min(opts.damping, 2.0 * damp);
        nodes = symmetrized(lerp_nodes(last_good, proposal, damp));
    }

    if (!best)
        throw std::runtime_error("node iteration produced no valid iterate; frequency too "
                                 "close to the feasibility boundary");

    BestApproximation result{best->approximant, best->nodes, {}, {}, 0.0, estimate,
                             best->deviation, iterations, false, false,
                             asymptotic ? PhaseMode::Asymptotic : PhaseMode::Direct};
    result.converged = exact_fit || best->deviation <= opts.eq_tolerance;
    result.equioscillation_points.reserve(best->extrema.size());
    result.extrema_values.reserve(best->extrema.size());
    for (const auto& e : best->extrema) {
        result.equioscillation_points.push_back(e.x);
        result.extrema_values.push_back(e.value);
    }

    double measured = sup_error(make_evaluator(best->approximant), omega, 4096).value;
    if (!asymptotic || measured >= kMeasurableError) {
        result.max_error = measured;
    } else {
        double kmax = 0.0;
        for (const auto& e : best->extrema) kmax = std::max(kmax, std::abs(e.value));
        result.max_error = 2.0 * std::sin(0.5 * kmax);
    }

    for (const Complex& s : poles(best->approximant))
        if (std::abs(s) > 1e6) result.near_degenerate = true;
    return result;
}

std::vector<BestApproximation> sweep(int n, const std::vector<double>& omegas,
                                     const SolverOptions& opts) {
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (!(omegas[i] > 0.0) || omegas[i] >= (n + 1) * detail::kPi)
            throw InfeasibleFrequencyError("sweep frequency outside (0,(n+1)*pi)");
        if (i > 0 && !(omegas[i - 1] < omegas[i]))
            throw std::invalid_argument("sweep frequencies must be ascending");
    }
    std::vector<BestApproximation> results;
    results.reserve(omegas.size());
    SolverOptions cur = opts;
    for (double w : omegas) {
        try {
            results.push_back(best_approx(n, w, cur));
            cur.init = Init::Warm;
            cur.warm_nodes = results.back().interpolation_nodes;
        } catch (const std::exception&) {
            BestApproximation failed{UnitaryBarycentric(w, {0.0}, {1.0}), {}, {}, {},
                                     std::numeric_limits<double>::quiet_NaN(),
                                     best_error_estimate(n, w),
                                     std::numeric_limits<double>::quiet_NaN(),
                                     0, false, false, PhaseMode::Direct};
            results.push_back(std::move(failed));
            cur = opts; // cold-start the next frequency
        }
    }
    return results;
}

} // namespace uniexp
