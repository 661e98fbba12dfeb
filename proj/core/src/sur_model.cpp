#include "surfit/sur_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "surfit/error.hpp"

namespace surfit {

namespace {

constexpr double kFlatTolerance = 1e-12;

void check_percent(double p) {
    if (!(p > 0.0 && p < 100.0)) {
        throw Error(ErrorCode::range_error, "percentile must lie strictly between 0 and 100");
    }
}

// QF at which the SUR curve, read as a CCDF on the level axis, crosses `target`.
// Linear interpolation between levels; returns a QF value.
double crossing_qf(std::span<const double> sur, double target) {
    double prev_level = 0.0;
    double prev = 1.0;
    for (std::size_t i = 0; i < sur.size(); ++i) {
        const double level = static_cast<double>(i + 1);
        if (sur[i] <= target) {
            const double span = prev - sur[i];
            const double t = span > 0.0 ? (prev - target) / span : 0.0;
            return qf_from_level(prev_level + t * (level - prev_level));
        }
        prev_level = level;
        prev = sur[i];
    }
    return qf_from_level(static_cast<double>(sur.size()));
}

}  // namespace

double SurCurve::at(int level) const {
    if (level < 1) return 1.0;
    if (level > n_levels()) throw Error(ErrorCode::range_error, "level " + std::to_string(level) + " beyond curve");
    return values[static_cast<std::size_t>(level - 1)];
}

SurCurve sur_from_params(const GevParams& p, int n_levels) {
    require_valid(p);
    if (n_levels < 1) throw Error(ErrorCode::invalid_argument, "curve needs at least one level");
    SurCurve c;
    c.source = SurSource::analytic;
    c.params = p;
    c.values.resize(static_cast<std::size_t>(n_levels));
    for (int y = 1; y <= n_levels; ++y) {
        c.values[static_cast<std::size_t>(y - 1)] = gev_cdf(static_cast<double>(n_levels + 1 - y), p);
    }
    return c;
}

SurCurve empirical_sur(std::span<const double> qf_samples, int n_levels) {
    if (qf_samples.empty()) throw Error(ErrorCode::insufficient_data, "no JND samples");
    if (n_levels < 1) throw Error(ErrorCode::invalid_argument, "curve needs at least one level");
    SurCurve c;
    c.source = SurSource::empirical;
    c.values.resize(static_cast<std::size_t>(n_levels));
    const double n = static_cast<double>(qf_samples.size());
    for (int y = 1; y <= n_levels; ++y) {
        // Satisfied at level y: the observer's JND level is beyond y.
        const auto count = std::count_if(qf_samples.begin(), qf_samples.end(), [&](double qf) {
            return (n_levels + 1 - qf) > y;
        });
        c.values[static_cast<std::size_t>(y - 1)] = static_cast<double>(count) / n;
    }
    return c;
}

JndPmf jnd_pmf(const SurCurve& c) {
    JndPmf pmf;
    pmf.mass.resize(c.values.size());
    double prev = 1.0;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        const double v = c.values[i];
        if (v > prev) {
            throw Error(ErrorCode::monotonicity_violation,
                        "SUR increases at level " + std::to_string(i + 1));
        }
        pmf.mass[i] = prev - v;
        prev = v;
    }
    pmf.tail = prev;
    return pmf;
}

int p_jnd(const SurCurve& c, double p) {
    check_percent(p);
    const double target = p / 100.0;
    for (int n = 1; n <= c.n_levels(); ++n) {
        if (1.0 - c.values[static_cast<std::size_t>(n - 1)] >= target) return n;
    }
    throw Error(ErrorCode::unreachable_percentile, "JND CDF never reaches the requested percentile");
}

int p_sur(const SurCurve& c, double p) {
    check_percent(p);
    const double target = p / 100.0;
    for (int n = c.n_levels(); n >= 1; --n) {
        if (c.values[static_cast<std::size_t>(n - 1)] >= target) return n;
    }
    throw Error(ErrorCode::unreachable_percentile, "SUR(1) is below the requested percentile");
}

double sur_lsq_objective(std::span<const double> sur_values, const GevParams& p) {
    const int n = static_cast<int>(sur_values.size());
    double s = 0.0;
    for (int y = 1; y <= n; ++y) {
        const double d = gev_cdf(static_cast<double>(n + 1 - y), p) - sur_values[static_cast<std::size_t>(y - 1)];
        s += d * d;
    }
    return s;
}

SurFit fit_sur_lsq(std::span<const double> sur_values, const SimplexOptions& options) {
    if (sur_values.size() < 3) throw Error(ErrorCode::insufficient_data, "SUR fit needs at least 3 levels");
    for (double v : sur_values) {
        if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::invalid_argument, "SUR values must lie in [0, 1]");
    }
    const auto [lo, hi] = std::minmax_element(sur_values.begin(), sur_values.end());
    if (*hi - *lo < kFlatTolerance) throw Error(ErrorCode::degenerate_fit, "flat SUR curve");

    // Treat the curve as an empirical CCDF on the level axis and seed a Gumbel
    // fit from its quartiles. SUR(y) equals the QF-axis CDF at 101 - y.
    const double q25 = crossing_qf(sur_values, 0.25);
    const double q50 = crossing_qf(sur_values, 0.5);
    const double q75 = crossing_qf(sur_values, 0.75);
    double sigma0 = (q75 - q25) / 1.5725;
    if (!(sigma0 > 0.5)) sigma0 = 0.5;
    const double mu0 = q50 - 0.3665 * sigma0;

    const Objective objective = [&](std::span<const double> x) {
        const GevParams p{x[0], x[1], x[2]};
        if (!is_valid(p)) return std::numeric_limits<double>::infinity();
        return sur_lsq_objective(sur_values, p);
    };
    const double steps[] = {0.1, 0.2 * sigma0, 0.2 * sigma0};
    const SimplexResult r = nelder_mead(objective, {0.1, mu0, sigma0}, steps, options);

    SurFit fit;
    fit.params = {r.x[0], r.x[1], r.x[2]};
    fit.residual = r.value;
    fit.iterations = r.iterations;
    fit.converged = r.converged;
    return fit;
}

void write_sur_csv(std::ostream& out, int image_id, const SurCurve& c, bool header) {
    if (header) out << "image_id,level,sur\n";
    char buf[64];
    for (int y = 1; y <= c.n_levels(); ++y) {
        std::snprintf(buf, sizeof buf, "%.17g", c.values[static_cast<std::size_t>(y - 1)]);
        out << image_id << ',' << y << ',' << buf << '\n';
    }
}

}  // namespace surfit
