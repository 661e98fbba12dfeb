#include "surfit/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "surfit/error.hpp"
#include "surfit/rng.hpp"

namespace surfit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEulerGamma = 0.57721566490153286;

using Names = std::span<const std::string_view>;

constexpr std::string_view kGevNames[] = {"xi", "mu", "sigma"};
constexpr std::string_view kLocScale[] = {"mu", "sigma"};
constexpr std::string_view kRate[] = {"rate"};
constexpr std::string_view kB[] = {"b"};
constexpr std::string_view kSigma[] = {"sigma"};
constexpr std::string_view kShapeScale[] = {"shape", "scale"};
constexpr std::string_view kScaleShape[] = {"scale", "shape"};
constexpr std::string_view kLogistic[] = {"mu", "s"};
constexpr std::string_view kGp[] = {"k", "sigma"};
constexpr std::string_view kLambda[] = {"lambda"};

enum class Support { real, nonnegative, positive };

Support support_of(Family f) {
    switch (f) {
        case Family::lognormal:
        case Family::gamma:
        case Family::log_logistic:
            return Support::positive;
        case Family::exponential:
        case Family::rayleigh:
        case Family::half_normal:
        case Family::weibull:
        case Family::generalized_pareto:
        case Family::poisson:
            return Support::nonnegative;
        default:
            return Support::real;
    }
}

bool params_valid(Family f, const double* p) {
    const std::size_t n = arity(f);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(p[i])) return false;
    }
    switch (f) {
        case Family::gev: return p[2] > 0.0;
        case Family::normal:
        case Family::lognormal:
        case Family::logistic:
        case Family::log_logistic:
        case Family::extreme_value:
        case Family::generalized_pareto:
            return p[1] > 0.0;
        case Family::exponential:
        case Family::rayleigh:
        case Family::half_normal:
        case Family::poisson:
            return p[0] > 0.0;
        case Family::gamma:
        case Family::weibull:
            return p[0] > 0.0 && p[1] > 0.0;
    }
    return false;
}

double logistic_log_pdf(double t) {
    const double a = std::abs(t);
    return -a - 2.0 * std::log1p(std::exp(-a));
}

double normal_log_pdf(double t) { return -0.5 * std::log(2.0 * std::numbers::pi) - 0.5 * t * t; }

// Unchecked log density; parameters must already be valid.
double log_density(Family f, const double* p, double x) {
    switch (f) {
        case Family::gev: {
            const double xi = p[0], mu = p[1], sigma = p[2];
            const double t = (x - mu) / sigma;
            if (std::abs(xi) < kGumbelThreshold) return -std::log(sigma) - t - std::exp(-t);
            const double u = xi * t;
            if (u <= -1.0) return -kInf;
            const double log_z = std::log1p(u);
            return -std::log(sigma) - (1.0 + 1.0 / xi) * log_z - std::exp(-log_z / xi);
        }
        case Family::normal:
            return normal_log_pdf((x - p[0]) / p[1]) - std::log(p[1]);
        case Family::lognormal: {
            if (x <= 0.0) return -kInf;
            const double lx = std::log(x);
            return normal_log_pdf((lx - p[0]) / p[1]) - std::log(p[1]) - lx;
        }
        case Family::exponential:
            if (x < 0.0) return -kInf;
            return std::log(p[0]) - p[0] * x;
        case Family::rayleigh:
            if (x <= 0.0) return -kInf;
            return std::log(x) - 2.0 * std::log(p[0]) - x * x / (2.0 * p[0] * p[0]);
        case Family::half_normal:
            if (x < 0.0) return -kInf;
            return 0.5 * std::log(2.0 / std::numbers::pi) - std::log(p[0]) - x * x / (2.0 * p[0] * p[0]);
        case Family::gamma: {
            const double k = p[0], theta = p[1];
            if (x < 0.0) return -kInf;
            if (x == 0.0) {
                if (k == 1.0) return -std::log(theta);
                return k < 1.0 ? kInf : -kInf;
            }
            return (k - 1.0) * std::log(x) - x / theta - std::lgamma(k) - k * std::log(theta);
        }
        case Family::weibull: {
            const double lambda = p[0], k = p[1];
            if (x < 0.0) return -kInf;
            if (x == 0.0) {
                if (k == 1.0) return -std::log(lambda);
                return k < 1.0 ? kInf : -kInf;
            }
            const double r = x / lambda;
            return std::log(k / lambda) + (k - 1.0) * std::log(r) - std::pow(r, k);
        }
        case Family::logistic:
            return logistic_log_pdf((x - p[0]) / p[1]) - std::log(p[1]);
        case Family::log_logistic: {
            if (x <= 0.0) return -kInf;
            const double lx = std::log(x);
            return logistic_log_pdf((lx - p[0]) / p[1]) - std::log(p[1]) - lx;
        }
        case Family::extreme_value: {
            const double t = (x - p[0]) / p[1];
            return t - std::exp(t) - std::log(p[1]);
        }
        case Family::generalized_pareto: {
            const double k = p[0], sigma = p[1];
            if (x < 0.0) return -kInf;
            if (std::abs(k) < 1e-12) return -std::log(sigma) - x / sigma;
            const double u = k * x / sigma;
            if (u <= -1.0) return -kInf;
            return -std::log(sigma) - (1.0 + 1.0 / k) * std::log1p(u);
        }
        case Family::poisson:
            if (x < 0.0) return -kInf;
            return x * std::log(p[0]) - p[0] - std::lgamma(x + 1.0);
    }
    return kNaN;
}

double cumulative(Family f, const double* p, double x) {
    switch (f) {
        case Family::gev:
            return gev_cdf(x, GevParams{p[0], p[1], p[2]});
        case Family::normal:
            return 0.5 * std::erfc(-(x - p[0]) / (p[1] * std::numbers::sqrt2));
        case Family::lognormal:
            if (x <= 0.0) return 0.0;
            return 0.5 * std::erfc(-(std::log(x) - p[0]) / (p[1] * std::numbers::sqrt2));
        case Family::exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-p[0] * x);
        case Family::rayleigh:
            return x <= 0.0 ? 0.0 : -std::expm1(-x * x / (2.0 * p[0] * p[0]));
        case Family::half_normal:
            return x <= 0.0 ? 0.0 : std::erf(x / (p[0] * std::numbers::sqrt2));
        case Family::gamma:
            return x <= 0.0 ? 0.0 : boost::math::gamma_p(p[0], x / p[1]);
        case Family::weibull:
            return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / p[0], p[1]));
        case Family::logistic:
            return 1.0 / (1.0 + std::exp(-(x - p[0]) / p[1]));
        case Family::log_logistic:
            if (x <= 0.0) return 0.0;
            return 1.0 / (1.0 + std::exp(-(std::log(x) - p[0]) / p[1]));
        case Family::extreme_value:
            return -std::expm1(-std::exp((x - p[0]) / p[1]));
        case Family::generalized_pareto: {
            const double k = p[0], sigma = p[1];
            if (x <= 0.0) return 0.0;
            if (std::abs(k) < 1e-12) return -std::expm1(-x / sigma);
            const double u = k * x / sigma;
            if (u <= -1.0) return 1.0;
            return -std::expm1(-std::log1p(u) / k);
        }
        case Family::poisson: {
            if (x < 0.0) return 0.0;
            const double k = std::floor(x);
            return boost::math::gamma_q(k + 1.0, p[0]);
        }
    }
    return kNaN;
}

double nll_unchecked(std::span<const double> samples, Family f, const double* p) {
    if (!params_valid(f, p)) return kInf;
    double total = 0.0;
    for (double x : samples) {
        const double lp = log_density(f, p, x);
        if (!(lp > -kInf)) return kInf;
        total -= lp;
    }
    return std::isnan(total) ? kInf : total;
}

struct Moments {
    double mean = 0.0;
    double sd = 0.0;  // population standard deviation
};

Moments moments(std::span<const double> xs) {
    Moments m;
    m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.sd = std::sqrt(ss / static_cast<double>(xs.size()));
    return m;
}

Moments log_moments(std::span<const double> xs) {
    std::vector<double> logs(xs.size());
    std::transform(xs.begin(), xs.end(), logs.begin(), [](double x) { return std::log(x); });
    return moments(logs);
}

bool inside_support(std::span<const double> samples, Family f) {
    switch (support_of(f)) {
        case Support::real: return true;
        case Support::nonnegative:
            return std::all_of(samples.begin(), samples.end(), [](double x) { return x >= 0.0; });
        case Support::positive:
            return std::all_of(samples.begin(), samples.end(), [](double x) { return x > 0.0; });
    }
    return false;
}

struct Start {
    std::vector<double> x;
    std::vector<double> steps;
};

Start initial_point(std::span<const double> samples, Family f) {
    const Moments m = moments(samples);
    const double gumbel_scale = m.sd * std::sqrt(6.0) / std::numbers::pi;
    switch (f) {
        case Family::gev: {
            const double sigma = gumbel_scale;
            return {{0.1, m.mean - kEulerGamma * sigma, sigma}, {0.1, 0.2 * sigma, 0.2 * sigma}};
        }
        case Family::gamma: {
            const double k = m.mean * m.mean / (m.sd * m.sd);
            const double theta = m.sd * m.sd / m.mean;
            return {{k, theta}, {0.2 * k, 0.2 * theta}};
        }
        case Family::weibull: {
            const Moments lm = log_moments(samples);
            const double k = std::numbers::pi / (lm.sd * std::sqrt(6.0));
            const double lambda = std::exp(lm.mean + kEulerGamma / k);
            return {{lambda, k}, {0.1 * lambda, 0.2 * k}};
        }
        case Family::logistic: {
            const double s = m.sd * std::sqrt(3.0) / std::numbers::pi;
            return {{m.mean, s}, {0.2 * s, 0.2 * s}};
        }
        case Family::log_logistic: {
            const Moments lm = log_moments(samples);
            const double s = lm.sd * std::sqrt(3.0) / std::numbers::pi;
            return {{lm.mean, s}, {0.2 * s, 0.2 * s}};
        }
        case Family::extreme_value:
            return {{m.mean + kEulerGamma * gumbel_scale, gumbel_scale},
                    {0.2 * gumbel_scale, 0.2 * gumbel_scale}};
        case Family::generalized_pareto: {
            const double r = m.mean * m.mean / (m.sd * m.sd);
            // Keep the moment estimate inside the region where every sample is supported.
            const double k = std::max(0.5 * (1.0 - r), -0.25);
            const double sigma = std::max(0.5 * m.mean * (r + 1.0), 1e-3);
            const double upper = *std::max_element(samples.begin(), samples.end());
            const double k_safe = k < 0.0 ? std::max(k, -0.9 * sigma / upper) : k;
            return {{k_safe, sigma}, {0.05, 0.2 * sigma}};
        }
        default:
            break;
    }
    throw Error(ErrorCode::invalid_argument, "no iterative initializer for this family");
}

FitResult closed_form(std::span<const double> samples, Family f) {
    const double n = static_cast<double>(samples.size());
    FitResult r;
    r.family = f;
    r.converged = true;
    switch (f) {
        case Family::normal: {
            const Moments m = moments(samples);
            r.params = {m.mean, m.sd};
            break;
        }
        case Family::lognormal: {
            const Moments lm = log_moments(samples);
            r.params = {lm.mean, lm.sd};
            break;
        }
        case Family::exponential:
            r.params = {n / std::accumulate(samples.begin(), samples.end(), 0.0)};
            break;
        case Family::rayleigh:
        case Family::half_normal: {
            double ss = 0.0;
            for (double x : samples) ss += x * x;
            r.params = {std::sqrt(ss / (f == Family::rayleigh ? 2.0 * n : n))};
            break;
        }
        case Family::poisson:
            r.params = {std::accumulate(samples.begin(), samples.end(), 0.0) / n};
            break;
        default:
            throw Error(ErrorCode::invalid_argument, "family has no closed-form MLE");
    }
    return r;
}

bool has_closed_form(Family f) {
    switch (f) {
        case Family::normal:
        case Family::lognormal:
        case Family::exponential:
        case Family::rayleigh:
        case Family::half_normal:
        case Family::poisson:
            return true;
        default:
            return false;
    }
}

}  // namespace

std::string_view family_name(Family family) noexcept {
    switch (family) {
        case Family::gev: return "gev";
        case Family::normal: return "normal";
        case Family::lognormal: return "lognormal";
        case Family::exponential: return "exponential";
        case Family::rayleigh: return "rayleigh";
        case Family::half_normal: return "half_normal";
        case Family::gamma: return "gamma";
        case Family::weibull: return "weibull";
        case Family::logistic: return "logistic";
        case Family::log_logistic: return "log_logistic";
        case Family::extreme_value: return "extreme_value";
        case Family::generalized_pareto: return "generalized_pareto";
        case Family::poisson: return "poisson";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    throw Error(ErrorCode::invalid_argument, "unknown distribution family '" + std::string(name) + "'");
}

std::size_t arity(Family family) noexcept { return parameter_names(family).size(); }

std::span<const std::string_view> parameter_names(Family family) noexcept {
    switch (family) {
        case Family::gev: return kGevNames;
        case Family::normal:
        case Family::lognormal:
        case Family::log_logistic:
        case Family::extreme_value:
            return kLocScale;
        case Family::exponential: return kRate;
        case Family::rayleigh: return kB;
        case Family::half_normal: return kSigma;
        case Family::gamma: return kShapeScale;
        case Family::weibull: return kScaleShape;
        case Family::logistic: return kLogistic;
        case Family::generalized_pareto: return kGp;
        case Family::poisson: return kLambda;
    }
    return {};
}

GevParams Distribution::gev() const {
    if (family != Family::gev || params.size() != 3) {
        throw Error(ErrorCode::invalid_argument, "distribution is not a GEV");
    }
    return {params[0], params[1], params[2]};
}

bool is_valid(const Distribution& d) noexcept {
    return d.params.size() == arity(d.family) && params_valid(d.family, d.params.data());
}

void require_valid(const Distribution& d) {
    if (!is_valid(d)) {
        throw Error(ErrorCode::domain_error,
                    "invalid parameters for family '" + std::string(family_name(d.family)) + "'");
    }
}

double log_pdf(const Distribution& d, double x) {
    require_valid(d);
    if (!std::isfinite(x)) throw Error(ErrorCode::domain_error, "density evaluated at a non-finite point");
    return log_density(d.family, d.params.data(), x);
}

double pdf(const Distribution& d, double x) {
    const double lp = log_pdf(d, x);
    return lp == -kInf ? 0.0 : std::exp(lp);
}

double cdf(const Distribution& d, double x) {
    require_valid(d);
    if (!std::isfinite(x)) throw Error(ErrorCode::domain_error, "CDF evaluated at a non-finite point");
    return cumulative(d.family, d.params.data(), x);
}

std::vector<double> sample(const Distribution& d, std::size_t n, std::mt19937_64& rng) {
    require_valid(d);
    const double* p = d.params.data();
    std::vector<double> out(n);
    auto uniform = [&] { return uniform_open01(rng); };
    auto standard_normal = [&] {
        // Box-Muller, one value per pair of uniforms.
        return std::sqrt(-2.0 * std::log(uniform())) * std::cos(2.0 * std::numbers::pi * uniform());
    };
    auto logistic = [&] {
        const double u = uniform();
        return std::log(u / (1.0 - u));
    };
    switch (d.family) {
        case Family::gev: {
            const GevParams g{p[0], p[1], p[2]};
            for (double& x : out) x = gev_quantile(uniform(), g);
            break;
        }
        case Family::normal:
            for (double& x : out) x = p[0] + p[1] * standard_normal();
            break;
        case Family::lognormal:
            for (double& x : out) x = std::exp(p[0] + p[1] * standard_normal());
            break;
        case Family::exponential:
            for (double& x : out) x = -std::log(uniform()) / p[0];
            break;
        case Family::rayleigh:
            for (double& x : out) x = p[0] * std::sqrt(-2.0 * std::log(uniform()));
            break;
        case Family::half_normal:
            for (double& x : out) x = p[0] * std::abs(standard_normal());
            break;
        case Family::gamma: {
            std::gamma_distribution<double> dist(p[0], p[1]);
            for (double& x : out) x = dist(rng);
            break;
        }
        case Family::weibull:
            for (double& x : out) x = p[0] * std::pow(-std::log(uniform()), 1.0 / p[1]);
            break;
        case Family::logistic:
            for (double& x : out) x = p[0] + p[1] * logistic();
            break;
        case Family::log_logistic:
            for (double& x : out) x = std::exp(p[0] + p[1] * logistic());
            break;
        case Family::extreme_value:
            for (double& x : out) x = p[0] + p[1] * std::log(-std::log(uniform()));
            break;
        case Family::generalized_pareto: {
            const double k = p[0], sigma = p[1];
            for (double& x : out) {
                const double w = -std::log(uniform());
                x = std::abs(k) < 1e-12 ? sigma * w : sigma * std::expm1(k * w) / k;
            }
            break;
        }
        case Family::poisson: {
            std::poisson_distribution<long long> dist(p[0]);
            for (double& x : out) x = static_cast<double>(dist(rng));
            break;
        }
    }
    return out;
}

double negative_log_likelihood(std::span<const double> samples, const Distribution& d) {
    require_valid(d);
    return nll_unchecked(samples, d.family, d.params.data());
}

double negative_log_likelihood(std::span<const double> samples, Family family, std::span<const double> params) {
    return negative_log_likelihood(samples, Distribution{family, {params.begin(), params.end()}});
}

FitResult fit_mle(std::span<const double> samples, Family family, const FitOptions& options) {
    if (samples.size() < 3) {
        throw Error(ErrorCode::insufficient_data, "maximum-likelihood fit needs at least 3 samples");
    }
    for (double x : samples) {
        if (!std::isfinite(x)) throw Error(ErrorCode::domain_error, "non-finite sample");
    }
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    if (*lo == *hi) {
        throw Error(ErrorCode::degenerate_fit, "all samples are equal; the scale estimate collapses to zero");
    }

    FitResult result;
    result.family = family;
    if (!inside_support(samples, family)) {
        result.params.assign(arity(family), kNaN);
        result.nll = kInf;
        return result;
    }

    if (has_closed_form(family)) {
        result = closed_form(samples, family);
    } else {
        Start start = initial_point(samples, family);
        if (!options.initial.empty()) {
            if (options.initial.size() != arity(family)) {
                throw Error(ErrorCode::invalid_argument, "initial point has the wrong arity");
            }
            start.x = options.initial;
        }
        const Objective objective = [&](std::span<const double> p) {
            return nll_unchecked(samples, family, p.data());
        };
        if (family == Family::gev && !std::isfinite(objective(start.x))) {
            // Move the shape toward the Gumbel limit, whose support is the real line.
            start.x[0] = 0.0;
        }
        const SimplexResult s = nelder_mead(objective, start.x, start.steps, options.simplex);
        result.params = s.x;
        result.iterations = s.iterations;
        result.converged = s.converged && std::isfinite(s.value);
    }
    result.nll = nll_unchecked(samples, family, result.params.data());
    if (!std::isfinite(result.nll)) result.converged = false;
    return result;
}

}  // namespace surfit
