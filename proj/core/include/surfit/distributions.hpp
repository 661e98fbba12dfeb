#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "surfit/gev.hpp"
#include "surfit/nelder_mead.hpp"

namespace surfit {

/// Candidate families for JND samples on the QF axis.
enum class Family {
    gev,                 // (xi, mu, sigma)
    normal,              // (mu, sigma)
    lognormal,           // (mu, sigma) of log x
    exponential,         // (rate)
    rayleigh,            // (b)
    half_normal,         // (sigma), location fixed at 0
    gamma,               // (shape, scale)
    weibull,             // (scale, shape)
    logistic,            // (mu, s)
    log_logistic,        // (mu, sigma) of log x
    extreme_value,       // (mu, sigma), Gumbel for minima
    generalized_pareto,  // (k, sigma), threshold fixed at 0
    poisson,             // (lambda)
};

inline constexpr std::array<Family, 13> kAllFamilies = {
    Family::half_normal, Family::rayleigh,      Family::exponential, Family::gev,
    Family::generalized_pareto, Family::extreme_value, Family::gamma, Family::logistic,
    Family::log_logistic, Family::lognormal,   Family::normal,      Family::poisson,
    Family::weibull,
};

std::string_view family_name(Family family) noexcept;
Family parse_family(std::string_view name);
std::size_t arity(Family family) noexcept;
std::span<const std::string_view> parameter_names(Family family) noexcept;

/// A family together with a parameter vector of the family's arity.
struct Distribution {
    Family family = Family::gev;
    std::vector<double> params;

    static Distribution from_gev(const GevParams& p) { return {Family::gev, {p.xi, p.mu, p.sigma}}; }
    GevParams gev() const;
};

bool is_valid(const Distribution& d) noexcept;
void require_valid(const Distribution& d);

double log_pdf(const Distribution& d, double x);
double pdf(const Distribution& d, double x);
double cdf(const Distribution& d, double x);

std::vector<double> sample(const Distribution& d, std::size_t n, std::mt19937_64& rng);

/// -sum log pdf(x_i); +inf when a sample lies outside the support.
double negative_log_likelihood(std::span<const double> samples, const Distribution& d);
double negative_log_likelihood(std::span<const double> samples, Family family,
                               std::span<const double> params);

struct FitOptions {
    SimplexOptions simplex{};
    /// Starting point; empty means the family's moment-based initializer.
    std::vector<double> initial{};
};

struct FitResult {
    Family family = Family::gev;
    std::vector<double> params;
    double nll = 0.0;
    bool converged = false;
    int iterations = 0;

    Distribution distribution() const { return {family, params}; }
};

/// Maximum-likelihood fit. Six families have closed forms; the rest use a
/// restarted Nelder-Mead search on the negative log-likelihood.
///
/// Throws insufficient_data for fewer than 3 samples, domain_error for
/// non-finite samples and degenerate_fit for zero-spread samples. Samples
/// outside the family's support yield converged == false and nll == +inf.
FitResult fit_mle(std::span<const double> samples, Family family, const FitOptions& options = {});

}  // namespace surfit
