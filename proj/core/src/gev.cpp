#include "surfit/gev.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "surfit/error.hpp"

namespace surfit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_gumbel(const GevParams& p) { return std::abs(p.xi) < kGumbelThreshold; }

void require_finite(double x) {
    if (!std::isfinite(x)) {
        throw Error(ErrorCode::domain_error, "GEV evaluated at a non-finite point");
    }
}

}  // namespace

bool is_valid(const GevParams& p) noexcept {
    return std::isfinite(p.xi) && std::isfinite(p.mu) && std::isfinite(p.sigma) && p.sigma > 0.0;
}

void require_valid(const GevParams& p) {
    if (!is_valid(p)) {
        throw Error(ErrorCode::domain_error,
                    "invalid GEV parameters (xi=" + std::to_string(p.xi) + ", mu=" +
                        std::to_string(p.mu) + ", sigma=" + std::to_string(p.sigma) + ")");
    }
}

double gev_log_pdf(double x, const GevParams& p) {
    require_valid(p);
    require_finite(x);
    const double t = (x - p.mu) / p.sigma;
    if (is_gumbel(p)) {
        return -std::log(p.sigma) - t - std::exp(-t);
    }
    const double z = 1.0 + p.xi * t;
    if (z <= 0.0) return -kInf;
    const double log_z = std::log1p(p.xi * t);
    return -std::log(p.sigma) - (1.0 + 1.0 / p.xi) * log_z - std::exp(-log_z / p.xi);
}

double gev_pdf(double x, const GevParams& p) {
    const double lp = gev_log_pdf(x, p);
    return lp == -kInf ? 0.0 : std::exp(lp);
}

double gev_cdf(double x, const GevParams& p) {
    require_valid(p);
    require_finite(x);
    const double t = (x - p.mu) / p.sigma;
    if (is_gumbel(p)) {
        return std::exp(-std::exp(-t));
    }
    const double z = 1.0 + p.xi * t;
    if (z <= 0.0) {
        // Below the lower endpoint for xi > 0, above the upper endpoint for xi < 0.
        return p.xi > 0.0 ? 0.0 : 1.0;
    }
    return std::exp(-std::exp(-std::log1p(p.xi * t) / p.xi));
}

double gev_quantile(double u, const GevParams& p) {
    require_valid(p);
    if (!(u > 0.0 && u < 1.0)) {
        throw Error(ErrorCode::domain_error, "GEV quantile requires u in (0, 1)");
    }
    const double w = -std::log(u);
    if (is_gumbel(p)) {
        return p.mu - p.sigma * std::log(w);
    }
    return p.mu + p.sigma * std::expm1(-p.xi * std::log(w)) / p.xi;
}

double gev_median(const GevParams& p) { return gev_quantile(0.5, p); }

GevSupport gev_support(const GevParams& p) {
    require_valid(p);
    if (is_gumbel(p)) return {-kInf, kInf};
    const double endpoint = p.mu - p.sigma / p.xi;
    if (p.xi > 0.0) return {endpoint, kInf};
    return {-kInf, endpoint};
}

}  // namespace surfit
