#pragma once

namespace surfit {

/// Generalized extreme value parameters on the quality-factor axis.
///
/// The density is supported where z = 1 + xi * (x - mu) / sigma > 0. For
/// |xi| below `kGumbelThreshold` the Gumbel limit is used instead.
struct GevParams {
    double xi = 0.0;     // shape
    double mu = 0.0;     // location, QF units
    double sigma = 1.0;  // scale, QF units

    bool operator==(const GevParams&) const = default;
};

inline constexpr double kGumbelThreshold = 1e-6;

bool is_valid(const GevParams& p) noexcept;

/// Throws Error(domain_error) unless `p` is valid.
void require_valid(const GevParams& p);

double gev_pdf(double x, const GevParams& p);
double gev_log_pdf(double x, const GevParams& p);
double gev_cdf(double x, const GevParams& p);

/// Inverse CDF for u in (0, 1).
double gev_quantile(double u, const GevParams& p);

double gev_median(const GevParams& p);

struct GevSupport {
    double lower;  // -inf when unbounded
    double upper;  // +inf when unbounded
};

GevSupport gev_support(const GevParams& p);

}  // namespace surfit
