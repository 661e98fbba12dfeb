#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "surfit/distributions.hpp"

namespace surfit {

/// Anderson-Darling A^2 from fitted-CDF values at the samples (any order).
/// Values are clamped to [1e-12, 1 - 1e-12] before taking logs.
double ad_statistic(std::span<const double> cdf_values);

/// A^2 of `samples` under distribution `d`.
double ad_statistic(std::span<const double> samples, const Distribution& d);

struct AdResult {
    double a2 = 0.0;
    double p_value = 1.0;
    bool reject = false;
    int bootstrap_count = 0;  // resamples whose refit succeeded
    int failed_refits = 0;
    bool unreliable = false;  // more than 10% of the refits failed
};

struct BootstrapOptions {
    int resamples = 999;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    /// Refits start from the fitted parameters, so fewer restarts suffice.
    FitOptions refit{SimplexOptions{1e-9, 10000, 2}, {}};
};

/// Parametric-bootstrap p-value of the A-D test with estimated parameters.
/// Each resample is drawn from its own (seed, index) stream.
AdResult ad_pvalue_bootstrap(std::span<const double> samples, const FitResult& fitted,
                             const BootstrapOptions& options = {});

struct FamilyRanking {
    Family family = Family::gev;
    double mean_nll = 0.0;  // +inf when any image failed to fit
    int fit_failures = 0;
    int ad_rejections = 0;  // failed fits count as rejections
    int nll_rank = 0;
    int ad_rank = 0;
};

struct ModelRanking {
    std::vector<FamilyRanking> families;  // input order, excluded families removed
    std::vector<Family> excluded;         // unfittable on every image
    std::vector<std::string> diagnostics;
    int image_count = 0;
};

struct RankOptions {
    FitOptions fit{};
    BootstrapOptions bootstrap{};
};

/// Dense ranks (1 = smallest); equal values share a rank.
std::vector<int> dense_rank(std::span<const double> values);

ModelRanking rank_models(const std::vector<std::vector<double>>& images, std::span<const Family> families,
                         const RankOptions& options = {});

}  // namespace surfit
