#include "surfit/goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "surfit/error.hpp"
#include "surfit/rng.hpp"

namespace surfit {

namespace {

constexpr double kClamp = 1e-12;

}  // namespace

double ad_statistic(std::span<const double> cdf_values) {
    if (cdf_values.empty()) throw Error(ErrorCode::insufficient_data, "A-D statistic needs at least one sample");
    std::vector<double> u(cdf_values.begin(), cdf_values.end());
    for (double& v : u) {
        if (std::isnan(v)) throw Error(ErrorCode::domain_error, "CDF value is NaN");
        v = std::clamp(v, kClamp, 1.0 - kClamp);
    }
    std::sort(u.begin(), u.end());
    const std::size_t n = u.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += static_cast<double>(2 * i + 1) * (std::log(u[i]) + std::log1p(-u[n - 1 - i]));
    }
    return -static_cast<double>(n) - s / static_cast<double>(n);
}

double ad_statistic(std::span<const double> samples, const Distribution& d) {
    std::vector<double> u(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) u[i] = cdf(d, samples[i]);
    return ad_statistic(u);
}

AdResult ad_pvalue_bootstrap(std::span<const double> samples, const FitResult& fitted,
                             const BootstrapOptions& options) {
    if (!fitted.converged) throw Error(ErrorCode::invalid_argument, "bootstrap requires a converged fit");
    if (options.resamples < 99) throw Error(ErrorCode::invalid_argument, "bootstrap needs at least 99 resamples");
    const Distribution model = fitted.distribution();

    AdResult r;
    r.a2 = ad_statistic(samples, model);

    FitOptions refit = options.refit;
    refit.initial = fitted.params;
    int exceed = 0;
    for (int b = 0; b < options.resamples; ++b) {
        std::mt19937_64 rng = make_stream(options.seed, static_cast<std::uint64_t>(b));
        const std::vector<double> draw = sample(model, samples.size(), rng);
        double a2 = 0.0;
        try {
            const FitResult f = fit_mle(draw, fitted.family, refit);
            if (!f.converged) {
                ++r.failed_refits;
                continue;
            }
            a2 = ad_statistic(draw, f.distribution());
        } catch (const Error&) {
            // Degenerate resamples (e.g. all-equal Poisson counts) cannot be refit.
            ++r.failed_refits;
            continue;
        }
        ++r.bootstrap_count;
        if (a2 >= r.a2) ++exceed;
    }
    r.unreliable = r.failed_refits * 10 > options.resamples;
    r.p_value = (1.0 + exceed) / (r.bootstrap_count + 1.0);
    r.reject = r.p_value < options.alpha;
    return r;
}

std::vector<int> dense_rank(std::span<const double> values) {
    std::vector<double> distinct(values.begin(), values.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ranks[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), values[i]) - distinct.begin()) + 1;
    }
    return ranks;
}

ModelRanking rank_models(const std::vector<std::vector<double>>& images, std::span<const Family> families,
                         const RankOptions& options) {
    if (images.empty()) throw Error(ErrorCode::insufficient_data, "no images to rank models on");
    for (const auto& s : images) {
        if (s.size() < 3) throw Error(ErrorCode::insufficient_data, "every image needs at least 3 samples");
    }

    ModelRanking out;
    out.image_count = static_cast<int>(images.size());
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
        const Family family = families[fi];
        FamilyRanking row;
        row.family = family;
        double total = 0.0;
        for (std::size_t i = 0; i < images.size(); ++i) {
            FitResult fit;
            try {
                fit = fit_mle(images[i], family, options.fit);
            } catch (const Error&) {
                fit.converged = false;
            }
            if (!fit.converged) {
                ++row.fit_failures;
                ++row.ad_rejections;
                total = std::numeric_limits<double>::infinity();
                continue;
            }
            total += fit.nll;
            BootstrapOptions bo = options.bootstrap;
            bo.seed = splitmix64(options.bootstrap.seed ^ (static_cast<std::uint64_t>(i) << 8) ^
                                 static_cast<std::uint64_t>(family));
            if (ad_pvalue_bootstrap(images[i], fit, bo).reject) ++row.ad_rejections;
        }
        if (row.fit_failures == out.image_count) {
            out.excluded.push_back(family);
            out.diagnostics.push_back("family '" + std::string(family_name(family)) +
                                      "' could not be fitted on any image; excluded");
            continue;
        }
        row.mean_nll = total / static_cast<double>(images.size());
        out.families.push_back(row);
    }

    std::vector<double> nll, rej;
    for (const auto& f : out.families) {
        nll.push_back(f.mean_nll);
        rej.push_back(f.ad_rejections);
    }
    const auto nll_ranks = dense_rank(nll);
    const auto ad_ranks = dense_rank(rej);
    for (std::size_t i = 0; i < out.families.size(); ++i) {
        out.families[i].nll_rank = nll_ranks[i];
        out.families[i].ad_rank = ad_ranks[i];
    }
    return out;
}

}  // namespace surfit
