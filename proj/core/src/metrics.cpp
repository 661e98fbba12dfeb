#include "surfit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "surfit/error.hpp"
#include "surfit/sur_model.hpp"

namespace surfit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tail mass left out on each side of the integration range.
constexpr double kTailMass = 1e-13;

constexpr double kBreakQuantiles[] = {1e-6, 1e-3, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 1 - 1e-6};

double sqrt_product(double x, const GevParams& p, const GevParams& q) {
    const double s = gev_log_pdf(x, p) + gev_log_pdf(x, q);
    return s == -kInf ? 0.0 : std::exp(0.5 * s);
}

double integrate_pieces(const GevParams& p, const GevParams& q, double a, double b, Axis axis, double tol) {
    std::vector<double> cuts{a, b};
    for (const GevParams* g : {&p, &q}) {
        for (double u : kBreakQuantiles) {
            const double x = gev_quantile(u, *g);
            if (x > a && x < b) cuts.push_back(x);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    boost::math::quadrature::tanh_sinh<double> integrator;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (!(hi > lo)) continue;
        if (axis == Axis::qf) {
            total += integrator.integrate([&](double x) { return sqrt_product(x, p, q); }, lo, hi, tol);
        } else {
            // Level axis: y = 101 - x maps [lo, hi] onto [101 - hi, 101 - lo].
            total += integrator.integrate(
                [&](double y) { return sqrt_product(qf_from_level(y), p, q); }, level_from_qf(hi),
                level_from_qf(lo), tol);
        }
    }
    return total;
}

}  // namespace

std::string_view scheme_name(BhattacharyyaScheme s) noexcept {
    switch (s) {
        case BhattacharyyaScheme::real_line: return "real_line";
        case BhattacharyyaScheme::clipped_qf: return "clipped_qf";
        case BhattacharyyaScheme::qf_grid: return "qf_grid";
    }
    return "unknown";
}

BhattacharyyaScheme parse_scheme(std::string_view name) {
    for (auto s : {BhattacharyyaScheme::real_line, BhattacharyyaScheme::clipped_qf, BhattacharyyaScheme::qf_grid}) {
        if (scheme_name(s) == name) return s;
    }
    throw Error(ErrorCode::invalid_argument, "unknown Bhattacharyya scheme '" + std::string(name) + "'");
}

BhattacharyyaResult bhattacharyya(const GevParams& p, const GevParams& q, const BhattacharyyaOptions& options) {
    require_valid(p);
    require_valid(q);

    double bc = 0.0;
    if (options.scheme == BhattacharyyaScheme::qf_grid) {
        for (int qf = 1; qf <= kJpegLevels; ++qf) {
            // Both axes visit the same integer points.
            const double x = options.axis == Axis::qf ? qf : qf_from_level(level_from_qf(qf));
            bc += sqrt_product(x, p, q);
        }
    } else {
        const GevSupport sp = gev_support(p), sq = gev_support(q);
        double a = std::max(sp.lower, sq.lower);
        double b = std::min(sp.upper, sq.upper);
        a = std::max(a, std::min(gev_quantile(kTailMass, p), gev_quantile(kTailMass, q)));
        b = std::min(b, std::max(gev_quantile(1 - kTailMass, p), gev_quantile(1 - kTailMass, q)));
        if (options.scheme == BhattacharyyaScheme::clipped_qf) {
            a = std::max(a, 1.0);
            b = std::min(b, static_cast<double>(kJpegLevels));
        }
        if (b > a) bc = integrate_pieces(p, q, a, b, options.axis, options.tolerance);
    }

    BhattacharyyaResult r;
    r.coefficient = bc;
    if (!(bc > 0.0)) {
        r.disjoint = true;
        r.distance = kInf;
        return r;
    }
    // Quadrature error can push the coefficient of identical densities just above 1.
    r.distance = std::max(0.0, -std::log(bc));
    return r;
}

double delta_psnr(const PsnrCurve& curve, int gt_level, int pred_level) {
    return std::abs(curve.at(pred_level) - curve.at(gt_level));
}

double plcc(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw Error(ErrorCode::invalid_argument, "PLCC arguments differ in length");
    if (xs.size() < 2) throw Error(ErrorCode::insufficient_data, "PLCC needs at least two points");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::undefined_correlation, "PLCC argument has zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

ImageMetrics image_metrics(int image_id, const GevParams& gt, const GevParams& pred, const PsnrCurve& curve,
                           double p, const BhattacharyyaOptions& options) {
    ImageMetrics m;
    m.image_id = image_id;
    m.gt = gt;
    m.pred = pred;
    m.bhattacharyya = bhattacharyya(gt, pred, options).distance;
    m.gt_level = p_jnd(sur_from_params(gt, curve.n_levels()), p);
    m.pred_level = p_jnd(sur_from_params(pred, curve.n_levels()), p);
    m.delta_jnd = std::abs(m.pred_level - m.gt_level);
    m.gt_psnr = curve.at(m.gt_level);
    m.pred_psnr = curve.at(m.pred_level);
    m.delta_psnr = std::abs(m.pred_psnr - m.gt_psnr);
    return m;
}

MetricMeans aggregate(std::span<const ImageMetrics> per_image) {
    if (per_image.empty()) throw Error(ErrorCode::insufficient_data, "no per-image metrics to aggregate");
    MetricMeans m;
    for (const auto& r : per_image) {
        m.bhattacharyya += r.bhattacharyya;
        m.delta_jnd += r.delta_jnd;
        m.delta_psnr += r.delta_psnr;
    }
    const double n = static_cast<double>(per_image.size());
    m.bhattacharyya /= n;
    m.delta_jnd /= n;
    m.delta_psnr /= n;
    return m;
}

}  // namespace surfit
