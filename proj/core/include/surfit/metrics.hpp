#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "surfit/baseline.hpp"
#include "surfit/gev.hpp"

namespace surfit {

enum class BhattacharyyaScheme {
    real_line,   // adaptive quadrature over the whole support intersection
    clipped_qf,  // same, restricted to QF in [1, 100]
    qf_grid,     // sum of sqrt(f g) over the integer QF values 1..100
};

std::string_view scheme_name(BhattacharyyaScheme s) noexcept;
BhattacharyyaScheme parse_scheme(std::string_view name);

enum class Axis { qf, level };

struct BhattacharyyaOptions {
    BhattacharyyaScheme scheme = BhattacharyyaScheme::real_line;
    /// Integrate the reflected level-axis densities f(101 - y) instead.
    Axis axis = Axis::qf;
    double tolerance = 1e-10;
};

struct BhattacharyyaResult {
    double distance = 0.0;     // +inf when disjoint
    double coefficient = 1.0;  // integral of sqrt(f g)
    bool disjoint = false;
};

BhattacharyyaResult bhattacharyya(const GevParams& p, const GevParams& q, const BhattacharyyaOptions& options = {});

double delta_psnr(const PsnrCurve& curve, int gt_level, int pred_level);

double plcc(std::span<const double> xs, std::span<const double> ys);

struct ImageMetrics {
    int image_id = 0;
    GevParams gt{};
    GevParams pred{};
    double bhattacharyya = 0.0;
    int gt_level = 0;
    int pred_level = 0;
    int delta_jnd = 0;
    double gt_psnr = 0.0;
    double pred_psnr = 0.0;
    double delta_psnr = 0.0;
};

/// Metrics for one image at the p% JND.
ImageMetrics image_metrics(int image_id, const GevParams& gt, const GevParams& pred, const PsnrCurve& curve,
                           double p = 50.0, const BhattacharyyaOptions& options = {});

struct MetricMeans {
    double bhattacharyya = 0.0;
    double delta_jnd = 0.0;
    double delta_psnr = 0.0;
};

MetricMeans aggregate(std::span<const ImageMetrics> per_image);

}  // namespace surfit
