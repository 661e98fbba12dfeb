#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace surfit {

/// PSNR in dB per distortion level; psnr[i] belongs to level i + 1.
struct PsnrCurve {
    int image_id = 0;
    std::vector<double> psnr;

    int n_levels() const noexcept { return static_cast<int>(psnr.size()); }
    /// Throws range_error outside 1..N.
    double at(int level) const;
};

/// Interleaved pixel samples, row-major, `channels` values per pixel.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<double> pixels;
};

/// 10 log10(max^2 / MSE). Returns +inf for identical images.
double psnr_db(const Image& reference, const Image& distorted, double max_value = 255.0);

/// Mean of the training images' PSNR at their ground-truth p% JND.
double baseline_threshold(std::span<const double> train_psnr_at_jnd);

struct BaselinePrediction {
    int level = 0;
    bool saturated = false;  // no level reached the threshold; level is N
};

/// Smallest level D with psnr(D) <= t, scanning upward from 1.
BaselinePrediction predict_jnd_baseline(const PsnrCurve& curve, double t);

}  // namespace surfit
