#include "surfit/baseline.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "surfit/error.hpp"

namespace surfit {

double PsnrCurve::at(int level) const {
    if (level < 1 || level > n_levels()) {
        throw Error(ErrorCode::range_error, "level " + std::to_string(level) + " outside the PSNR curve");
    }
    return psnr[static_cast<std::size_t>(level - 1)];
}

double psnr_db(const Image& reference, const Image& distorted, double max_value) {
    if (reference.width != distorted.width || reference.height != distorted.height ||
        reference.channels != distorted.channels) {
        throw Error(ErrorCode::invalid_argument, "images differ in shape");
    }
    const std::size_t expected = static_cast<std::size_t>(reference.width) *
                                 static_cast<std::size_t>(reference.height) *
                                 static_cast<std::size_t>(reference.channels);
    if (expected == 0 || reference.pixels.size() != expected || distorted.pixels.size() != expected) {
        throw Error(ErrorCode::invalid_argument, "pixel buffer does not match the image shape");
    }
    if (!(max_value > 0.0)) throw Error(ErrorCode::invalid_argument, "peak value must be positive");
    double sse = 0.0;
    for (std::size_t i = 0; i < expected; ++i) {
        const double d = reference.pixels[i] - distorted.pixels[i];
        sse += d * d;
    }
    if (sse == 0.0) return std::numeric_limits<double>::infinity();
    const double mse = sse / static_cast<double>(expected);
    return 10.0 * std::log10(max_value * max_value / mse);
}

double baseline_threshold(std::span<const double> train_psnr_at_jnd) {
    if (train_psnr_at_jnd.empty()) throw Error(ErrorCode::insufficient_data, "no training PSNR values");
    return std::accumulate(train_psnr_at_jnd.begin(), train_psnr_at_jnd.end(), 0.0) /
           static_cast<double>(train_psnr_at_jnd.size());
}

BaselinePrediction predict_jnd_baseline(const PsnrCurve& curve, double t) {
    if (curve.psnr.empty()) throw Error(ErrorCode::insufficient_data, "empty PSNR curve");
    for (int d = 1; d <= curve.n_levels(); ++d) {
        if (curve.psnr[static_cast<std::size_t>(d - 1)] <= t) return {d, false};
    }
    return {curve.n_levels(), true};
}

}  // namespace surfit
