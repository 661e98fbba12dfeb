#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfit/gev.hpp"
#include "surfit/nelder_mead.hpp"

namespace surfit {

inline constexpr int kJpegLevels = 100;

/// Distortion level n for a JPEG quality factor (n = 101 - QF).
constexpr double level_from_qf(double qf) noexcept { return kJpegLevels + 1 - qf; }
constexpr double qf_from_level(double level) noexcept { return kJpegLevels + 1 - level; }

enum class SurSource { empirical, analytic, fitted };

/// SUR(1..N) sampled at integer distortion levels. values[i] is SUR(i + 1).
struct SurCurve {
    std::vector<double> values;
    SurSource source = SurSource::empirical;
    std::optional<GevParams> params;

    int n_levels() const noexcept { return static_cast<int>(values.size()); }
    /// SUR(level); 1 for levels below 1. Throws range_error above N.
    double at(int level) const;
};

/// SUR(y) = F_X(N + 1 - y) for the QF-axis GEV.
SurCurve sur_from_params(const GevParams& p, int n_levels = kJpegLevels);

/// Fraction of `qf_samples` whose level 101 - qf exceeds each level.
SurCurve empirical_sur(std::span<const double> qf_samples, int n_levels = kJpegLevels);

struct JndPmf {
    std::vector<double> mass;  // mass[i] = P(JND = i + 1)
    double tail = 0.0;         // P(JND > N)
};

JndPmf jnd_pmf(const SurCurve& c);

/// min{n : 1 - SUR(n) >= p/100}.
int p_jnd(const SurCurve& c, double p);

/// max{n : SUR(n) >= p/100}.
int p_sur(const SurCurve& c, double p);

struct SurFit {
    GevParams params;
    double residual = 0.0;  // sum of squared deviations
    int iterations = 0;
    bool converged = false;
};

double sur_lsq_objective(std::span<const double> sur_values, const GevParams& p);

/// Least-squares GEV fit to SUR samples at levels 1..N.
SurFit fit_sur_lsq(std::span<const double> sur_values, const SimplexOptions& options = {});

void write_sur_csv(std::ostream& out, int image_id, const SurCurve& c, bool header = true);

}  // namespace surfit
