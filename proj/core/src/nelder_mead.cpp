#include "surfit/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "surfit/error.hpp"

namespace surfit {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

double diameter(const std::vector<Vertex>& simplex) {
    double d = 0.0;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < simplex[i].x.size(); ++k) {
                const double diff = simplex[i].x[k] - simplex[j].x[k];
                s += diff * diff;
            }
            d = std::max(d, s);
        }
    }
    return std::sqrt(d);
}

struct RunResult {
    Vertex best;
    int iterations;
    bool converged;
};

RunResult run_once(const Objective& f, const Vertex& start, std::span<const double> steps,
                   const SimplexOptions& options) {
    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    const std::size_t n = start.x.size();
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back(start);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = start;
        v.x[i] += steps[i];
        v.f = f(v.x);
        if (!std::isfinite(v.f)) {
            // Step into an infeasible region; try the opposite direction.
            v.x[i] = start.x[i] - steps[i];
            v.f = f(v.x);
        }
        simplex.push_back(std::move(v));
    }

    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    std::vector<double> centroid(n), trial(n);
    auto point = [&](double coeff, const std::vector<double>& toward) {
        for (std::size_t k = 0; k < n; ++k) trial[k] = centroid[k] + coeff * (toward[k] - centroid[k]);
        return f(trial);
    };

    int it = 0;
    bool converged = false;
    while (it < options.max_iterations) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        const double d = diameter(simplex);
        // Near a flat optimum the vertex values tie in floating point and the
        // simplex can stall just above the diameter tolerance.
        const double spread = simplex[n].f - simplex[0].f;
        const double flat = 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(simplex[0].f));
        if (d < options.tolerance || (spread <= flat && d < std::sqrt(options.tolerance))) {
            converged = true;
            break;
        }
        ++it;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i].x[k];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        Vertex& worst = simplex[n];
        const double f_reflect = point(-kReflect, worst.x);
        if (f_reflect < simplex[0].f) {
            std::vector<double> reflected = trial;
            const double f_expand = point(-kExpand, worst.x);
            if (f_expand < f_reflect) {
                worst = {trial, f_expand};
            } else {
                worst = {std::move(reflected), f_reflect};
            }
            continue;
        }
        if (f_reflect < simplex[n - 1].f) {
            worst = {trial, f_reflect};
            continue;
        }
        // Contraction: outside if the reflection improved on the worst, inside otherwise.
        const bool outside = f_reflect < worst.f;
        const double f_contract = outside ? point(-kReflect * kContract, worst.x) : point(kContract, worst.x);
        if (f_contract <= std::min(f_reflect, worst.f)) {
            worst = {trial, f_contract};
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                simplex[i].x[k] = simplex[0].x[k] + kShrink * (simplex[i].x[k] - simplex[0].x[k]);
            }
            simplex[i].f = f(simplex[i].x);
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
    return {simplex[0], it, converged};
}

}  // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> steps,
                          const SimplexOptions& options) {
    if (start.empty() || steps.size() != start.size()) {
        throw Error(ErrorCode::invalid_argument, "nelder_mead: start and steps must have equal, nonzero size");
    }
    Vertex best{std::move(start), 0.0};
    best.f = f(best.x);
    SimplexResult result;
    if (!std::isfinite(best.f)) {
        result.x = best.x;
        result.value = best.f;
        return result;
    }

    const int runs = std::max(1, options.restarts);
    for (int r = 0; r < runs; ++r) {
        const double before = best.f;
        RunResult run = run_once(f, best, steps, options);
        result.iterations += run.iterations;
        result.converged = run.converged;
        if (run.best.f <= best.f) best = std::move(run.best);
        // Stop restarting once a restart no longer improves the optimum.
        if (r > 0 && run.converged && before - best.f <= 1e-12 * (1.0 + std::abs(best.f))) break;
    }
    result.x = std::move(best.x);
    result.value = best.f;
    return result;
}

}  // namespace surfit
