#pragma once

#include <functional>
#include <span>
#include <vector>

namespace surfit {

struct SimplexOptions {
    double tolerance = 1e-9;    // stop when simplex diameter falls below this
    int max_iterations = 10000; // per run
    int restarts = 5;           // total runs; runs after the first restart from the best vertex
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;  // summed over all runs
    bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free minimization. Infeasible points are expected to return
/// +inf; the initial point must be feasible. Each restart rebuilds the simplex
/// around the best point found so far using the original step sizes.
SimplexResult nelder_mead(const Objective& f, std::vector<double> start,
                          std::span<const double> steps, const SimplexOptions& options = {});

}  // namespace surfit
