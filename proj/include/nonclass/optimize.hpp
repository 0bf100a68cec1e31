#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace nonclass {

/// Knobs shared by every optimized measure. Defaults match the CLI defaults.
struct OptimOptions {
    std::size_t restarts = 16;
    double tol = 1e-9;           // convergence tolerance on the objective
    std::uint64_t seed = 0;
    std::size_t max_iter = 0;    // 0 = automatic (scales with dimension)
};

struct OptimResult {
    std::vector<double> x;
    double value = 0.0;       // best objective (minimization)
    double residual = 0.0;    // final simplex spread of the winning restart
    double dispersion = 0.0;  // spread of per-restart optima
    std::size_t restarts = 0;
    bool converged = true;
};

/// Nelder-Mead from a single start point; minimizes f.
OptimResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                        std::vector<double> x0, double step, double tol,
                        std::size_t max_iter);

/// Multi-start minimization over `dim` parameters. Restart 0 starts from the
/// origin, the rest from seeded uniform draws in [-scale, scale]^dim. The
/// winner is chosen deterministically: smallest value, ties by restart index.
OptimResult multistart_minimize(const std::function<double(const std::vector<double>&)>& f,
                                std::size_t dim, const OptimOptions& opt,
                                double scale = 3.14159265358979323846);

} // namespace nonclass
