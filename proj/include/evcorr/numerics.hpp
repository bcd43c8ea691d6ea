#pragma once

#include <functional>
#include <string>
#include <vector>

namespace evcorr {

/// Log of the gamma function for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// Regularized incomplete beta I_x(a, b), a > 0, b > 0, x in [0, 1].
double reg_incomplete_beta(double a, double b, double x);

/// Upper-tail probability P(F_{d1,d2} >= stat).
double f_sf(double stat, int d1, int d2);

/// Standard normal upper-tail probability.
double normal_sf(double z);

/// Student-t upper-tail probability, dof >= 1.
double t_sf(double stat, double dof);

/// Per-parameter box constraints; +/-infinity allowed.
struct BoundBox {
    std::vector<double> lower;
    std::vector<double> upper;

    static BoundBox unbounded(std::size_t n);
    void validate(std::size_t n) const; // lower < upper elementwise, sizes match
    std::vector<double> clamp(std::vector<double> x) const;
    bool contains(const std::vector<double>& x) const;
};

struct OptimResult {
    std::vector<double> argmin;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string reason;
};

/// Objective value substituted for non-finite evaluations during the search.
inline constexpr double kObjectivePenalty = 1e10;

/// Bounded derivative-free Nelder-Mead minimization with one scheduled
/// restart from the best point. Deterministic: no randomness, fixed simplex
/// construction. Candidate points are clamped to the bounds before
/// evaluation, so the objective is never called outside the box.
///
/// Throws InvalidInputError if the start is outside bounds or the objective
/// is non-finite at the start.
OptimResult minimize(const std::function<double(const std::vector<double>&)>& objective,
                     std::vector<double> start, const BoundBox& bounds,
                     double tol = 1e-8, int max_iter = 2000);

} // namespace evcorr
