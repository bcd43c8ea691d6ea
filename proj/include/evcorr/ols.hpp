#pragma once

#include <Eigen/Dense>

namespace evcorr {

/// Ordinary least squares fit with the quantities structural-break and
/// unit-root tests consume.
struct OlsFit {
    Eigen::VectorXd coefficients; // first entry is the intercept when X carries one
    Eigen::VectorXd residuals;
    double rss = 0.0;
    long n = 0; // observations
    long k = 0; // regressor count including any intercept column
    Eigen::VectorXd std_errors; // from s^2 (X'X)^-1, s^2 = rss / (n - k)
    Eigen::VectorXd t_stats;
};

/// Solves min ||y - X b||^2 by column-pivoted Householder QR.
/// Throws InsufficientDataError when n <= k and SingularDesignError when the
/// design is rank deficient (diagonal ratio below 1e-10).
OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X);

} // namespace evcorr
