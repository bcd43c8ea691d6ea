#include "evcorr/ols.hpp"

#include <cmath>

#include "evcorr/errors.hpp"

namespace evcorr {

namespace {
// Rolling-correlation regressors can be near-constant in quiet regimes;
// treat anything below this diagonal ratio as rank deficient.
constexpr double kRankTolerance = 1e-10;
} // namespace

OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X) {
    const long n = X.rows();
    const long k = X.cols();
    if (y.size() != n) {
        throw InvalidInputError("ols: y length does not match design rows");
    }
    if (n <= k) {
        throw InsufficientDataError("ols: need more observations than regressors");
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    const Eigen::MatrixXd& qrmat = qr.matrixQR();
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (long j = 0; j < k; ++j) {
        const double d = std::fabs(qrmat(j, j));
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
    }
    if (!(dmax > 0.0) || dmin / dmax < kRankTolerance) {
        throw SingularDesignError("ols: design matrix is rank deficient");
    }

    OlsFit fit;
    fit.coefficients = qr.solve(y);
    fit.residuals = y - X * fit.coefficients;
    fit.rss = fit.residuals.squaredNorm();
    fit.n = n;
    fit.k = k;

    const double s2 = fit.rss / static_cast<double>(n - k);
    const Eigen::MatrixXd xtx_inv =
        (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
    fit.std_errors.resize(k);
    fit.t_stats.resize(k);
    for (long j = 0; j < k; ++j) {
        const double v = s2 * xtx_inv(j, j);
        fit.std_errors(j) = v > 0.0 ? std::sqrt(v) : 0.0;
        fit.t_stats(j) = fit.std_errors(j) > 0.0 ? fit.coefficients(j) / fit.std_errors(j) : 0.0;
    }
    return fit;
}

} // namespace evcorr
