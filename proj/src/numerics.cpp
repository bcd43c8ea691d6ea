#include "evcorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "evcorr/errors.hpp"

namespace evcorr {

double ln_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("ln_gamma requires x > 0");
    }
    return std::lgamma(x);
}

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    const double fpmin = std::numeric_limits<double>::min() / kEps;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

} // namespace

double reg_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("reg_incomplete_beta requires a > 0 and b > 0");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("reg_incomplete_beta requires x in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double ln_front =
        a * std::log(x) + b * std::log1p(-x) - (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
    const double front = std::exp(ln_front);
    // Symmetry switch keeps the continued fraction in its fast-converging region.
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double f_sf(double stat, int d1, int d2) {
    if (d1 <= 0 || d2 <= 0) {
        throw DomainError("f_sf requires positive degrees of freedom");
    }
    if (!(stat >= 0.0)) {
        throw DomainError("f_sf requires stat >= 0");
    }
    const double x = d2 / (d2 + d1 * stat);
    return std::clamp(reg_incomplete_beta(d2 / 2.0, d1 / 2.0, x), 0.0, 1.0);
}

double normal_sf(double z) {
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

double t_sf(double stat, double dof) {
    if (!(dof >= 1.0)) {
        throw DomainError("t_sf requires dof >= 1");
    }
    const double x = dof / (dof + stat * stat);
    const double half_tail = 0.5 * reg_incomplete_beta(dof / 2.0, 0.5, x);
    return stat >= 0.0 ? half_tail : 1.0 - half_tail;
}

BoundBox BoundBox::unbounded(std::size_t n) {
    const double inf = std::numeric_limits<double>::infinity();
    return BoundBox{std::vector<double>(n, -inf), std::vector<double>(n, inf)};
}

void BoundBox::validate(std::size_t n) const {
    if (lower.size() != n || upper.size() != n) {
        throw InvalidInputError("bound box dimension mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(lower[i] < upper[i])) {
            throw InvalidInputError("bound box requires lower < upper elementwise");
        }
    }
}

std::vector<double> BoundBox::clamp(std::vector<double> x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], lower[i], upper[i]);
    }
    return x;
}

bool BoundBox::contains(const std::vector<double>& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lower[i] || x[i] > upper[i]) return false;
    }
    return true;
}

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

double safe_eval(const Objective& f, const std::vector<double>& x) {
    const double v = f(x);
    return std::isfinite(v) ? v : kObjectivePenalty;
}

struct Simplex {
    std::vector<std::vector<double>> pts;
    std::vector<double> vals;

    void sort() {
        std::vector<std::size_t> order(pts.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> p2;
        std::vector<double> v2;
        for (std::size_t i : order) {
            p2.push_back(std::move(pts[i]));
            v2.push_back(vals[i]);
        }
        pts = std::move(p2);
        vals = std::move(v2);
    }

    double diameter() const {
        double d = 0.0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < pts[i].size(); ++j) {
                d = std::max(d, std::fabs(pts[i][j] - pts[0][j]));
            }
        }
        return d;
    }
};

Simplex build_simplex(const Objective& f, const std::vector<double>& x0, const BoundBox& bounds,
                      double step_scale) {
    const std::size_t n = x0.size();
    Simplex s;
    s.pts.push_back(x0);
    s.vals.push_back(safe_eval(f, x0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> p = x0;
        double step = step_scale * (x0[i] != 0.0 ? 0.05 * std::fabs(x0[i]) : 0.00025);
        if (p[i] + step > bounds.upper[i]) step = -step; // step inward from an active bound
        p[i] += step;
        s.pts.push_back(bounds.clamp(std::move(p)));
        s.vals.push_back(safe_eval(f, s.pts.back()));
    }
    return s;
}

// One Nelder-Mead loop until convergence or the iteration budget runs out.
// Returns iterations consumed.
int nelder_mead(const Objective& f, Simplex& s, const BoundBox& bounds, double tol, int max_iter,
                bool& converged) {
    const std::size_t n = s.pts.size() - 1;
    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

    int iter = 0;
    converged = false;
    for (; iter < max_iter; ++iter) {
        s.sort();
        const double fspread = s.vals.back() - s.vals.front();
        if (s.diameter() <= tol && fspread <= tol * (1.0 + std::fabs(s.vals.front()))) {
            converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += s.pts[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j) {
                p[j] = centroid[j] + coeff * (centroid[j] - s.pts[n][j]);
            }
            return bounds.clamp(std::move(p));
        };

        std::vector<double> xr = blend(kReflect);
        const double fr = safe_eval(f, xr);
        if (fr < s.vals[0]) {
            std::vector<double> xe = blend(kExpand);
            const double fe = safe_eval(f, xe);
            if (fe < fr) {
                s.pts[n] = std::move(xe);
                s.vals[n] = fe;
            } else {
                s.pts[n] = std::move(xr);
                s.vals[n] = fr;
            }
            continue;
        }
        if (fr < s.vals[n - 1]) {
            s.pts[n] = std::move(xr);
            s.vals[n] = fr;
            continue;
        }
        // Contract toward the better of the worst point and the reflection.
        const bool outside = fr < s.vals[n];
        std::vector<double> xc = blend(outside ? kContract : -kContract);
        const double fc = safe_eval(f, xc);
        if (fc < std::min(fr, s.vals[n])) {
            s.pts[n] = std::move(xc);
            s.vals[n] = fc;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                s.pts[i][j] = s.pts[0][j] + kShrink * (s.pts[i][j] - s.pts[0][j]);
            }
            s.pts[i] = bounds.clamp(std::move(s.pts[i]));
            s.vals[i] = safe_eval(f, s.pts[i]);
        }
    }
    s.sort();
    return iter;
}

} // namespace

OptimResult minimize(const Objective& objective, std::vector<double> start, const BoundBox& bounds,
                     double tol, int max_iter) {
    const std::size_t n = start.size();
    if (n == 0) {
        throw InvalidInputError("minimize requires at least one parameter");
    }
    bounds.validate(n);
    if (!bounds.contains(start)) {
        throw InvalidInputError("minimize start point outside bounds");
    }
    if (!std::isfinite(objective(start))) {
        throw InvalidInputError("objective non-finite at start point");
    }

    Simplex s = build_simplex(objective, start, bounds, 1.0);
    bool converged = false;
    int used = nelder_mead(objective, s, bounds, tol, max_iter, converged);

    // One scheduled restart from the best point with a tighter simplex,
    // whether or not the first pass converged.
    if (used < max_iter) {
        Simplex s2 = build_simplex(objective, s.pts[0], bounds, 0.1);
        bool converged2 = false;
        used += nelder_mead(objective, s2, bounds, tol, max_iter - used, converged2);
        s2.sort();
        if (s2.vals[0] <= s.vals[0]) {
            s = std::move(s2);
            converged = converged2;
        }
    }

    OptimResult result;
    result.argmin = s.pts[0];
    result.value = s.vals[0];
    result.iterations = used;
    result.converged = converged;
    result.reason = converged ? "converged" : "max_iterations";
    return result;
}

} // namespace evcorr
