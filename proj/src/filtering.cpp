#include "gpw/filtering.hpp"

#include "gpw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace gpw {
namespace {

double ipow(double base, int e) {
    double r = 1.0;
    double b = base;
    while (e > 0) {
        if (e & 1) {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    return r;
}

Complex ipowc(Complex base, int e) {
    Complex r{1.0, 0.0};
    Complex b = base;
    while (e > 0) {
        if (e & 1) {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    return r;
}

double binom(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Unnormalized profile (sin(t/n) / t)^n; even, positive for even n, and
// O(t^(-n)) at infinity.
double kernel_base(int n, double t) {
    double at = std::abs(t);
    double u = at / n;
    double s;
    if (u < 1e-4) {
        double u2 = u * u;
        s = (1.0 - u2 / 6.0 * (1.0 - u2 / 20.0)) / n; // sin(u)/(n u), small-u series
    } else {
        s = std::sin(u) / at;
    }
    return ipow(s, n);
}

// Tail int_T^inf sin(t/n)^n t^(p-n) dt via the finite cosine expansion of
// sin^n: sin^n x = 2^(-n) [ C(n,n/2) + 2 sum_j (-1)^j C(n, n/2+j) cos(2jx) ].
double base_moment_tail(int n, int p, double T) {
    int q = n - p;
    double scale = std::ldexp(1.0, -n); // 2^(-n)
    double tail = scale * binom(n, n / 2) * quad::power_tail(q, T);
    for (int j = 1; j <= n / 2; ++j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        tail += 2.0 * scale * sign * binom(n, n / 2 + j) *
                quad::cosine_tail(2.0 * j / n, q, T);
    }
    return tail;
}

template <class Multiplier>
Signal apply_spectral(const SpectralBasis& basis, const Signal& f, Multiplier&& m) {
    Eigen::VectorXcd coeffs = forward(basis, f);
    for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
        coeffs[j] *= m(std::max(basis.eigenvalues()[j], 0.0));
    }
    return inverse(basis, coeffs);
}

void require_positive_bandwidth(Bandwidth omega) {
    if (!(omega.value() > 0.0)) {
        raise(ErrorCode::InvalidArgument, "filtering needs a strictly positive bandwidth");
    }
}

} // namespace

Signal schrodinger(const SpectralBasis& basis, const Signal& f, double t) {
    detail::check_basis_signal(basis, f, "schrodinger");
    return apply_spectral(basis, f,
                          [t](double lambda) { return std::polar(1.0, t * lambda); });
}

Signal difference(const SpectralBasis& basis, const Signal& f, double s, int m) {
    detail::check_basis_signal(basis, f, "difference");
    if (m < 0) {
        raise(ErrorCode::InvalidArgument, "difference order must be nonnegative");
    }
    return apply_spectral(basis, f, [s, m](double lambda) {
        return ipowc(std::polar(1.0, s * lambda) - Complex{1.0, 0.0}, m);
    });
}

double modulus(const SpectralBasis& basis, const Signal& f, double s, int m) {
    detail::check_basis_signal(basis, f, "modulus");
    if (m < 0) {
        raise(ErrorCode::InvalidArgument, "difference order must be nonnegative");
    }
    if (s < 0.0) {
        raise(ErrorCode::InvalidArgument, "modulus of smoothness needs a nonnegative step");
    }
    if (m == 0) {
        return f.norm();
    }
    Eigen::VectorXcd coeffs = forward(basis, f);
    Eigen::VectorXd weights = coeffs.cwiseAbs2();

    // |(e^{i tau L} - I)^m f|^2 = sum_j w_j (4 sin^2(tau lambda_j / 2))^m.
    auto eval = [&](double tau) {
        double sq = 0.0;
        for (Eigen::Index j = 0; j < weights.size(); ++j) {
            double sn = std::sin(0.5 * tau * basis.eigenvalues()[j]);
            sq += weights[j] * ipow(4.0 * sn * sn, m);
        }
        return std::sqrt(sq);
    };

    constexpr int grid = 512;
    double best = 0.0;
    int best_index = 0;
    for (int i = 0; i <= grid; ++i) {
        double tau = s * i / grid;
        double value = eval(tau);
        if (value > best) {
            best = value;
            best_index = i;
        }
    }

    // Golden-section refinement around the best grid point.
    double lo = s * std::max(best_index - 1, 0) / grid;
    double hi = s * std::min(best_index + 1, grid) / grid;
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = eval(x1);
    double f2 = eval(x2);
    for (int it = 0; it < 90 && hi - lo > 1e-13 * (1.0 + s); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = eval(x1);
        }
        best = std::max(best, std::max(f1, f2));
    }
    return best;
}

FilterKernel::FilterKernel(int order) : order_(order) {
    if (order % 2 != 0) {
        raise(ErrorCode::OddOrder,
              "kernel order must be even, got " + std::to_string(order));
    }
    if (order < 4) {
        raise(ErrorCode::OrderTooSmall,
              "kernel order must be at least 4, got " + std::to_string(order));
    }

    auto base = [this](double t) { return kernel_base(order_, t); };

    // Size the truncation from a rough pass: the dropped tail of the
    // normalization integral is below T^(1-n)/(n-1).
    double rough = quad::integrate(base, 0.0, 200.0, 1e-9, 0.0, 2.0);
    double cut = std::pow((order - 1) * 1e-12 * rough, -1.0 / (order - 1));
    cut = std::clamp(cut, 200.0, 1e6);
    double raw = quad::integrate(base, 0.0, cut, 1e-13, 0.0, 2.0);
    normalizer_ = 1.0 / (2.0 * raw);

    double transform_cut =
        std::pow((order - 1) * 5e-12 / (2.0 * normalizer_), -1.0 / (order - 1));
    transform_cut_ = std::clamp(transform_cut, 200.0, 1e6);
}

double FilterKernel::transform(double xi) const {
    xi = std::abs(xi);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = transform_cache_.find(xi);
        if (it != transform_cache_.end()) {
            return it->second;
        }
    }
    double value = transform_uncached(xi);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    transform_cache_.emplace(xi, value);
    return value;
}

double FilterKernel::transform_uncached(double xi) const {
    int n = order_;
    auto integrand = [n, xi](double t) { return kernel_base(n, t) * std::cos(xi * t); };
    // Keep at most ~4 radians of combined oscillation per panel so the
    // embedded-rule error estimate stays honest.
    double panel = std::min(2.0, 4.0 / (1.0 + xi));
    double floor = 1e-12 / (2.0 * normalizer_);
    double raw = quad::integrate(integrand, 0.0, transform_cut_, 1e-12, floor, panel);
    return 2.0 * normalizer_ * raw;
}

double FilterKernel::absolute_moment(int p) const {
    if (p < 0) {
        raise(ErrorCode::InvalidArgument, "moment order must be nonnegative");
    }
    if (p > order_ - 2) {
        std::ostringstream msg;
        msg << "moment of order " << p << " diverges for kernel order " << order_
            << "; the kernel order must be at least " << (p + 2);
        raise(ErrorCode::OrderMismatch, msg.str());
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = moment_cache_.find(p);
        if (it != moment_cache_.end()) {
            return it->second;
        }
    }
    double value = moment_uncached(p);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    moment_cache_.emplace(p, value);
    return value;
}

double FilterKernel::moment_uncached(int p) const {
    int n = order_;
    const double T = 4000.0;
    auto integrand = [n, p](double t) { return kernel_base(n, t) * ipow(t, p); };
    double raw = quad::integrate(integrand, 0.0, T, 1e-12, 0.0, 2.0);
    double half = raw + base_moment_tail(n, p, T);
    return 2.0 * normalizer_ * half;
}

std::vector<std::pair<double, double>> FilterKernel::transform_table(double max_xi,
                                                                     int points) const {
    if (points < 2 || !(max_xi > 0.0)) {
        raise(ErrorCode::InvalidArgument, "transform table needs max_xi > 0 and >= 2 points");
    }
    std::vector<std::pair<double, double>> table;
    table.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        double xi = max_xi * i / (points - 1);
        table.emplace_back(xi, transform(xi));
    }
    return table;
}

double q_multiplier(const FilterKernel& kernel, double omega, double lambda) {
    if (!(omega > 0.0)) {
        raise(ErrorCode::InvalidArgument, "filtering needs a strictly positive bandwidth");
    }
    return kernel.transform(std::max(lambda, 0.0) / omega);
}

double p_multiplier(const FilterKernel& kernel, int m, double omega, double lambda) {
    if (!(omega > 0.0)) {
        raise(ErrorCode::InvalidArgument, "filtering needs a strictly positive bandwidth");
    }
    lambda = std::max(lambda, 0.0);
    double away = 0.0;
    for (int j = 0; j <= m; ++j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        away += sign * binom(m, j) * kernel.transform(j * lambda / omega);
    }
    return 1.0 - away;
}

Signal filter_q(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
                const FilterKernel& kernel) {
    detail::check_basis_signal(basis, f, "filter_q");
    require_positive_bandwidth(omega);
    double w = omega.value();
    return apply_spectral(basis, f, [&kernel, w](double lambda) {
        return q_multiplier(kernel, w, lambda);
    });
}

Signal filter_p(const SpectralBasis& basis, const Signal& f, Bandwidth omega, int m,
                const FilterKernel& kernel) {
    detail::check_basis_signal(basis, f, "filter_p");
    require_positive_bandwidth(omega);
    if (m < 1) {
        raise(ErrorCode::InvalidArgument, "reproducing filter order must be at least 1");
    }
    if (kernel.order() < m + 2) {
        std::ostringstream msg;
        msg << "reproducing filter of order " << m << " needs kernel order at least "
            << (m + 2) << ", got " << kernel.order();
        raise(ErrorCode::OrderMismatch, msg.str());
    }
    double w = omega.value();
    return apply_spectral(basis, f, [&kernel, m, w](double lambda) {
        return p_multiplier(kernel, m, w, lambda);
    });
}

int default_kernel_order(int m) {
    int n = m + 2;
    if (n % 2 != 0) {
        ++n;
    }
    return std::max(4, n);
}

double c_hmk(const FilterKernel& kernel, int m, int k) {
    if (m < 0 || k < 0 || k > m) {
        raise(ErrorCode::InvalidArgument,
              "error constant needs 0 <= k <= m, got m=" + std::to_string(m) +
                  " k=" + std::to_string(k));
    }
    if (kernel.order() < m + 2) {
        std::ostringstream msg;
        msg << "error constant of order " << m << " needs kernel order at least " << (m + 2)
            << ", got " << kernel.order();
        raise(ErrorCode::OrderMismatch, msg.str());
    }
    // |t|^k (1 + |t|)^(m-k) expanded into pure moments.
    double total = 0.0;
    for (int i = 0; i <= m - k; ++i) {
        total += binom(m - k, i) * kernel.absolute_moment(k + i);
    }
    return total;
}

ApproxReport direct_approx_report(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
                                  int m, int k, const FilterKernel& kernel, double tol) {
    detail::check_basis_signal(basis, f, "direct_approx_report");
    require_positive_bandwidth(omega);
    if (k < 0 || k > m) {
        raise(ErrorCode::InvalidArgument, "smoothness split needs 0 <= k <= m");
    }

    ApproxReport report;
    report.omega = omega.value();
    report.m = m;
    report.k = k;
    report.best_error = (f - pw_project(basis, f, omega)).norm();
    report.filter_error = (f - filter_p(basis, f, omega, m, kernel)).norm();
    report.constant = c_hmk(kernel, m, k);
    Signal powered = (k > 0) ? apply_power(basis, f, k) : f;
    report.modulus_value = modulus(basis, powered, 1.0 / omega.value(), m - k);
    report.bound = report.constant * std::pow(omega.value(), -k) * report.modulus_value;
    report.holds =
        report.best_error <= report.filter_error + tol * (1.0 + report.filter_error) &&
        report.filter_error <= report.bound + tol * (1.0 + report.bound);
    return report;
}

SparseApproxResult sparse_approx(const SpectralBasis& basis, const Signal& f,
                                 const DualFrame& frame, int m, int k,
                                 const FilterKernel& kernel, double tol) {
    detail::check_basis_signal(basis, f, "sparse_approx");
    SparseApproxResult result;
    result.report = direct_approx_report(basis, f, Bandwidth(frame.omega), m, k, kernel, tol);

    Signal filtered = filter_p(basis, f, Bandwidth(frame.omega), m, kernel);
    result.approximation = reconstruct(frame, restrict_to(filtered, frame.set));
    result.filter_error = (f - result.approximation).norm();

    Signal projected = pw_project(basis, f, Bandwidth(frame.omega));
    Signal via_projection = reconstruct(frame, restrict_to(projected, frame.set));
    result.projection_error = (f - via_projection).norm();

    result.chain_holds =
        result.projection_error <= result.filter_error + tol * (1.0 + result.filter_error) &&
        result.filter_error <= result.report.bound + tol * (1.0 + result.report.bound);
    return result;
}

} // namespace gpw
