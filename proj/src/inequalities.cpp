#include "gpw/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace gpw {
namespace {

// Exact rational bookkeeping for the inequality constants.  The constants are
// built from small integers (vertex degrees and connectivity counts), so they
// are held as reduced int64 fractions with __int128 intermediates; should a
// product outgrow int64 the value silently degrades to long double, which is
// still far more precision than the 1e-9 verification slack needs.
struct Ratio {
    long long num = 0;
    long long den = 1;
    bool exact = true;
    long double value = 0.0L;
};

Ratio make_ratio(long long num, long long den) {
    Ratio r;
    long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    r.num = num;
    r.den = den;
    r.value = static_cast<long double>(num) / static_cast<long double>(den);
    return r;
}

bool fits_int64(__int128 v) {
    return v <= static_cast<__int128>(std::numeric_limits<long long>::max()) &&
           v >= static_cast<__int128>(std::numeric_limits<long long>::min());
}

Ratio mul(const Ratio& a, const Ratio& b) {
    Ratio r;
    r.value = a.value * b.value;
    if (a.exact && b.exact) {
        long long g1 = std::gcd(a.num, b.den);
        long long g2 = std::gcd(b.num, a.den);
        __int128 n = static_cast<__int128>(a.num / g1) * (b.num / g2);
        __int128 d = static_cast<__int128>(a.den / g2) * (b.den / g1);
        if (fits_int64(n) && fits_int64(d)) {
            r.num = static_cast<long long>(n);
            r.den = static_cast<long long>(d);
            return r;
        }
    }
    r.exact = false;
    return r;
}

Ratio add(const Ratio& a, const Ratio& b) {
    Ratio r;
    r.value = a.value + b.value;
    if (a.exact && b.exact) {
        long long g = std::gcd(a.den, b.den);
        __int128 n = static_cast<__int128>(a.num) * (b.den / g) +
                     static_cast<__int128>(b.num) * (a.den / g);
        __int128 d = static_cast<__int128>(a.den) * (b.den / g);
        if (fits_int64(n) && fits_int64(d)) {
            long long nn = static_cast<long long>(n);
            long long dd = static_cast<long long>(d);
            long long gg = std::gcd(nn, dd);
            if (gg > 1) {
                nn /= gg;
                dd /= gg;
            }
            r.num = nn;
            r.den = dd;
            return r;
        }
    }
    r.exact = false;
    return r;
}

double to_double(const Ratio& r) {
    if (r.exact) {
        return static_cast<double>(r.num) / static_cast<double>(r.den);
    }
    return static_cast<double>(r.value);
}

// (2 D_i / K_i + 1) as an exact fraction (2 D_i + K_i) / K_i.
Ratio level_term(const SubsetGeometry& geometry, int i) {
    int d = geometry.max_relative_degree(i);
    int k = geometry.min_boundary_connectivity(i);
    if (k < 1) {
        raise(ErrorCode::LevelBeyondExhaustion,
              "level " + std::to_string(i) + " has an empty boundary");
    }
    return make_ratio(2LL * d + k, k);
}

// A_n^2 = prod_{i<n} (2 D_i / K_i + 1).
Ratio squared_sample_constant(const SubsetGeometry& geometry, int n) {
    Ratio prod = make_ratio(1, 1);
    for (int i = 0; i < n; ++i) {
        prod = mul(prod, level_term(geometry, i));
    }
    return prod;
}

// sum_n = sum_{j<n} (1/K_j) prod_{i=j+1}^{n-1} (2 D_i / K_i + 1), so that the
// iterated smoothness constant is B_n = 2 sqrt(sum_n).
Ratio smoothness_sum(const SubsetGeometry& geometry, int n) {
    Ratio total = make_ratio(0, 1);
    // Suffix products, innermost level first.
    Ratio suffix = make_ratio(1, 1);
    for (int j = n - 1; j >= 0; --j) {
        int k = geometry.min_boundary_connectivity(j);
        if (k < 1) {
            raise(ErrorCode::LevelBeyondExhaustion,
                  "level " + std::to_string(j) + " has an empty boundary");
        }
        total = add(total, mul(make_ratio(1, k), suffix));
        suffix = mul(suffix, level_term(geometry, j));
    }
    return total;
}

double restriction_norm(const Signal& f, const std::vector<int>& vertices) {
    double sq = 0.0;
    for (int v : vertices) {
        sq += std::norm(f[v]);
    }
    return std::sqrt(sq);
}

bool within_slack(double lhs, double rhs, double tol) {
    return lhs <= rhs + tol * (1.0 + rhs);
}

bool is_power_of_two(int r) { return r >= 1 && (r & (r - 1)) == 0; }

} // namespace

double half_power_norm(const Graph& g, const Signal& f) {
    detail::check_signal(g, f, "half_power_norm");
    Signal lf = laplacian_apply(g, f);
    double quad = inner(lf, f).real();
    return std::sqrt(std::max(quad, 0.0));
}

PoincareReport poincare_iterated(const Graph& g, const SubsetGeometry& geometry, int n,
                                 const Signal& f, double tol) {
    detail::check_signal(g, f, "poincare_iterated");
    if (n < 1) {
        raise(ErrorCode::InvalidArgument, "iteration depth must be at least 1");
    }

    PoincareReport report;
    report.form = PoincareReport::Form::Iterated;
    report.level = n;
    report.power = 1;
    report.sample_coefficient = std::sqrt(to_double(squared_sample_constant(geometry, n)));
    report.smoothness_coefficient = 2.0 * std::sqrt(to_double(smoothness_sum(geometry, n)));
    report.global = geometry.closure_is_full(n);
    report.lhs = restriction_norm(f, geometry.closure(n));
    report.sample_norm = restriction_norm(f, geometry.set());
    report.smoothness_norm = half_power_norm(g, f);
    report.rhs = report.sample_coefficient * report.sample_norm +
                 report.smoothness_coefficient * report.smoothness_norm;
    report.slack = report.rhs - report.lhs;
    report.holds = within_slack(report.lhs, report.rhs, tol);
    return report;
}

PoincareReport poincare_single(const Graph& g, const SubsetGeometry& geometry, const Signal& f,
                               double tol) {
    detail::check_signal(g, f, "poincare_single");
    int k0 = geometry.min_boundary_connectivity(0);
    if (k0 < 1) {
        raise(ErrorCode::LevelBeyondExhaustion, "level 0 has an empty boundary");
    }

    PoincareReport report;
    report.form = PoincareReport::Form::Single;
    report.level = 1;
    report.power = 1;
    report.per_vertex_weights = true;
    report.sample_coefficient = 1.0;
    report.smoothness_coefficient = 2.0 / std::sqrt(static_cast<double>(k0));
    report.global = geometry.closure_is_full(1);
    report.lhs = restriction_norm(f, geometry.closure(1));

    double weighted_sq = 0.0;
    for (int u : geometry.set()) {
        int d0 = geometry.relative_degree(0, u);
        weighted_sq += to_double(make_ratio(2LL * d0 + k0, k0)) * std::norm(f[u]);
    }
    report.sample_norm = std::sqrt(weighted_sq);
    report.smoothness_norm = half_power_norm(g, f);
    report.rhs = report.sample_norm + report.smoothness_coefficient * report.smoothness_norm;
    report.slack = report.rhs - report.lhs;
    report.holds = within_slack(report.lhs, report.rhs, tol);
    return report;
}

PoincareReport poincare_power(const Graph& g, const SubsetGeometry& geometry, const Signal& f,
                              int r, double tol) {
    detail::check_signal(g, f, "poincare_power");
    if (!is_power_of_two(r)) {
        raise(ErrorCode::InvalidPower,
              "bootstrapped inequality needs r in {1, 2, 4, ...}, got " + std::to_string(r));
    }
    auto exhaustion = geometry.exhaustion_level();
    if (!exhaustion) {
        raise(ErrorCode::ClosureNotFull,
              "bootstrapped inequality needs the closure to reach every vertex");
    }
    int n = *exhaustion;

    PoincareReport report;
    report.form = PoincareReport::Form::Power;
    report.level = n;
    report.power = r;
    report.global = true;
    double a_n = std::sqrt(to_double(squared_sample_constant(geometry, n)));
    double sum_n = to_double(smoothness_sum(geometry, n));
    report.sample_coefficient = 2.0 * r * a_n;
    report.smoothness_coefficient =
        std::pow(2.0, 4.0 * r - 3.0) * std::pow(sum_n, 0.5 * r);

    report.lhs = f.norm();
    report.sample_norm = restriction_norm(f, geometry.set());
    if (r == 1) {
        report.smoothness_norm = half_power_norm(g, f);
    } else {
        Signal powered = f;
        for (int i = 0; i < r / 2; ++i) {
            powered = laplacian_apply(g, powered);
        }
        report.smoothness_norm = powered.norm();
    }
    report.rhs = report.sample_coefficient * report.sample_norm +
                 report.smoothness_coefficient * report.smoothness_norm;
    report.slack = report.rhs - report.lhs;
    report.holds = within_slack(report.lhs, report.rhs, tol);
    return report;
}

PlancherelPolyaReport plancherel_polya(const Graph& g, const SubsetGeometry& geometry,
                                       Bandwidth omega, const Signal& f,
                                       const SpectralBasis& basis, double tol) {
    detail::check_basis_signal(basis, f, "plancherel_polya");
    detail::check_signal(g, f, "plancherel_polya");
    if (!is_pw(basis, f, omega)) {
        raise(ErrorCode::NotBandlimited,
              "signal has spectral content above the stated bandwidth");
    }
    auto exhaustion = geometry.exhaustion_level();
    if (!exhaustion) {
        raise(ErrorCode::ClosureNotFull,
              "sample-norm equivalence needs the closure to reach every vertex");
    }
    int n = *exhaustion;

    double a_n = std::sqrt(to_double(squared_sample_constant(geometry, n)));
    double sum_n = to_double(smoothness_sum(geometry, n));
    double gamma = 2.0 * std::sqrt(omega.value() * sum_n);
    if (gamma >= 1.0) {
        std::ostringstream msg;
        msg << "contraction factor " << gamma << " is not below 1; the bandwidth must stay below "
            << (sum_n > 0.0 ? 0.25 / sum_n : std::numeric_limits<double>::infinity());
        raise(ErrorCode::BandwidthTooLarge, msg.str());
    }

    PlancherelPolyaReport report;
    report.omega = omega.value();
    report.gamma = gamma;
    report.level = n;
    report.sample_coefficient = a_n;
    report.lower = restriction_norm(f, geometry.set());
    report.norm = f.norm();
    report.upper = a_n / (1.0 - gamma) * report.lower;
    report.holds = within_slack(report.lower, report.norm, tol) &&
                   within_slack(report.norm, report.upper, tol);
    return report;
}

double max_certified_bandwidth(const SubsetGeometry& geometry) {
    auto exhaustion = geometry.exhaustion_level();
    if (!exhaustion || *exhaustion > 1) {
        raise(ErrorCode::ClosureNotFull,
              "set plus its boundary must cover every vertex for a one-level certificate");
    }
    if (*exhaustion == 0) {
        // No vertex is missing, so no bandwidth constraint applies.
        return std::numeric_limits<double>::infinity();
    }
    return 0.25 * geometry.min_boundary_connectivity(0);
}

} // namespace gpw
