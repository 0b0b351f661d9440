#ifndef GPW_QUADRATURE_HPP
#define GPW_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace gpw::quad {

namespace detail {

// Gauss-Kronrod 15/7 abscissae (positive half) and weights on [-1, 1].
inline constexpr double gk_nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double gk_weights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278};
// Embedded 7-point Gauss weights, attached to gk_nodes[1], [3], [5], [7].
inline constexpr double g7_weights[4] = {0.1294849661688697, 0.2797053914892767,
                                         0.3818300505051189, 0.4179591836734694};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

template <class F>
Panel evaluate_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(mid);
        } else {
            fsum = f(mid - half * gk_nodes[i]) + f(mid + half * gk_nodes[i]);
        }
        kronrod += gk_weights[i] * fsum;
        if (i % 2 == 1) {
            gauss += g7_weights[i / 2] * fsum;
        } else if (i == 7) {
            gauss += g7_weights[3] * fsum;
        }
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = half * kronrod;
    p.error = half * std::abs(kronrod - gauss);
    return p;
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
///
/// The interval is pre-split into panels no longer than max_panel_length (so
/// that an oscillatory integrand is sampled densely enough for the error
/// estimate to be trustworthy), then panels are bisected until the summed
/// error estimate drops below max(rel_tol * |integral|, abs_floor).  A hard
/// cap on the panel count keeps pathological integrands from spinning; the
/// best available value is returned in that case.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol, double abs_floor,
                 double max_panel_length) {
    if (!(b > a)) {
        return 0.0;
    }
    const double length = b - a;
    std::size_t initial = static_cast<std::size_t>(std::ceil(length / max_panel_length));
    if (initial < 1) {
        initial = 1;
    }

    std::vector<detail::Panel> panels;
    panels.reserve(initial + 64);
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i < initial; ++i) {
        double lo = a + length * static_cast<double>(i) / static_cast<double>(initial);
        double hi = (i + 1 == initial)
                        ? b
                        : a + length * static_cast<double>(i + 1) / static_cast<double>(initial);
        panels.push_back(detail::evaluate_panel(f, lo, hi));
        total += panels.back().value;
        total_error += panels.back().error;
    }

    const std::size_t max_panels = 400000;
    const double min_width = 1e-13 * (1.0 + std::abs(a) + std::abs(b));
    while (panels.size() < max_panels) {
        double threshold = std::max(rel_tol * std::abs(total), abs_floor);
        if (total_error <= threshold) {
            break;
        }
        // Split the panel with the largest error estimate.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i) {
            if (panels[i].error > panels[worst].error) {
                worst = i;
            }
        }
        detail::Panel old = panels[worst];
        if (old.b - old.a <= min_width || old.error <= 0.0) {
            break; // cannot meaningfully refine further
        }
        double mid = 0.5 * (old.a + old.b);
        detail::Panel left = detail::evaluate_panel(f, old.a, mid);
        detail::Panel right = detail::evaluate_panel(f, mid, old.b);
        total += left.value + right.value - old.value;
        total_error += left.error + right.error - old.error;
        panels[worst] = left;
        panels.push_back(right);
    }
    return total;
}

/// Tail integral int_T^inf cos(beta t) t^(-q) dt for beta > 0, q >= 2, by
/// repeated integration by parts.  Each round trades two powers of t for a
/// factor q(q+1)/(beta T)^2, so a handful of rounds reaches machine precision
/// whenever beta * T is large (callers keep it above a few hundred).
inline double cosine_tail(double beta, int q, double T) {
    // int_T^inf cos(bt) t^(-q) = -sin(bT) T^(-q)/b + (q/b^2) cos(bT) T^(-q-1)
    //                            - q(q+1)/b^2 * int_T^inf cos(bt) t^(-q-2),
    // applied repeatedly; the recursion factor alternates the sign.
    double scale = 1.0;
    double result = 0.0;
    for (int round = 0; round < 12; ++round) {
        result += scale * (-std::sin(beta * T) * std::pow(T, -q) / beta +
                           static_cast<double>(q) / (beta * beta) * std::cos(beta * T) *
                               std::pow(T, -q - 1));
        double next_scale =
            -scale * static_cast<double>(q) * static_cast<double>(q + 1) / (beta * beta);
        // Remainder is next_scale * int_T^inf cos(bt) t^(-q-2), bounded crudely
        // by |next_scale| * T^(-q-1)/(q+1).
        if (std::abs(next_scale) * std::pow(T, -q - 1) / (q + 1) <
            1e-25 * (std::abs(result) + 1e-300)) {
            return result;
        }
        scale = next_scale;
        q += 2;
    }
    return result;
}

/// Tail integral int_T^inf t^(-q) dt, q >= 2.
inline double power_tail(int q, double T) {
    return std::pow(T, 1 - q) / static_cast<double>(q - 1);
}

} // namespace gpw::quad

#endif // GPW_QUADRATURE_HPP
