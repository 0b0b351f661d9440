#include "gpw/random.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gpw {
namespace {

// Box-Muller on explicit 53-bit uniforms rather than std::normal_distribution,
// whose output is implementation-defined; this keeps seeds portable.
Complex gaussian(std::mt19937_64& rng) {
    double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53; // in (0, 1]
    double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;        // in [0, 1)
    double r = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
}

} // namespace

Signal random_signal(Eigen::Index size, std::uint64_t seed) {
    if (size < 1) {
        raise(ErrorCode::InvalidArgument, "signal size must be positive");
    }
    std::mt19937_64 rng(seed);
    Signal f(size);
    for (Eigen::Index i = 0; i < size; ++i) {
        f[i] = gaussian(rng);
    }
    return f;
}

Signal random_bandlimited_signal(const SpectralBasis& basis, Bandwidth omega,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Eigen::Index p = basis.pw_dimension(omega);
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(basis.eigenvalues().size());
    for (Eigen::Index j = 0; j < p; ++j) {
        coeffs[j] = gaussian(rng);
    }
    return inverse(basis, coeffs);
}

} // namespace gpw
