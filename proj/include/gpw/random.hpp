#ifndef GPW_RANDOM_HPP
#define GPW_RANDOM_HPP

#include "gpw/graph.hpp"
#include "gpw/spectral.hpp"

#include <cstdint>

namespace gpw {

/// Deterministic complex Gaussian signal: both components of every entry are
/// independent standard normals drawn from a seeded 64-bit Mersenne twister
/// through a fixed Box-Muller transform, so a seed pins the exact bytes.
Signal random_signal(Eigen::Index size, std::uint64_t seed);

/// Bandlimited counterpart: Gaussian coefficients on the eigenvalues up to
/// omega, synthesized through the basis.
Signal random_bandlimited_signal(const SpectralBasis& basis, Bandwidth omega,
                                 std::uint64_t seed);

} // namespace gpw

#endif // GPW_RANDOM_HPP
