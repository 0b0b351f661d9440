#ifndef GPW_LATTICE_HPP
#define GPW_LATTICE_HPP

#include "gpw/filtering.hpp"
#include "gpw/graph.hpp"
#include "gpw/spectral.hpp"

#include <string>
#include <vector>

namespace gpw {

/// d-dimensional discrete torus (circulant product graph).  Sites are stored
/// row-major with the last axis fastest; the Laplacian diagonalizes in the
/// multidimensional DFT basis with symbol
///   sigma(k) = 4 sum_j sin^2(pi k_j / N_j),
/// so spectral operations reduce to per-axis FFTs.  Every axis length must
/// be at least 3 (DimensionTooSmall): length 2 would create double edges.
class Torus {
public:
    explicit Torus(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int dimension_count() const { return static_cast<int>(dims_.size()); }
    Eigen::Index site_count() const { return total_; }

    Eigen::Index flat_index(const std::vector<int>& coords) const;
    std::vector<int> coordinates(Eigen::Index flat) const;

    /// Laplacian eigenvalue attached to the frequency vector k.
    double symbol(const std::vector<int>& freq) const;
    /// All symbol values, indexed like the DFT output.
    const Eigen::VectorXd& symbol_grid() const { return symbols_; }

    /// The same torus as an explicit graph (2d-regular).
    Graph graph() const;

    /// Unnormalized forward DFT along every axis; idft undoes it exactly.
    Eigen::VectorXcd dft(const Signal& f) const;
    Signal idft(const Eigen::VectorXcd& coeffs) const;

private:
    std::vector<int> dims_;
    Eigen::Index total_ = 0;
    Eigen::VectorXd symbols_;

    void check_size(const Signal& f) const;
};

/// Bandlimited projection in the DFT basis.  Agrees with the dense spectral
/// route to working precision; this path never replaces it, it only makes
/// large tori affordable.
Signal fft_pw_project(const Torus& torus, const Signal& f, Bandwidth omega);

/// Reproducing filter of order m in the DFT basis (same multiplier as the
/// dense route, evaluated on the symbol grid).
Signal fft_filter(const Torus& torus, const Signal& f, Bandwidth omega, int m,
                  const FilterKernel& kernel);

/// Time evolution e^{itL} in the DFT basis.
Signal fft_schrodinger(const Torus& torus, const Signal& f, double t);

/// Known-good sampling patterns on tori, named for which sites they keep.
enum class DownsamplePattern {
    /// Drop the sites whose coordinates are all even (needs every axis even);
    /// removed sites keep 2d neighbors in the set.
    CheckerComplement,
    /// Keep sites whose last coordinate is even (needs an even last axis);
    /// removed sites keep 2 neighbors in the set.
    AlternateRows,
    /// Keep sites whose last coordinate is divisible by 3 (needs the last
    /// axis divisible by 3); removed sites keep 1 neighbor in the set.
    ThirdRows,
};

DownsamplePattern parse_pattern(const std::string& name);
const char* pattern_name(DownsamplePattern pattern);

/// Sorted flat indices of the kept sites.  Throws PatternMismatch when the
/// torus dimensions do not satisfy the pattern's divisibility requirement.
std::vector<int> downsample_set(const Torus& torus, DownsamplePattern pattern);

} // namespace gpw

#endif // GPW_LATTICE_HPP
