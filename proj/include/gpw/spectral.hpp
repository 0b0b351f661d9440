#ifndef GPW_SPECTRAL_HPP
#define GPW_SPECTRAL_HPP

#include <vector>

#include <Eigen/Core>

#include "gpw/graph.hpp"

namespace gpw {

/// Cutoff comparisons "lambda <= omega" are made with this absolute slack so
/// that an eigenvalue sitting exactly on the cutoff (up to roundoff) counts as
/// inside the band.
inline constexpr double pw_cutoff_tol = 1e-12;

/// Library-wide default for "is this quantity zero / does this bound hold"
/// checks: absolute, callers scale it by (1 + norm of the data involved).
inline constexpr double default_check_tol = 1e-10;

/// A nonnegative spectral cutoff.  Wrapping the double keeps bandwidths from
/// being confused with times, tolerances and exponents in call sites that
/// take several doubles.
class Bandwidth {
public:
    explicit Bandwidth(double value) : value_(value) {
        if (!(value >= 0.0))
            raise(ErrorCode::InvalidArgument, "bandwidth must be a nonnegative number");
    }
    double value() const noexcept { return value_; }

private:
    double value_;
};

struct EigenOptions {
    /// Hard cap on the dense eigensolver; graphs above it throw TooLarge.
    Eigen::Index max_dense = 5000;
    /// Adjacent eigenvalues closer than cluster_tol * max(1, lambda_max) are
    /// treated as one eigenspace when canonicalizing eigenvectors.
    double cluster_tol = 1e-10;
};

/// Full orthonormal eigensystem of the combinatorial Laplacian, eigenvalues
/// ascending.  Eigenvectors are canonicalized (see eigendecompose) so that
/// repeated runs and different backends produce the same matrix up to
/// roundoff, which keeps every downstream report reproducible.
class SpectralBasis {
public:
    SpectralBasis(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors);

    Eigen::Index vertex_count() const noexcept { return eigenvectors_.rows(); }
    const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
    const Eigen::MatrixXd& eigenvectors() const noexcept { return eigenvectors_; }
    double lambda_max() const noexcept { return eigenvalues_[eigenvalues_.size() - 1]; }

    /// dim PW_omega = number of eigenvalues <= omega + pw_cutoff_tol.
    Eigen::Index pw_dimension(Bandwidth omega) const;

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

/// Dense symmetric eigendecomposition of the Laplacian of g.
///
/// The raw solver output is post-processed into a canonical basis: within
/// each cluster of (numerically) equal eigenvalues the eigenvectors are
/// replaced by the Gram-Schmidt sequence of the coordinate vectors projected
/// onto the eigenspace, taken in vertex order; simple eigenvectors get their
/// sign fixed by the largest-magnitude entry.  The result depends only on the
/// eigenspaces, not on solver internals.
SpectralBasis eigendecompose(const Graph& g, const EigenOptions& options = {});

/// Fourier coefficients a_j = <f, phi_j>.
Eigen::VectorXcd forward(const SpectralBasis& basis, const Signal& f);

/// Synthesis f = sum_j a_j phi_j.
Signal inverse(const SpectralBasis& basis, const Eigen::VectorXcd& coefficients);

/// Orthogonal projection onto PW_omega (coefficients above the cutoff are
/// dropped).
Signal pw_project(const SpectralBasis& basis, const Signal& f, Bandwidth omega);

/// Whether f is within tol * (1 + |f|) of its PW_omega projection.
bool is_pw(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
           double tol = default_check_tol);

/// L^s f for real s >= 0, including fractional powers (negative eigenvalue
/// roundoff is clamped to zero before the power is taken).  s < 0 throws
/// InvalidPower.
Signal apply_power(const SpectralBasis& basis, const Signal& f, double s);

/// One row per exponent k = 1..k_max of the bandlimited growth check
/// |L^k f| <= omega^k |f|.
struct BernsteinReport {
    double omega = 0.0;
    double signal_norm = 0.0;
    std::vector<double> norms;   // |L^k f|
    std::vector<double> bounds;  // omega^k |f|
    std::vector<bool> holds;     // per k, with tol * (1 + bound) slack
    bool all_hold = false;
};

/// Requires f in PW_omega (NotBandlimited otherwise).
BernsteinReport bernstein_check(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
                                int k_max, double tol = default_check_tol);

/// Distance to PW_omega against the spectral smoothness bound
/// omega^{-s} |L^s f| (infinite when omega == 0 and the signal has energy
/// above the cutoff).
struct BestApproxReport {
    double omega = 0.0;
    double s = 0.0;
    double error = 0.0;  // |f - P_omega f|
    double bound = 0.0;  // omega^{-s} |L^s f|
    bool holds = false;
};

BestApproxReport best_approx_error(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
                                   double s, double tol = default_check_tol);

namespace detail {
void check_coefficients(const SpectralBasis& basis, Eigen::Index size, const char* where);
void check_basis_signal(const SpectralBasis& basis, const Signal& f, const char* where);
} // namespace detail

} // namespace gpw

#endif // GPW_SPECTRAL_HPP
