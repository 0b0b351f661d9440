#ifndef GPW_FILTERING_HPP
#define GPW_FILTERING_HPP

#include "gpw/sampling.hpp"
#include "gpw/spectral.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace gpw {

/// Unitary time evolution e^{itL} f, applied spectrally.
Signal schrodinger(const SpectralBasis& basis, const Signal& f, double t);

/// m-th order difference (e^{isL} - I)^m f.
Signal difference(const SpectralBasis& basis, const Signal& f, double s, int m);

/// Modulus of smoothness: sup over tau in [0, s] of |(e^{i tau L} - I)^m f|.
/// Evaluated on a 512-interval grid followed by golden-section refinement
/// around the best grid point.  For m = 0 this is just |f|.
double modulus(const SpectralBasis& basis, const Signal& f, double s, int m);

/// Averaging kernel h(t) = a (sin(t/n) / t)^n for even n >= 4, normalized so
/// that the kernel integrates to 1.  The normalizer, the cosine transform
/// int h(t) cos(xi t) dt, and the absolute moments int h(t) |t|^p dt are all
/// produced by adaptive quadrature (the transform's truncation tail is below
/// 1e-11, the moments carry an explicit tail correction).  Transform and
/// moment values are memoized; the cache is the only mutable state and is
/// guarded by a mutex, so a kernel can be shared across threads.
class FilterKernel {
public:
    /// Throws OddOrder for odd n and OrderTooSmall for n < 4 (the integrals
    /// defining the normalizer diverge there).
    explicit FilterKernel(int order);

    int order() const { return order_; }
    double normalizer() const { return normalizer_; }

    /// hat h (xi) = int h(t) cos(xi t) dt; even in xi, equals 1 at 0 up to
    /// quadrature error, and decays below 1e-8 outside [-1, 1].
    double transform(double xi) const;

    /// int h(t) |t|^p dt; finite only for p <= order - 2 (OrderMismatch).
    double absolute_moment(int p) const;

    /// Sampled transform on [0, max_xi], for reports and serialization.
    std::vector<std::pair<double, double>> transform_table(double max_xi = 1.2,
                                                           int points = 121) const;

private:
    int order_ = 0;
    double normalizer_ = 0.0;
    double transform_cut_ = 0.0; // truncation point for the transform integral
    mutable std::mutex cache_mutex_;
    mutable std::map<double, double> transform_cache_;
    mutable std::map<int, double> moment_cache_;

    double transform_uncached(double xi) const;
    double moment_uncached(int p) const;
};

/// Spectral multiplier of the smoothing filter: hat h (lambda / omega).
double q_multiplier(const FilterKernel& kernel, double omega, double lambda);

/// Spectral multiplier of the reproducing filter,
///   1 - sum_{j=0}^m (-1)^j C(m,j) hat h (j lambda / omega),
/// i.e. 1 - int h(t) (1 - e^{i t lambda / omega})^m dt.  Exactly 1 at
/// lambda = 0 (the alternating binomial sum cancels the quadrature error)
/// and below 1e-8 for lambda well above omega.
double p_multiplier(const FilterKernel& kernel, int m, double omega, double lambda);

/// Smoothing filter Q f: coefficients scaled by hat h (lambda_j / omega).
Signal filter_q(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
                const FilterKernel& kernel);

/// Reproducing filter P f of order m; requires kernel order >= m + 2
/// (OrderMismatch) so the error constants below stay finite.
Signal filter_p(const SpectralBasis& basis, const Signal& f, Bandwidth omega, int m,
                const FilterKernel& kernel);

/// Smallest even kernel order that supports a reproducing filter of order m.
int default_kernel_order(int m);

/// Error constant C_{m,k} = int h(t) |t|^k (1 + |t|)^(m-k) dt, expanded into
/// absolute moments.  Requires k in [0, m] and kernel order >= m + 2.
double c_hmk(const FilterKernel& kernel, int m, int k);

/// Chain   best_error <= filter_error <= (C_{m,k} / omega^k) *
/// modulus_{m-k}(L^k f, 1/omega)   evaluated on a concrete signal.
struct ApproxReport {
    double omega = 0.0;
    int m = 0;
    int k = 0;
    double best_error = 0.0;    // distance from f to the bandlimited subspace
    double filter_error = 0.0;  // |f - P f|
    double constant = 0.0;      // C_{m,k}
    double modulus_value = 0.0; // modulus_{m-k}(L^k f, 1/omega)
    double bound = 0.0;
    bool holds = false;
};

ApproxReport direct_approx_report(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
                                  int m, int k, const FilterKernel& kernel, double tol = 1e-8);

/// Bandlimited surrogate built from filtered samples: P f is sampled on the
/// frame's vertex set and re-expanded through the interpolation frame.  The
/// projection route (sampling the exact bandlimited projection instead)
/// cannot do worse than the filter route, and the filter route obeys the
/// direct bound; chain_holds verifies both links.
struct SparseApproxResult {
    Signal approximation;
    ApproxReport report;
    double projection_error = 0.0; // |f - reconstruct(samples of P_omega f)|
    double filter_error = 0.0;     // |f - reconstruct(samples of P f)|
    bool chain_holds = false;
};

SparseApproxResult sparse_approx(const SpectralBasis& basis, const Signal& f,
                                 const DualFrame& frame, int m, int k,
                                 const FilterKernel& kernel, double tol = 1e-8);

} // namespace gpw

#endif // GPW_FILTERING_HPP
