#ifndef GPW_SAMPLING_HPP
#define GPW_SAMPLING_HPP

#include "gpw/graph.hpp"
#include "gpw/spectral.hpp"
#include "gpw/subset.hpp"

#include <map>
#include <vector>

namespace gpw {

/// Relative singular-value cutoff used when deciding numerical rank.
inline constexpr double default_rank_tol = 1e-10;

enum class CertificateStatus {
    /// cl(S) = V and omega < K_0(S)/4: recovery is guaranteed a priori.
    TheoremCertified,
    /// The a-priori conditions fail but the sampling operator has full
    /// numerical rank on the bandlimited subspace, so recovery still works.
    NumericallyCertified,
    NotCertified,
};

const char* certificate_status_name(CertificateStatus status);

/// Answers whether samples on a vertex set determine every signal of the
/// given bandwidth, with both the structural test and the measured frame
/// bounds A |f|^2 <= sum_S |f(u)|^2 <= B |f|^2.
struct SamplingCertificate {
    std::vector<int> set;  // sorted
    double omega = 0.0;
    Eigen::Index pw_dimension = 0;
    /// Minimum over removed vertices of their edge count into the set; -1
    /// when the set is the whole vertex space and no constraint applies.
    int boundary_connectivity = -1;
    bool condition_closure = false;    // cl(S) = V
    bool condition_bandwidth = false;  // omega < K_0(S)/4
    double frame_lower = 0.0;          // A: squared smallest singular value
    double frame_upper = 0.0;          // B: squared largest singular value
    CertificateStatus status = CertificateStatus::NotCertified;
};

/// The geometry must carry level-1 data unless the set is the whole vertex
/// space (exhaustion level 0).
SamplingCertificate certify(const SubsetGeometry& geometry, Bandwidth omega,
                            const SpectralBasis& basis, double rank_tol = default_rank_tol);

/// Interpolation frame: column j of theta is the signal Theta_u for the j-th
/// set vertex u, and any f in PW_omega satisfies f = sum_u f(u) Theta_u.
struct DualFrame {
    std::vector<int> set;
    double omega = 0.0;
    Eigen::Index pw_dimension = 0;
    Eigen::MatrixXd theta;  // vertex_count x |set|
    SamplingCertificate certificate;
};

/// Builds the frame by pseudo-inverting the sampling operator restricted to
/// the bandlimited subspace.  Throws NotUniquenessSet when that operator is
/// rank deficient (certificate frame_lower at or below the cutoff).
DualFrame dual_frame(const SamplingCertificate& certificate, const SpectralBasis& basis,
                     double rank_tol = default_rank_tol);

/// Recovers a bandlimited signal from samples keyed by vertex.  The keys
/// must be exactly the frame's vertex set (SampleSetMismatch otherwise).
Signal reconstruct(const DualFrame& frame, const std::map<int, Complex>& samples);

/// Same, with values listed in sorted-set order.
Signal reconstruct(const DualFrame& frame, const Eigen::VectorXcd& sample_values);

/// Restriction of a signal to a sorted vertex list, in list order.
Eigen::VectorXcd restrict_to(const Signal& f, const std::vector<int>& vertices);

} // namespace gpw

#endif // GPW_SAMPLING_HPP
