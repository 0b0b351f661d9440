#include "gpw/sampling.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace gpw {
namespace {

// Rows of the bandlimited basis at the sample vertices: the matrix that maps
// spectral coefficients to sample values.
Eigen::MatrixXd sampling_operator(const std::vector<int>& set, const SpectralBasis& basis,
                                  Eigen::Index p) {
    Eigen::MatrixXd op(static_cast<Eigen::Index>(set.size()), p);
    for (Eigen::Index j = 0; j < op.rows(); ++j) {
        op.row(j) = basis.eigenvectors().row(set[static_cast<std::size_t>(j)]).head(p);
    }
    return op;
}

Signal real_times_complex(const Eigen::MatrixXd& m, const Eigen::VectorXcd& v) {
    Eigen::VectorXd re = m * v.real();
    Eigen::VectorXd im = m * v.imag();
    Signal out(m.rows());
    out.real() = re;
    out.imag() = im;
    return out;
}

} // namespace

const char* certificate_status_name(CertificateStatus status) {
    switch (status) {
    case CertificateStatus::TheoremCertified:
        return "theorem-certified";
    case CertificateStatus::NumericallyCertified:
        return "numerically-certified";
    case CertificateStatus::NotCertified:
        return "not-certified";
    }
    return "unknown";
}

SamplingCertificate certify(const SubsetGeometry& geometry, Bandwidth omega,
                            const SpectralBasis& basis, double rank_tol) {
    SamplingCertificate cert;
    cert.set = geometry.set();
    cert.omega = omega.value();
    if (!cert.set.empty() && cert.set.back() >= basis.eigenvectors().rows()) {
        raise(ErrorCode::GraphMismatch, "sample set indexes a vertex outside the spectral basis");
    }
    cert.pw_dimension = basis.pw_dimension(omega);

    auto exhaustion = geometry.exhaustion_level();
    bool whole_space = exhaustion && *exhaustion == 0;
    if (whole_space) {
        cert.boundary_connectivity = -1;
        cert.condition_closure = true;
        cert.condition_bandwidth = true; // nothing is missing, no constraint
    } else {
        cert.boundary_connectivity = geometry.min_boundary_connectivity(0);
        cert.condition_closure = exhaustion && *exhaustion <= 1;
        cert.condition_bandwidth = omega.value() < 0.25 * cert.boundary_connectivity;
    }

    Eigen::MatrixXd op = sampling_operator(cert.set, basis, cert.pw_dimension);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(op);
    const auto& sv = svd.singularValues();
    cert.frame_upper = sv.size() > 0 ? sv(0) * sv(0) : 0.0;
    if (op.rows() >= cert.pw_dimension && sv.size() >= cert.pw_dimension) {
        double smallest = sv(cert.pw_dimension - 1);
        cert.frame_lower = smallest * smallest;
    } else {
        cert.frame_lower = 0.0; // fewer samples than bandlimited dimensions
    }

    if (cert.condition_closure && cert.condition_bandwidth) {
        cert.status = CertificateStatus::TheoremCertified;
    } else if (cert.frame_lower > rank_tol * rank_tol * cert.frame_upper &&
               cert.frame_lower > 0.0) {
        cert.status = CertificateStatus::NumericallyCertified;
    } else {
        cert.status = CertificateStatus::NotCertified;
    }
    return cert;
}

DualFrame dual_frame(const SamplingCertificate& certificate, const SpectralBasis& basis,
                     double rank_tol) {
    const Eigen::Index p = certificate.pw_dimension;
    Eigen::MatrixXd op = sampling_operator(certificate.set, basis, p);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(op, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double cutoff = sv.size() > 0 ? rank_tol * sv(0) : 0.0;

    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff && sv(i) > 0.0) {
            ++rank;
        }
    }
    if (rank < p) {
        std::ostringstream msg;
        msg << "samples on " << certificate.set.size()
            << " vertices span only " << rank << " of " << p
            << " bandlimited dimensions";
        raise(ErrorCode::NotUniquenessSet, msg.str());
    }

    Eigen::VectorXd inv = sv.head(p).cwiseInverse();
    Eigen::MatrixXd pinv =
        svd.matrixV().leftCols(p) * inv.asDiagonal() * svd.matrixU().leftCols(p).transpose();

    DualFrame frame;
    frame.set = certificate.set;
    frame.omega = certificate.omega;
    frame.pw_dimension = p;
    frame.theta = basis.eigenvectors().leftCols(p) * pinv;
    frame.certificate = certificate;
    return frame;
}

Signal reconstruct(const DualFrame& frame, const std::map<int, Complex>& samples) {
    if (samples.size() != frame.set.size()) {
        std::ostringstream msg;
        msg << "got " << samples.size() << " samples for a set of " << frame.set.size()
            << " vertices";
        raise(ErrorCode::SampleSetMismatch, msg.str());
    }
    Eigen::VectorXcd values(static_cast<Eigen::Index>(frame.set.size()));
    Eigen::Index j = 0;
    auto it = samples.begin();
    for (int u : frame.set) {
        if (it->first != u) {
            std::ostringstream msg;
            msg << "sample keyed by vertex " << it->first << " does not belong to the set";
            raise(ErrorCode::SampleSetMismatch, msg.str());
        }
        values(j++) = it->second;
        ++it;
    }
    return real_times_complex(frame.theta, values);
}

Signal reconstruct(const DualFrame& frame, const Eigen::VectorXcd& sample_values) {
    if (sample_values.size() != static_cast<Eigen::Index>(frame.set.size())) {
        std::ostringstream msg;
        msg << "got " << sample_values.size() << " sample values for a set of "
            << frame.set.size() << " vertices";
        raise(ErrorCode::SampleSetMismatch, msg.str());
    }
    return real_times_complex(frame.theta, sample_values);
}

Eigen::VectorXcd restrict_to(const Signal& f, const std::vector<int>& vertices) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(vertices.size()));
    Eigen::Index j = 0;
    for (int v : vertices) {
        if (v < 0 || v >= f.size()) {
            raise(ErrorCode::InvalidVertex,
                  "vertex " + std::to_string(v) + " is outside the signal's index range");
        }
        out(j++) = f[v];
    }
    return out;
}

} // namespace gpw
