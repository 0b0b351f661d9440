#include "gpw/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gpw {

SpectralBasis::SpectralBasis(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
    if (eigenvalues_.size() == 0 || eigenvalues_.size() != eigenvectors_.cols() ||
        eigenvectors_.rows() != eigenvectors_.cols())
        raise(ErrorCode::InvalidArgument, "spectral basis must be square and complete");
}

Eigen::Index SpectralBasis::pw_dimension(Bandwidth omega) const {
    const double cut = omega.value() + pw_cutoff_tol;
    Eigen::Index count = 0;
    while (count < eigenvalues_.size() && eigenvalues_[count] <= cut) ++count;
    return count;
}

namespace {

// Replaces the columns of `block` (an orthonormal basis of one eigenspace) by
// the canonical basis: Gram-Schmidt over the projections of the coordinate
// vectors e_0, e_1, ... onto the eigenspace, keeping a candidate only when
// enough of it survives.  The accepted candidate for column q has positive
// entry at its defining vertex, so no separate sign pass is needed.
void canonicalize_cluster(Eigen::Ref<Eigen::MatrixXd> block) {
    const Eigen::Index n = block.rows();
    const Eigen::Index c = block.cols();
    // A projected coordinate vector of squared norm below (accept_tol)^2 is
    // skipped; trace(P) = c guarantees a candidate of squared norm >= c/n is
    // always available, so the loop below cannot stall.
    const double accept_tol = 0.5 / std::sqrt(static_cast<double>(n));

    Eigen::MatrixXd accepted(n, c);
    Eigen::Index found = 0;
    for (Eigen::Index v = 0; v < n && found < c; ++v) {
        // P e_v where P = block * block^T.
        Eigen::VectorXd r = block * block.row(v).transpose();
        // Orthogonalize against already accepted columns (twice, for
        // numerical hygiene).
        for (int pass = 0; pass < 2; ++pass)
            if (found > 0)
                r -= accepted.leftCols(found) * (accepted.leftCols(found).transpose() * r);
        const double len = r.norm();
        if (len > accept_tol) accepted.col(found++) = r / len;
    }
    if (found == c) block = accepted;
    // found < c would mean the acceptance bound failed, which cannot happen
    // for an orthonormal block; leave the solver's basis in place if it ever
    // does rather than produce a rank-deficient one.
}

void canonicalize(const Eigen::VectorXd& eigenvalues, Eigen::MatrixXd& vectors,
                  double cluster_tol) {
    const Eigen::Index n = eigenvalues.size();
    const double scale = std::max(1.0, std::abs(eigenvalues[n - 1]));
    const double gap_tol = cluster_tol * scale;

    Eigen::Index lo = 0;
    while (lo < n) {
        Eigen::Index hi = lo;
        while (hi + 1 < n && eigenvalues[hi + 1] - eigenvalues[hi] <= gap_tol) ++hi;
        const Eigen::Index width = hi - lo + 1;
        if (width == 1) {
            // Simple eigenvalue: fix the sign by the largest-magnitude entry
            // (first one on ties).
            Eigen::Index at = 0;
            vectors.col(lo).cwiseAbs().maxCoeff(&at);
            if (vectors(at, lo) < 0.0) vectors.col(lo) = -vectors.col(lo);
        } else {
            canonicalize_cluster(vectors.middleCols(lo, width));
        }
        lo = hi + 1;
    }
}

} // namespace

SpectralBasis eigendecompose(const Graph& g, const EigenOptions& options) {
    const Eigen::Index n = g.vertex_count();
    if (n > options.max_dense)
        raise(ErrorCode::TooLarge,
              "graph has " + std::to_string(n) + " vertices, dense eigensolver cap is " +
                  std::to_string(options.max_dense));

    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index v = 0; v < n; ++v)
        laplacian(v, v) = static_cast<double>(g.degree(static_cast<int>(v)));
    for (auto [u, v] : g.edges()) {
        laplacian(u, v) = -1.0;
        laplacian(v, u) = -1.0;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
    if (solver.info() != Eigen::Success)
        raise(ErrorCode::TooLarge, "dense eigensolver failed to converge");

    Eigen::VectorXd values = solver.eigenvalues();
    Eigen::MatrixXd vectors = solver.eigenvectors();
    canonicalize(values, vectors, options.cluster_tol);
    return SpectralBasis(std::move(values), std::move(vectors));
}

namespace detail {

void check_coefficients(const SpectralBasis& basis, Eigen::Index size, const char* where) {
    if (size != basis.vertex_count())
        raise(ErrorCode::BasisMismatch,
              std::string(where) + ": expected " + std::to_string(basis.vertex_count()) +
                  " coefficients, got " + std::to_string(size));
}

void check_basis_signal(const SpectralBasis& basis, const Signal& f, const char* where) {
    if (f.size() != basis.vertex_count())
        raise(ErrorCode::BasisMismatch,
              std::string(where) + ": signal has " + std::to_string(f.size()) +
                  " entries, basis has " + std::to_string(basis.vertex_count()));
}

} // namespace detail

Eigen::VectorXcd forward(const SpectralBasis& basis, const Signal& f) {
    detail::check_basis_signal(basis, f, "forward");
    return basis.eigenvectors().transpose() * f;
}

Signal inverse(const SpectralBasis& basis, const Eigen::VectorXcd& coefficients) {
    detail::check_coefficients(basis, coefficients.size(), "inverse");
    return basis.eigenvectors() * coefficients;
}

Signal pw_project(const SpectralBasis& basis, const Signal& f, Bandwidth omega) {
    detail::check_basis_signal(basis, f, "pw_project");
    const Eigen::Index p = basis.pw_dimension(omega);
    if (p == 0) return Signal::Zero(f.size());
    auto head = basis.eigenvectors().leftCols(p);
    return head * (head.transpose() * f);
}

bool is_pw(const SpectralBasis& basis, const Signal& f, Bandwidth omega, double tol) {
    // Relative criterion: the energy above the cutoff must be negligible
    // against the signal itself.
    const Signal residual = f - pw_project(basis, f, omega);
    return residual.norm() <= tol * f.norm();
}

Signal apply_power(const SpectralBasis& basis, const Signal& f, double s) {
    detail::check_basis_signal(basis, f, "apply_power");
    if (!(s >= 0.0))
        raise(ErrorCode::InvalidPower, "Laplacian power must be a nonnegative real");
    Eigen::VectorXcd a = forward(basis, f);
    const bool integral = s == std::floor(s);
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        // Tiny negative eigenvalues are eigensolver roundoff; clamp before a
        // fractional power turns them into NaN.
        double lambda = basis.eigenvalues()[j];
        if (!integral && lambda < 0.0) lambda = 0.0;
        a[j] *= std::pow(lambda, s);
    }
    return inverse(basis, a);
}

BernsteinReport bernstein_check(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
                                int k_max, double tol) {
    detail::check_basis_signal(basis, f, "bernstein_check");
    if (k_max < 1) raise(ErrorCode::InvalidArgument, "bernstein_check needs k_max >= 1");
    if (!is_pw(basis, f, omega, tol))
        raise(ErrorCode::NotBandlimited, "signal is not within tolerance of PW_" +
                                             std::to_string(omega.value()));

    BernsteinReport report;
    report.omega = omega.value();
    report.signal_norm = f.norm();
    const Eigen::VectorXcd a = forward(basis, f);

    bool all = true;
    for (int k = 1; k <= k_max; ++k) {
        double sq = 0.0;
        for (Eigen::Index j = 0; j < a.size(); ++j)
            sq += std::norm(a[j]) * std::pow(basis.eigenvalues()[j], 2 * k);
        const double lhs = std::sqrt(sq);
        const double rhs = std::pow(omega.value(), k) * report.signal_norm;
        const bool ok = lhs <= rhs + tol * (1.0 + rhs);
        report.norms.push_back(lhs);
        report.bounds.push_back(rhs);
        report.holds.push_back(ok);
        all = all && ok;
    }
    report.all_hold = all;
    return report;
}

BestApproxReport best_approx_error(const SpectralBasis& basis, const Signal& f, Bandwidth omega,
                                   double s, double tol) {
    detail::check_basis_signal(basis, f, "best_approx_error");
    if (!(s >= 0.0))
        raise(ErrorCode::InvalidPower, "smoothness exponent must be a nonnegative real");

    const Eigen::VectorXcd a = forward(basis, f);
    const double cut = omega.value() + pw_cutoff_tol;
    double tail_sq = 0.0;
    double smooth_sq = 0.0;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        const double lambda = std::max(basis.eigenvalues()[j], 0.0);
        if (basis.eigenvalues()[j] > cut) tail_sq += std::norm(a[j]);
        smooth_sq += std::norm(a[j]) * std::pow(lambda, 2 * s);
    }

    BestApproxReport report;
    report.omega = omega.value();
    report.s = s;
    report.error = std::sqrt(tail_sq);
    if (omega.value() > 0.0)
        report.bound = std::pow(omega.value(), -s) * std::sqrt(smooth_sq);
    else
        report.bound = s == 0.0 ? std::sqrt(smooth_sq)
                                : (tail_sq > 0.0 ? std::numeric_limits<double>::infinity()
                                                 : std::sqrt(smooth_sq));
    report.holds = report.error <= report.bound + tol * (1.0 + report.bound);
    return report;
}

} // namespace gpw
