#include "doctest.h"

#include "gpw/graph.hpp"
#include "gpw/spectral.hpp"

#include "oracles.hpp"

using gpw::Bandwidth;
using gpw::Graph;
using gpw::Signal;
using gpw::SpectralBasis;

TEST_CASE("eigenvalues agree with an independent solver") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracles::random_connected_graph(5 + static_cast<int>(seed * 3), 40 + seed);
        SpectralBasis basis = gpw::eigendecompose(g);
        oracles::EigenSystem ref = oracles::jacobi_eigensystem(oracles::dense_laplacian(g));

        REQUIRE(basis.eigenvalues().size() == ref.values.size());
        const double scale = std::max(1.0, ref.values[ref.values.size() - 1]);
        for (Eigen::Index j = 0; j < ref.values.size(); ++j)
            CHECK(std::abs(basis.eigenvalues()[j] - ref.values[j]) <= 1e-9 * scale);
    }
}

TEST_CASE("basis is orthonormal and diagonalizes the laplacian") {
    Graph g = oracles::random_connected_graph(18, 77);
    SpectralBasis basis = gpw::eigendecompose(g);
    const Eigen::MatrixXd& phi = basis.eigenvectors();

    Eigen::MatrixXd gram = phi.transpose() * phi;
    CHECK((gram - Eigen::MatrixXd::Identity(18, 18)).norm() <= 1e-12);

    Eigen::MatrixXd L = oracles::dense_laplacian(g);
    Eigen::MatrixXd residual = L * phi - phi * basis.eigenvalues().asDiagonal();
    CHECK(residual.norm() <= 1e-10 * std::max(1.0, basis.lambda_max()));
}

TEST_CASE("spectrum endpoints") {
    Graph g = oracles::random_connected_graph(23, 5);
    SpectralBasis basis = gpw::eigendecompose(g);
    CHECK(std::abs(basis.eigenvalues()[0]) <= 1e-10);
    CHECK(basis.lambda_max() <= 2.0 * g.max_degree() + 1e-9);
    // The kernel of a connected Laplacian is spanned by the constants.
    Eigen::VectorXd ground = basis.eigenvectors().col(0);
    CHECK(std::abs(std::abs(ground.sum()) - std::sqrt(static_cast<double>(23))) <= 1e-9);
    CHECK(basis.eigenvalues()[1] > 1e-8);
}

TEST_CASE("repeated decompositions are identical") {
    // Complete graph: one simple eigenvalue and one high-multiplicity cluster,
    // the worst case for basis reproducibility.
    Graph g = gpw::complete_graph(6);
    SpectralBasis a = gpw::eigendecompose(g);
    SpectralBasis b = gpw::eigendecompose(g);
    CHECK((a.eigenvectors() - b.eigenvectors()).norm() == 0.0);
    CHECK((a.eigenvalues() - b.eigenvalues()).norm() == 0.0);

    Eigen::MatrixXd gram = a.eigenvectors().transpose() * a.eigenvectors();
    CHECK((gram - Eigen::MatrixXd::Identity(6, 6)).norm() <= 1e-12);
}

TEST_CASE("bandlimited dimension counting") {
    Graph g = gpw::cycle_graph(8); // eigenvalues 0, 0.586.., 2, 3.414.., 4
    SpectralBasis basis = gpw::eigendecompose(g);
    CHECK(basis.pw_dimension(Bandwidth(0.0)) == 1);
    CHECK(basis.pw_dimension(Bandwidth(1.0)) == 3);
    CHECK(basis.pw_dimension(Bandwidth(2.0)) == 5);  // cutoff on an eigenvalue: inclusive
    CHECK(basis.pw_dimension(Bandwidth(100.0)) == 8);
    CHECK(basis.pw_dimension(Bandwidth(2.0 - 1e-15)) == 5); // within the cutoff slack
}

TEST_CASE("transform roundtrip and parseval") {
    Graph g = oracles::random_connected_graph(17, 9);
    SpectralBasis basis = gpw::eigendecompose(g);
    Signal f = oracles::random_complex_signal(17, 10);

    Eigen::VectorXcd coeff = gpw::forward(basis, f);
    CHECK(std::abs(coeff.norm() - f.norm()) <= 1e-12 * f.norm());

    Signal back = gpw::inverse(basis, coeff);
    CHECK((back - f).norm() <= 1e-12 * f.norm());

    CHECK_THROWS_AS((void)gpw::inverse(basis, Eigen::VectorXcd(3)), gpw::Error);
}

TEST_CASE("projection and membership") {
    Graph g = oracles::random_connected_graph(19, 11);
    SpectralBasis basis = gpw::eigendecompose(g);
    Signal f = oracles::random_complex_signal(19, 12);
    Bandwidth omega(1.0);

    Signal p = gpw::pw_project(basis, f, omega);
    CHECK(gpw::is_pw(basis, p, omega));
    // Projecting twice changes nothing.
    CHECK((gpw::pw_project(basis, p, omega) - p).norm() <= 1e-12 * (1.0 + p.norm()));
    // The residual is orthogonal to the projection.
    CHECK(std::abs(gpw::inner(f - p, p)) <= 1e-10 * (1.0 + f.norm()));
    // A generic random signal has energy above the cutoff.
    CHECK(!gpw::is_pw(basis, f, omega));
}

TEST_CASE("fractional powers compose") {
    Graph g = oracles::random_connected_graph(14, 21);
    SpectralBasis basis = gpw::eigendecompose(g);
    Signal f = oracles::random_complex_signal(14, 22);

    Signal l1 = gpw::apply_power(basis, f, 1.0);
    CHECK((l1 - gpw::laplacian_apply(g, f)).norm() <= 1e-9 * (1.0 + l1.norm()));

    Signal half = gpw::apply_power(basis, gpw::apply_power(basis, f, 0.5), 0.5);
    CHECK((half - l1).norm() <= 1e-9 * (1.0 + l1.norm()));

    CHECK((gpw::apply_power(basis, f, 0.0) - f).norm() <= 1e-12 * f.norm());
    CHECK_THROWS_AS((void)gpw::apply_power(basis, f, -1.0), gpw::Error);
}

TEST_CASE("bandlimited growth bound") {
    Graph g = oracles::random_connected_graph(16, 31);
    SpectralBasis basis = gpw::eigendecompose(g);
    Signal f = oracles::random_complex_signal(16, 32);
    Bandwidth omega(1.5);

    Signal p = gpw::pw_project(basis, f, omega);
    gpw::BernsteinReport report = gpw::bernstein_check(basis, p, omega, 4);
    CHECK(report.all_hold);
    REQUIRE(report.norms.size() == 4);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(report.norms[k] <= report.bounds[k] + 1e-9 * (1.0 + report.bounds[k]));

    CHECK_THROWS_AS((void)gpw::bernstein_check(basis, f, omega, 2), gpw::Error);
}

TEST_CASE("distance to the bandlimited subspace") {
    Graph g = oracles::random_connected_graph(15, 41);
    SpectralBasis basis = gpw::eigendecompose(g);
    Signal f = oracles::random_complex_signal(15, 42);
    Bandwidth omega(1.2);

    gpw::BestApproxReport report = gpw::best_approx_error(basis, f, omega, 1.0);
    CHECK(report.holds);
    Signal tail = f - gpw::pw_project(basis, f, omega);
    CHECK(report.error == doctest::Approx(tail.norm()).epsilon(1e-12));
    CHECK(report.error <= report.bound + 1e-9 * (1.0 + report.bound));
}

TEST_CASE("oversized graphs are rejected by the dense solver") {
    Graph g = gpw::path_graph(12);
    gpw::EigenOptions options;
    options.max_dense = 10;
    CHECK_THROWS_AS((void)gpw::eigendecompose(g, options), gpw::Error);
}
