#include "doctest.h"

#include "gpw/lattice.hpp"
#include "gpw/random.hpp"
#include "gpw/spectral.hpp"
#include "gpw/subset.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using gpw::Bandwidth;
using gpw::DownsamplePattern;
using gpw::Signal;
using gpw::Torus;

TEST_CASE("torus validation and indexing") {
    CHECK_THROWS_AS((void)Torus({}), gpw::Error);
    CHECK_THROWS_AS((void)Torus({4, 2}), gpw::Error);
    CHECK_THROWS_AS((void)Torus({1}), gpw::Error);

    Torus t({3, 4});
    CHECK(t.site_count() == 12);
    CHECK(t.dimension_count() == 2);
    CHECK(t.flat_index({0, 0}) == 0);
    CHECK(t.flat_index({0, 3}) == 3);  // last axis fastest
    CHECK(t.flat_index({1, 0}) == 4);
    CHECK(t.flat_index({2, 3}) == 11);
    CHECK(t.flat_index({-1, 4}) == t.flat_index({2, 0})); // wraps
    for (Eigen::Index i = 0; i < 12; ++i)
        CHECK(t.flat_index(t.coordinates(i)) == i);
}

TEST_CASE("symbols enumerate the laplacian spectrum") {
    Torus t({3, 4});
    auto sq = [](double x) { return x * x; };
    double direct = 4.0 * (sq(std::sin(std::numbers::pi * 1.0 / 3.0)) +
                           sq(std::sin(std::numbers::pi * 2.0 / 4.0)));
    CHECK(t.symbol({1, 2}) == doctest::Approx(direct).epsilon(1e-14));

    // The sorted symbol grid is exactly the sorted spectrum of the graph.
    gpw::SpectralBasis basis = gpw::eigendecompose(t.graph());
    Eigen::VectorXd symbols = t.symbol_grid();
    std::vector<double> sorted(symbols.begin(), symbols.end());
    std::sort(sorted.begin(), sorted.end());
    for (Eigen::Index j = 0; j < 12; ++j)
        CHECK(basis.eigenvalues()[j] ==
              doctest::Approx(sorted[static_cast<std::size_t>(j)]).epsilon(1e-10));
}

TEST_CASE("torus graph shape") {
    Torus t({3, 4, 5});
    gpw::Graph g = t.graph();
    CHECK(g.vertex_count() == 60);
    CHECK(g.edge_count() == 3u * 60);  // d * N edges on a d-torus
    CHECK(g.max_degree() == 6);
    for (int v = 0; v < 60; ++v)
        CHECK(g.degree(v) == 6);
}

TEST_CASE("dft roundtrip, unitarity, and the direct sum") {
    Torus t({3, 4});
    Signal f = oracles::random_complex_signal(12, 31);

    Eigen::VectorXcd coeffs = t.dft(f);
    Signal back = t.idft(coeffs);
    CHECK((back - f).norm() <= 1e-12 * f.norm());

    // Unnormalized forward transform: |F|^2 = N |f|^2.
    CHECK(coeffs.squaredNorm() ==
          doctest::Approx(12.0 * f.squaredNorm()).epsilon(1e-12));

    // Match the definition at every frequency.
    for (int k0 = 0; k0 < 3; ++k0) {
        for (int k1 = 0; k1 < 4; ++k1) {
            gpw::Complex direct(0.0, 0.0);
            for (int x0 = 0; x0 < 3; ++x0) {
                for (int x1 = 0; x1 < 4; ++x1) {
                    double phase = -2.0 * std::numbers::pi *
                                   (static_cast<double>(k0) * x0 / 3.0 +
                                    static_cast<double>(k1) * x1 / 4.0);
                    direct += f[t.flat_index({x0, x1})] * std::polar(1.0, phase);
                }
            }
            CHECK(std::abs(coeffs[t.flat_index({k0, k1})] - direct) <=
                  1e-11 * (1.0 + f.norm()));
        }
    }
}

TEST_CASE("fft spectral operations match the dense route") {
    Torus t({4, 5});
    gpw::Graph g = t.graph();
    gpw::SpectralBasis basis = gpw::eigendecompose(g);
    Signal f = oracles::random_complex_signal(20, 41);
    Bandwidth omega(1.7); // between symbol values for this torus

    Signal via_fft = gpw::fft_pw_project(t, f, omega);
    Signal via_dense = gpw::pw_project(basis, f, omega);
    CHECK((via_fft - via_dense).norm() <= 1e-10 * (1.0 + f.norm()));

    gpw::FilterKernel k4(4);
    for (int m : {1, 2}) {
        Signal lhs = gpw::fft_filter(t, f, omega, m, k4);
        Signal rhs = gpw::filter_p(basis, f, omega, m, k4);
        CHECK((lhs - rhs).norm() <= 1e-9 * (1.0 + f.norm()));
    }

    Signal evolved_fft = gpw::fft_schrodinger(t, f, 0.8);
    Signal evolved_dense = gpw::schrodinger(basis, f, 0.8);
    CHECK((evolved_fft - evolved_dense).norm() <= 1e-10 * (1.0 + f.norm()));
    CHECK(evolved_fft.norm() == doctest::Approx(f.norm()).epsilon(1e-12));
}

TEST_CASE("fft filter validation") {
    Torus t({4, 4});
    Signal f = oracles::random_complex_signal(16, 51);
    gpw::FilterKernel k4(4);
    CHECK_THROWS_AS((void)gpw::fft_filter(t, f, Bandwidth(1.0), 3, k4), gpw::Error);
    CHECK_THROWS_AS((void)gpw::fft_filter(t, f, Bandwidth(1.0), 0, k4), gpw::Error);
    Signal wrong = oracles::random_complex_signal(15, 52);
    CHECK_THROWS_AS((void)gpw::fft_pw_project(t, wrong, Bandwidth(1.0)), gpw::Error);
}

TEST_CASE("downsample patterns and their connectivity") {
    CHECK(gpw::parse_pattern("checker-complement") == DownsamplePattern::CheckerComplement);
    CHECK(gpw::parse_pattern("alternate-rows") == DownsamplePattern::AlternateRows);
    CHECK(gpw::parse_pattern("third-rows") == DownsamplePattern::ThirdRows);
    CHECK_THROWS_AS((void)gpw::parse_pattern("bogus"), gpw::Error);
    CHECK(std::string(gpw::pattern_name(DownsamplePattern::ThirdRows)) == "third-rows");

    SUBCASE("checker complement") {
        Torus t({4, 4});
        std::vector<int> set = gpw::downsample_set(t, DownsamplePattern::CheckerComplement);
        CHECK(set.size() == 12); // 16 minus the 4 all-even sites
        gpw::SubsetGeometry geom = gpw::SubsetGeometry::to_exhaustion(t.graph(), set);
        CHECK(geom.levels() == 1);
        CHECK(geom.min_boundary_connectivity(0) == 4); // dropped sites keep 2d neighbors
        CHECK_THROWS_AS((void)gpw::downsample_set(Torus({3, 4}),
                                                  DownsamplePattern::CheckerComplement),
                        gpw::Error);
    }

    SUBCASE("alternate rows") {
        Torus t({4, 4});
        std::vector<int> set = gpw::downsample_set(t, DownsamplePattern::AlternateRows);
        CHECK(set.size() == 8);
        gpw::SubsetGeometry geom = gpw::SubsetGeometry::to_exhaustion(t.graph(), set);
        CHECK(geom.min_boundary_connectivity(0) == 2);
        CHECK_THROWS_AS((void)gpw::downsample_set(Torus({4, 5}),
                                                  DownsamplePattern::AlternateRows),
                        gpw::Error);
    }

    SUBCASE("third rows") {
        Torus t({4, 6});
        std::vector<int> set = gpw::downsample_set(t, DownsamplePattern::ThirdRows);
        CHECK(set.size() == 8);
        gpw::SubsetGeometry geom = gpw::SubsetGeometry::to_exhaustion(t.graph(), set);
        CHECK(geom.min_boundary_connectivity(0) == 1);
        CHECK_THROWS_AS((void)gpw::downsample_set(Torus({4, 4}),
                                                  DownsamplePattern::ThirdRows),
                        gpw::Error);
    }
}

TEST_CASE("downsampled torus supports certified reconstruction") {
    // On the 10x10 torus, nine symbol values sit below 0.9 while the kept-set
    // connectivity allows any bandwidth under 1.
    Torus t({10, 10});
    std::vector<int> set = gpw::downsample_set(t, DownsamplePattern::CheckerComplement);
    gpw::Graph g = t.graph();
    gpw::SubsetGeometry geom = gpw::SubsetGeometry::to_exhaustion(g, set);
    gpw::SpectralBasis basis = gpw::eigendecompose(g);
    Bandwidth omega(0.9);

    gpw::SamplingCertificate cert = gpw::certify(geom, omega, basis);
    CHECK(cert.status == gpw::CertificateStatus::TheoremCertified);
    CHECK(basis.pw_dimension(omega) == 9);
    gpw::DualFrame frame = gpw::dual_frame(cert, basis);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Signal f = gpw::random_bandlimited_signal(basis, omega, seed);
        Signal rebuilt = gpw::reconstruct(frame, gpw::restrict_to(f, set));
        CHECK((rebuilt - f).norm() <= 1e-9 * (1.0 + f.norm()));
    }
}
