#include "doctest.h"

#include "gpw/graph.hpp"
#include "gpw/inequalities.hpp"
#include "gpw/random.hpp"
#include "gpw/spectral.hpp"
#include "gpw/subset.hpp"

#include "oracles.hpp"

#include <cmath>

using gpw::Bandwidth;
using gpw::Graph;
using gpw::PoincareReport;
using gpw::Signal;
using gpw::SubsetGeometry;

namespace {

std::vector<int> even_vertices(int n) {
    std::vector<int> set;
    for (int v = 0; v < n; v += 2)
        set.push_back(v);
    return set;
}

} // namespace

TEST_CASE("half power norm matches the gradient") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracles::random_connected_graph(8 + static_cast<int>(seed), 600 + seed);
        Signal f = oracles::random_complex_signal(g.vertex_count(), 700 + seed);
        double smooth = gpw::half_power_norm(g, f);
        double grad = gpw::gradient_norm(g, f);
        CHECK(2.0 * smooth * smooth == doctest::Approx(grad * grad).epsilon(1e-12));
    }
}

TEST_CASE("star hub sample closed form") {
    // Constant signal on a star, sampled at the hub alone: the sample weight
    // is 2*10/1 + 1 = 21, the smoothness term vanishes, and the full norm is
    // sqrt(11).
    Graph g = gpw::star_graph(10);
    Signal ones = Signal::Ones(11);
    PoincareReport r = gpw::poincare_single(g, gpw::subset_geometry(g, {0}, 1), ones);

    CHECK(r.holds);
    CHECK(r.global);
    CHECK(r.per_vertex_weights);
    CHECK(r.lhs == doctest::Approx(std::sqrt(11.0)).epsilon(1e-14));
    CHECK(r.sample_norm == doctest::Approx(std::sqrt(21.0)).epsilon(1e-14));
    CHECK(r.smoothness_norm <= 1e-12);
    CHECK(r.rhs == doctest::Approx(std::sqrt(21.0)).epsilon(1e-14));
    CHECK(r.sample_coefficient == 1.0);
    CHECK(r.smoothness_coefficient == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("star leaf samples closed form") {
    // Indicator of the leaves, sampled on the leaves: weights 2/10 + 1, so
    // the sample term is sqrt(12); the smoothness term contributes exactly 2.
    Graph g = gpw::star_graph(10);
    Signal f = Signal::Ones(11);
    f[0] = 0.0;
    std::vector<int> leaves;
    for (int v = 1; v <= 10; ++v)
        leaves.push_back(v);
    PoincareReport r = gpw::poincare_single(g, gpw::subset_geometry(g, leaves, 1), f);

    CHECK(r.holds);
    CHECK(r.lhs == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
    CHECK(r.rhs == doctest::Approx(std::sqrt(12.0) + 2.0).epsilon(1e-14));
}

TEST_CASE("single-level bound holds on random data") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = oracles::random_connected_graph(10 + static_cast<int>(seed), 800 + seed);
        const int n = static_cast<int>(g.vertex_count());
        std::mt19937_64 rng(1000 + seed);
        std::vector<int> set = {static_cast<int>(rng() % n)};
        SubsetGeometry geom(g, set, 1);
        Signal f = oracles::random_complex_signal(n, 1100 + seed);

        PoincareReport r = gpw::poincare_single(g, geom, f);
        CHECK(r.holds);
        CHECK(r.slack >= -1e-9 * (1.0 + r.rhs));
        CHECK(r.form == PoincareReport::Form::Single);
        CHECK(r.level == 1);
    }
}

TEST_CASE("iterated bound holds at every computable depth") {
    Graph g = gpw::path_graph(15);
    std::vector<int> set = {7};
    for (int depth = 1; depth <= 7; ++depth) {
        SubsetGeometry geom(g, set, depth);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Signal f = oracles::random_complex_signal(15, 1200 + seed);
            PoincareReport r = gpw::poincare_iterated(g, geom, depth, f);
            CHECK(r.holds);
            CHECK(r.level == depth);
            CHECK(r.global == (depth == 7));
        }
    }
    // Depth beyond what the geometry holds is a usage error.
    SubsetGeometry shallow(g, set, 2);
    Signal f = oracles::random_complex_signal(15, 1300);
    CHECK_THROWS_AS((void)gpw::poincare_iterated(g, shallow, 3, f), gpw::Error);
}

TEST_CASE("iterated constants follow the boundary profile") {
    // On the path with every second vertex kept, D_0 = K_0 = 2, so
    // A_1^2 = (2*2+2)/2 = 3 and B_1 = 2 sqrt(1/2).
    Graph g = gpw::path_graph(21);
    SubsetGeometry geom(g, even_vertices(21), 1);
    Signal f = oracles::random_complex_signal(21, 1400);
    PoincareReport r = gpw::poincare_iterated(g, geom, 1, f);
    CHECK(r.sample_coefficient == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r.smoothness_coefficient == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(1e-14));
    CHECK(r.holds);
}

TEST_CASE("power bound and its preconditions") {
    Graph g = gpw::path_graph(15);
    SubsetGeometry geom = SubsetGeometry::to_exhaustion(g, {7});
    Signal f = oracles::random_complex_signal(15, 1500);

    for (int r_pow : {1, 2, 4, 8}) {
        PoincareReport r = gpw::poincare_power(g, geom, f, r_pow);
        CHECK(r.holds);
        CHECK(r.power == r_pow);
        CHECK(r.global);
    }

    // r = 1 reduces to the iterated constants with the sample coefficient
    // doubled.
    PoincareReport pow1 = gpw::poincare_power(g, geom, f, 1);
    PoincareReport iter = gpw::poincare_iterated(g, geom, geom.levels(), f);
    CHECK(pow1.sample_coefficient ==
          doctest::Approx(2.0 * iter.sample_coefficient).epsilon(1e-14));
    CHECK(pow1.smoothness_coefficient ==
          doctest::Approx(iter.smoothness_coefficient).epsilon(1e-14));

    CHECK_THROWS_AS((void)gpw::poincare_power(g, geom, f, 3), gpw::Error);
    CHECK_THROWS_AS((void)gpw::poincare_power(g, geom, f, 0), gpw::Error);
    SubsetGeometry shallow(g, {7}, 2);
    CHECK_THROWS_AS((void)gpw::poincare_power(g, shallow, f, 2), gpw::Error);
}

TEST_CASE("sample norm equivalence for bandlimited signals") {
    Graph g = gpw::path_graph(41);
    gpw::SpectralBasis basis = gpw::eigendecompose(g);
    SubsetGeometry geom = SubsetGeometry::to_exhaustion(g, even_vertices(41));
    Bandwidth omega(0.4);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Signal f = gpw::random_bandlimited_signal(basis, omega, seed);
        gpw::PlancherelPolyaReport r = gpw::plancherel_polya(g, geom, omega, f, basis);
        CHECK(r.holds);
        CHECK(r.lower <= r.norm + 1e-9 * (1.0 + r.norm));
        CHECK(r.norm <= r.upper + 1e-9 * (1.0 + r.upper));
        CHECK(r.gamma == doctest::Approx(2.0 * std::sqrt(0.4 / 2.0)).epsilon(1e-12));
        CHECK(r.sample_coefficient == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    }
}

TEST_CASE("sample norm equivalence rejects bad inputs") {
    Graph g = gpw::path_graph(41);
    gpw::SpectralBasis basis = gpw::eigendecompose(g);
    SubsetGeometry geom = SubsetGeometry::to_exhaustion(g, even_vertices(41));

    // Not bandlimited.
    Signal noisy = oracles::random_complex_signal(41, 1600);
    CHECK_THROWS_AS((void)gpw::plancherel_polya(g, geom, Bandwidth(0.4), noisy, basis),
                    gpw::Error);

    // Bandwidth at which the equivalence constant blows up: gamma >= 1 at
    // omega >= K_0/4 = 0.5.
    Signal f = gpw::random_bandlimited_signal(basis, Bandwidth(0.6), 3);
    CHECK_THROWS_AS((void)gpw::plancherel_polya(g, geom, Bandwidth(0.6), f, basis),
                    gpw::Error);
    try {
        (void)gpw::plancherel_polya(g, geom, Bandwidth(0.6), f, basis);
    } catch (const gpw::Error& e) {
        CHECK(e.code() == gpw::ErrorCode::BandwidthTooLarge);
    }

    // Geometry that does not reach the whole vertex set.
    SubsetGeometry shallow(g, {0}, 1);
    Signal g0 = gpw::random_bandlimited_signal(basis, Bandwidth(0.4), 4);
    CHECK_THROWS_AS((void)gpw::plancherel_polya(g, shallow, Bandwidth(0.4), g0, basis),
                    gpw::Error);
}

TEST_CASE("whole vertex set gives the trivial equivalence") {
    Graph g = gpw::cycle_graph(9);
    gpw::SpectralBasis basis = gpw::eigendecompose(g);
    std::vector<int> all;
    for (int v = 0; v < 9; ++v)
        all.push_back(v);
    SubsetGeometry geom = SubsetGeometry::to_exhaustion(g, all);

    Signal f = gpw::random_bandlimited_signal(basis, Bandwidth(2.0), 5);
    gpw::PlancherelPolyaReport r = gpw::plancherel_polya(g, geom, Bandwidth(2.0), f, basis);
    CHECK(r.holds);
    CHECK(r.gamma == 0.0);
    CHECK(r.sample_coefficient == 1.0);
    CHECK(r.lower == doctest::Approx(r.norm).epsilon(1e-12));
    CHECK(r.upper == doctest::Approx(r.norm).epsilon(1e-12));
}

TEST_CASE("certified bandwidth cap") {
    Graph g = gpw::path_graph(21);
    SubsetGeometry evens = SubsetGeometry::to_exhaustion(g, even_vertices(21));
    CHECK(gpw::max_certified_bandwidth(evens) == doctest::Approx(0.5).epsilon(1e-14));

    std::vector<int> all;
    for (int v = 0; v < 21; ++v)
        all.push_back(v);
    SubsetGeometry whole = SubsetGeometry::to_exhaustion(g, all);
    CHECK(std::isinf(gpw::max_certified_bandwidth(whole)));

    SubsetGeometry deep = SubsetGeometry::to_exhaustion(g, {0});
    CHECK_THROWS_AS((void)gpw::max_certified_bandwidth(deep), gpw::Error);
}
