#include "doctest.h"

#include "gpw/filtering.hpp"
#include "gpw/graph.hpp"
#include "gpw/inequalities.hpp"
#include "gpw/io.hpp"
#include "gpw/random.hpp"
#include "gpw/sampling.hpp"
#include "gpw/spectral.hpp"
#include "gpw/subset.hpp"

#include "oracles.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

using gpw::Bandwidth;
using gpw::Graph;
using gpw::Signal;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

// Per-run scratch directory so parallel test invocations cannot collide.
fs::path scratch_dir() {
    static fs::path dir = [] {
        std::random_device rd;
        fs::path p = fs::temp_directory_path() /
                     ("gpw_io_test_" + std::to_string(rd()) + "_" +
                      std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string scratch_file(const std::string& name) {
    return (scratch_dir() / name).string();
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_shell(const std::string& command) {
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe))
        result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

CliResult run_cli(const std::string& args, bool keep_stderr = false) {
    return run_shell(std::string(TEST_CLI_PATH) + " " + args +
                     (keep_stderr ? " 2>&1" : " 2>/dev/null"));
}

std::vector<int> even_vertices(int n) {
    std::vector<int> set;
    for (int v = 0; v < n; v += 2)
        set.push_back(v);
    return set;
}

} // namespace

TEST_CASE("signal files round-trip exactly") {
    Signal f = oracles::random_complex_signal(9, 3100);
    std::string path = scratch_file("signal.csv");
    gpw::write_signal(path, f);
    Signal back = gpw::read_signal(path, 9);
    CHECK((back - f).norm() == 0.0); // %.17g preserves doubles exactly

    // Size validation.
    CHECK_THROWS_AS((void)gpw::read_signal(path, 8), gpw::Error);
    // Inferred size works too.
    CHECK((gpw::read_signal(path) - f).norm() == 0.0);
}

TEST_CASE("signal parser diagnostics") {
    std::string path = scratch_file("bad_signal.csv");

    {
        std::ofstream out(path);
        out << "vertex,re,im\n0,1.0,0.0\n0,2.0,0.0\n";
    }
    CHECK_THROWS_AS((void)gpw::read_signal(path, 1), gpw::Error);

    {
        std::ofstream out(path);
        out << "vertex,re\n0,1.0\n2,2.0\n";
    }
    // Vertex 1 is missing.
    CHECK_THROWS_AS((void)gpw::read_signal(path, 3), gpw::Error);

    {
        std::ofstream out(path);
        out << "vertex,re\n0,not_a_number\n";
    }
    try {
        (void)gpw::read_signal(path, 1);
        CHECK(false);
    } catch (const gpw::Error& e) {
        CHECK(e.code() == gpw::ErrorCode::ParseError);
    }

    CHECK_THROWS_AS((void)gpw::read_signal(scratch_file("missing.csv")), gpw::Error);
}

TEST_CASE("edge lists round-trip and compress labels") {
    std::string path = scratch_file("edges.txt");
    {
        std::ofstream out(path);
        out << "# a comment line\n"
            << "5 10\n"
            << "\n"
            << "10 20   # trailing comment\n";
    }
    gpw::EdgeListData data = gpw::read_edge_list(path);
    CHECK(data.relabeled);
    CHECK(data.graph.vertex_count() == 3);
    CHECK(data.graph.edge_count() == 2);
    REQUIRE(data.labels.size() == 3);
    CHECK(data.labels[0] == 5);
    CHECK(data.labels[2] == 20);

    Graph g = oracles::random_connected_graph(12, 3200);
    std::string path2 = scratch_file("edges2.txt");
    gpw::write_edge_list(path2, g);
    gpw::EdgeListData back = gpw::read_edge_list(path2);
    CHECK(!back.relabeled);
    CHECK(back.graph.edges() == g.edges());
}

TEST_CASE("vertex sets and sample files") {
    std::string path = scratch_file("set.txt");
    gpw::write_vertex_set(path, {0, 2, 5});
    std::vector<int> set = gpw::read_vertex_set(path);
    CHECK(set == std::vector<int>{0, 2, 5});

    std::string samples_path = scratch_file("samples.csv");
    {
        std::ofstream out(samples_path);
        out << "vertex,re,im\n4,1.5,-2.0\n0,0.25,0.0\n";
    }
    std::map<int, gpw::Complex> samples = gpw::read_samples(samples_path);
    REQUIRE(samples.size() == 2);
    CHECK(samples.at(0) == gpw::Complex(0.25, 0.0));
    CHECK(samples.at(4) == gpw::Complex(1.5, -2.0));

    {
        std::ofstream out(samples_path);
        out << "vertex,re\n1,1.0\n1,2.0\n";
    }
    CHECK_THROWS_AS((void)gpw::read_samples(samples_path), gpw::Error);
}

TEST_CASE("dual frames round-trip through csv and sidecar") {
    Graph g = gpw::path_graph(13);
    gpw::SpectralBasis basis = gpw::eigendecompose(g);
    gpw::SubsetGeometry geom = gpw::SubsetGeometry::to_exhaustion(g, even_vertices(13));
    gpw::DualFrame frame =
        gpw::dual_frame(gpw::certify(geom, Bandwidth(0.4), basis), basis);

    std::string path = scratch_file("frame.csv");
    gpw::write_dual_frame(path, frame);
    CHECK(fs::exists(path));
    CHECK(fs::exists(path + ".json"));

    gpw::DualFrame back = gpw::read_dual_frame(path);
    CHECK(back.set == frame.set);
    CHECK(back.omega == frame.omega);
    CHECK(back.pw_dimension == frame.pw_dimension);
    CHECK((back.theta - frame.theta).norm() == 0.0);
    CHECK(back.certificate.status == frame.certificate.status);
    CHECK(back.certificate.frame_lower == frame.certificate.frame_lower);
}

TEST_CASE("report serialization carries the verdicts") {
    Graph g = gpw::star_graph(6);
    Signal ones = Signal::Ones(7);
    gpw::PoincareReport pr =
        gpw::poincare_single(g, gpw::subset_geometry(g, {0}, 1), ones);
    json pj = gpw::report_json(pr);
    CHECK(pj.at("holds").get<bool>());
    CHECK(pj.at("form").get<std::string>() == "single");
    CHECK(pj.at("lhs").get<double>() == doctest::Approx(std::sqrt(7.0)));

    gpw::SpectralBasis basis = gpw::eigendecompose(gpw::path_graph(9));
    gpw::SubsetGeometry geom =
        gpw::SubsetGeometry::to_exhaustion(gpw::path_graph(9), even_vertices(9));
    gpw::SamplingCertificate cert = gpw::certify(geom, Bandwidth(0.3), basis);
    json cj = gpw::report_json(cert);
    CHECK(cj.at("status").get<std::string>() == "theorem-certified");
    CHECK(cj.at("set_size").get<int>() == 5);

    gpw::FilterKernel k4(4);
    json kj = gpw::kernel_json(k4, false);
    CHECK(kj.at("order").get<int>() == 4);
    CHECK(!kj.contains("table"));
    json kt = gpw::kernel_json(k4, true);
    REQUIRE(kt.contains("table"));
    CHECK(kt.at("table").size() > 0);
}

TEST_CASE("cli: spectrum") {
    CliResult r = run_cli("spectrum --path 8");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("vertex_count").get<int>() == 8);
    CHECK(j.at("edge_count").get<int>() == 7);
    CHECK(j.at("spectrum_within_bound").get<bool>());
    CHECK(j.at("eigenvalues").size() == 8);
    CHECK(j.at("lambda_min").get<double>() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("cli: geometry") {
    CliResult r = run_cli("geometry --path 9 --set evens");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("exhaustion_level").get<int>() == 1);
    CHECK(j.at("levels").at(0).at("min_boundary_connectivity").get<int>() == 2);
    CHECK(j.at("max_certified_bandwidth").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("cli: norm bound reports") {
    CliResult star = run_cli("poincare --star 10 --set list:0 --signal ones");
    REQUIRE(star.exit_code == 0);
    json sj = json::parse(star.output);
    CHECK(sj.at("holds").get<bool>());
    CHECK(sj.at("lhs").get<double>() == doctest::Approx(std::sqrt(11.0)).epsilon(1e-12));
    CHECK(sj.at("rhs").get<double>() == doctest::Approx(std::sqrt(21.0)).epsilon(1e-12));

    CliResult power =
        run_cli("poincare --path 9 --set list:4 --form power --power 2 --signal random --seed 3");
    REQUIRE(power.exit_code == 0);
    CHECK(json::parse(power.output).at("holds").get<bool>());

    CliResult iter =
        run_cli("poincare --path 9 --set list:4 --form iterated --level 2 --signal random");
    REQUIRE(iter.exit_code == 0);
    CHECK(json::parse(iter.output).at("level").get<int>() == 2);
}

TEST_CASE("cli: sample norm equivalence") {
    CliResult r = run_cli("pp --path 21 --set evens --omega 0.4 --signal bandlimited --seed 7");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("holds").get<bool>());
    CHECK(j.at("gamma").get<double>() ==
          doctest::Approx(2.0 * std::sqrt(0.2)).epsilon(1e-12));
}

TEST_CASE("cli: certificates") {
    CliResult r = run_cli("certify --path 21 --set evens --omega 0.49");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("status").get<std::string>() == "theorem-certified");
    CHECK(j.at("boundary_connectivity").get<int>() == 2);

    // A certificate that fails is still exit 0: the report is the product.
    CliResult weak = run_cli("certify --path 12 --set list:0,5,11 --omega 1.0");
    REQUIRE(weak.exit_code == 0);
    CHECK(json::parse(weak.output).at("status").get<std::string>() == "not-certified");
}

TEST_CASE("cli: frame and reconstruction round trip") {
    std::string frame_path = scratch_file("cli_frame.csv");
    CliResult df = run_cli("dual-frame --path 21 --set evens --omega 0.4 --output " + frame_path);
    REQUIRE(df.exit_code == 0);
    CHECK(fs::exists(frame_path));

    // Samples of a bandlimited signal, written by hand.
    Graph g = gpw::path_graph(21);
    gpw::SpectralBasis basis = gpw::eigendecompose(g);
    Signal f = gpw::random_bandlimited_signal(basis, Bandwidth(0.4), 5);
    std::string samples_path = scratch_file("cli_samples.csv");
    {
        std::ofstream out(samples_path);
        out << "vertex,re,im\n";
        out.precision(17);
        for (int v : even_vertices(21))
            out << v << "," << f[v].real() << "," << f[v].imag() << "\n";
    }

    std::string out_path = scratch_file("cli_rebuilt.csv");
    CliResult rec = run_cli("reconstruct --frame " + frame_path + " --samples " +
                            samples_path + " --output " + out_path);
    REQUIRE(rec.exit_code == 0);
    Signal rebuilt = gpw::read_signal(out_path, 21);
    CHECK((rebuilt - f).norm() <= 1e-8 * (1.0 + f.norm()));
}

TEST_CASE("cli: filters and approximation chains") {
    CliResult q = run_cli("filter --cycle 12 --omega 1 --signal random --seed 2");
    REQUIRE(q.exit_code == 0);
    json qj = json::parse(q.output);
    CHECK(qj.at("mode").get<std::string>() == "smoothing");
    CHECK(qj.at("tail_energy_relative").get<double>() < 1e-8);

    CliResult p = run_cli("filter --cycle 12 --omega 1 --signal random --seed 2 --order-m 2");
    REQUIRE(p.exit_code == 0);
    json pj = json::parse(p.output);
    CHECK(pj.at("mode").get<std::string>() == "reproducing");
    CHECK(pj.at("kernel").at("order").get<int>() == 4);
    CHECK(pj.at("tail_energy_relative").get<double>() < 1e-8);

    CliResult a =
        run_cli("approx-report --cycle 12 --omega 1 --order-m 2 --k 1 --signal random --seed 4");
    REQUIRE(a.exit_code == 0);
    CHECK(json::parse(a.output).at("holds").get<bool>());

    CliResult s = run_cli(
        "sparse-approx --path 17 --set evens --omega 0.45 --order-m 2 --k 0 --signal random");
    REQUIRE(s.exit_code == 0);
    json sj = json::parse(s.output);
    CHECK(sj.at("chain_holds").get<bool>());
    CHECK(sj.at("certificate_status").get<std::string>() == "theorem-certified");
}

TEST_CASE("cli: worked examples") {
    CliResult star = run_cli("repro-examples --example star");
    REQUIRE(star.exit_code == 0);
    json sj = json::parse(star.output);
    CHECK(sj.at("hub_sample").at("matches").get<bool>());
    CHECK(sj.at("leaf_samples").at("matches").get<bool>());

    CliResult hub = run_cli("repro-examples --example cycle-hub");
    REQUIRE(hub.exit_code == 0);
    CHECK(json::parse(hub.output).at("all_match").get<bool>());
}

TEST_CASE("cli: error handling") {
    CliResult bad_vertex = run_cli("certify --path 10 --set list:0,99 --omega 0.1", true);
    CHECK(bad_vertex.exit_code == 1);
    CHECK(bad_vertex.output.find("error:") != std::string::npos);

    CliResult no_graph = run_cli("spectrum", true);
    CHECK(no_graph.exit_code == 1);

    CliResult two_graphs = run_cli("spectrum --path 5 --cycle 5", true);
    CHECK(two_graphs.exit_code == 1);

    CliResult bad_tol = run_shell("GPW_TOL=abc " + std::string(TEST_CLI_PATH) +
                                  " poincare --star 4 --set list:0 --signal ones 2>&1");
    CHECK(bad_tol.exit_code == 1);
    CHECK(bad_tol.output.find("GPW_TOL") != std::string::npos);

    CliResult missing_flag = run_cli("pp --path 9 --set evens", true); // no --omega
    CHECK(missing_flag.exit_code != 0);
}
