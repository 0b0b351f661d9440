#include "gpw/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace gpw {
namespace {

[[noreturn]] void parse_fail(const std::string& path, long line, const std::string& what) {
    std::ostringstream msg;
    msg << path << ":" << line << ": " << what;
    raise(ErrorCode::ParseError, msg.str());
}

[[noreturn]] void file_fail(const std::string& path, const char* action) {
    raise(ErrorCode::ParseError, std::string("cannot ") + action + " '" + path + "'");
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    std::istringstream in(line);
    while (std::getline(in, current, ',')) {
        fields.push_back(trim(current));
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

long long parse_integer(const std::string& token, const std::string& path, long line) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(token, &used);
        if (used != token.size()) {
            parse_fail(path, line, "trailing characters after integer '" + token + "'");
        }
        return value;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(path, line, "expected an integer, got '" + token + "'");
    }
}

double parse_real(const std::string& token, const std::string& path, long line) {
    try {
        std::size_t used = 0;
        double value = std::stod(token, &used);
        if (used != token.size()) {
            parse_fail(path, line, "trailing characters after number '" + token + "'");
        }
        return value;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(path, line, "expected a number, got '" + token + "'");
    }
}

std::string format_real(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

const char* scope_name(bool global) { return global ? "global" : "local"; }

const char* form_name(PoincareReport::Form form) {
    switch (form) {
    case PoincareReport::Form::Single:
        return "single";
    case PoincareReport::Form::Iterated:
        return "iterated";
    case PoincareReport::Form::Power:
        return "power";
    }
    return "unknown";
}

} // namespace

EdgeListData read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        file_fail(path, "open");
    }

    std::vector<std::pair<long long, long long>> raw_edges;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) {
            continue;
        }
        std::istringstream fields(body);
        std::string a;
        std::string b;
        std::string extra;
        if (!(fields >> a >> b)) {
            parse_fail(path, lineno, "expected two vertex labels");
        }
        if (fields >> extra) {
            parse_fail(path, lineno, "unexpected trailing field '" + extra + "'");
        }
        long long u = parse_integer(a, path, lineno);
        long long v = parse_integer(b, path, lineno);
        if (u < 0 || v < 0) {
            parse_fail(path, lineno, "vertex labels must be nonnegative");
        }
        raw_edges.emplace_back(u, v);
    }
    if (raw_edges.empty()) {
        parse_fail(path, lineno, "no edges found");
    }

    std::vector<long long> labels;
    labels.reserve(raw_edges.size() * 2);
    for (const auto& [u, v] : raw_edges) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::map<long long, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        index[labels[i]] = static_cast<int>(i);
    }
    bool relabeled = labels.back() != static_cast<long long>(labels.size()) - 1;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [u, v] : raw_edges) {
        edges.emplace_back(index[u], index[v]);
    }
    return EdgeListData{Graph(static_cast<Eigen::Index>(labels.size()), std::move(edges)),
                        std::move(labels), relabeled};
}

void write_edge_list(const std::string& path, const Graph& graph) {
    std::ofstream out(path);
    if (!out) {
        file_fail(path, "write");
    }
    out << "# vertices: " << graph.vertex_count() << "\n";
    for (const auto& [u, v] : graph.edges()) {
        out << u << " " << v << "\n";
    }
}

Signal read_signal(const std::string& path, Eigen::Index expected_size) {
    std::ifstream in(path);
    if (!in) {
        file_fail(path, "open");
    }

    std::string line;
    long lineno = 0;
    bool has_imag = false;
    bool header_seen = false;
    std::vector<std::pair<int, Complex>> rows;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) {
            continue;
        }
        std::vector<std::string> fields = split_csv(body);
        if (!header_seen) {
            if (fields.size() == 2 && fields[0] == "vertex" && fields[1] == "re") {
                has_imag = false;
            } else if (fields.size() == 3 && fields[0] == "vertex" && fields[1] == "re" &&
                       fields[2] == "im") {
                has_imag = true;
            } else {
                parse_fail(path, lineno, "expected header 'vertex,re' or 'vertex,re,im'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != (has_imag ? 3u : 2u)) {
            parse_fail(path, lineno, "wrong number of fields");
        }
        long long vertex = parse_integer(fields[0], path, lineno);
        double re = parse_real(fields[1], path, lineno);
        double im = has_imag ? parse_real(fields[2], path, lineno) : 0.0;
        if (vertex < 0) {
            parse_fail(path, lineno, "vertex ids must be nonnegative");
        }
        rows.emplace_back(static_cast<int>(vertex), Complex(re, im));
        max_vertex = std::max(max_vertex, static_cast<int>(vertex));
    }
    if (!header_seen) {
        parse_fail(path, lineno, "missing header");
    }

    Eigen::Index size = expected_size >= 0 ? expected_size : max_vertex + 1;
    if (static_cast<Eigen::Index>(rows.size()) != size) {
        std::ostringstream msg;
        msg << "expected " << size << " rows, got " << rows.size();
        parse_fail(path, lineno, msg.str());
    }
    Signal f = Signal::Zero(size);
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    for (const auto& [vertex, value] : rows) {
        if (vertex >= size) {
            parse_fail(path, lineno,
                       "vertex " + std::to_string(vertex) + " is outside 0.." +
                           std::to_string(size - 1));
        }
        if (seen[static_cast<std::size_t>(vertex)]) {
            parse_fail(path, lineno, "vertex " + std::to_string(vertex) + " appears twice");
        }
        seen[static_cast<std::size_t>(vertex)] = true;
        f[vertex] = value;
    }
    return f;
}

void write_signal(const std::string& path, const Signal& f) {
    std::ofstream out(path);
    if (!out) {
        file_fail(path, "write");
    }
    out << "vertex,re,im\n";
    for (Eigen::Index v = 0; v < f.size(); ++v) {
        out << v << "," << format_real(f[v].real()) << "," << format_real(f[v].imag()) << "\n";
    }
}

std::map<int, Complex> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        file_fail(path, "open");
    }
    std::map<int, Complex> samples;
    std::string line;
    long lineno = 0;
    bool header_seen = false;
    bool has_imag = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) {
            continue;
        }
        std::vector<std::string> fields = split_csv(body);
        if (!header_seen) {
            if (fields.size() == 2 && fields[0] == "vertex" && fields[1] == "re") {
                has_imag = false;
            } else if (fields.size() == 3 && fields[0] == "vertex" && fields[1] == "re" &&
                       fields[2] == "im") {
                has_imag = true;
            } else {
                parse_fail(path, lineno, "expected header 'vertex,re' or 'vertex,re,im'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != (has_imag ? 3u : 2u)) {
            parse_fail(path, lineno, "wrong number of fields");
        }
        long long vertex = parse_integer(fields[0], path, lineno);
        if (vertex < 0) {
            parse_fail(path, lineno, "vertex ids must be nonnegative");
        }
        double re = parse_real(fields[1], path, lineno);
        double im = has_imag ? parse_real(fields[2], path, lineno) : 0.0;
        if (!samples.emplace(static_cast<int>(vertex), Complex(re, im)).second) {
            parse_fail(path, lineno, "vertex " + std::to_string(vertex) + " appears twice");
        }
    }
    if (!header_seen) {
        parse_fail(path, lineno, "missing header");
    }
    return samples;
}

std::vector<int> read_vertex_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        file_fail(path, "open");
    }
    std::vector<int> set;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) {
            continue;
        }
        long long v = parse_integer(body, path, lineno);
        if (v < 0) {
            parse_fail(path, lineno, "vertex ids must be nonnegative");
        }
        set.push_back(static_cast<int>(v));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
        parse_fail(path, lineno, "duplicate vertex in set");
    }
    return set;
}

void write_vertex_set(const std::string& path, const std::vector<int>& set) {
    std::ofstream out(path);
    if (!out) {
        file_fail(path, "write");
    }
    for (int v : set) {
        out << v << "\n";
    }
}

void write_dual_frame(const std::string& path, const DualFrame& frame) {
    std::ofstream out(path);
    if (!out) {
        file_fail(path, "write");
    }
    const Eigen::Index n = frame.theta.rows();
    out << "vertex";
    for (Eigen::Index v = 0; v < n; ++v) {
        out << ",theta_" << v;
    }
    out << "\n";
    for (std::size_t j = 0; j < frame.set.size(); ++j) {
        out << frame.set[j];
        for (Eigen::Index v = 0; v < n; ++v) {
            out << "," << format_real(frame.theta(v, static_cast<Eigen::Index>(j)));
        }
        out << "\n";
    }

    nlohmann::json sidecar;
    sidecar["omega"] = frame.omega;
    sidecar["pw_dimension"] = frame.pw_dimension;
    sidecar["vertex_count"] = n;
    sidecar["set"] = frame.set;
    sidecar["certificate"] = report_json(frame.certificate);
    std::ofstream side(path + ".json");
    if (!side) {
        file_fail(path + ".json", "write");
    }
    side << sidecar.dump(2) << "\n";
}

DualFrame read_dual_frame(const std::string& path) {
    std::ifstream side_in(path + ".json");
    if (!side_in) {
        file_fail(path + ".json", "open");
    }
    nlohmann::json sidecar;
    try {
        side_in >> sidecar;
    } catch (const std::exception& e) {
        raise(ErrorCode::ParseError, std::string("bad frame sidecar: ") + e.what());
    }

    DualFrame frame;
    try {
        frame.omega = sidecar.at("omega").get<double>();
        frame.pw_dimension = sidecar.at("pw_dimension").get<Eigen::Index>();
        frame.set = sidecar.at("set").get<std::vector<int>>();
        const auto& cert = sidecar.at("certificate");
        frame.certificate.set = frame.set;
        frame.certificate.omega = cert.at("omega").get<double>();
        frame.certificate.pw_dimension = cert.at("pw_dimension").get<Eigen::Index>();
        frame.certificate.boundary_connectivity =
            cert.at("boundary_connectivity").is_null()
                ? -1
                : cert.at("boundary_connectivity").get<int>();
        frame.certificate.condition_closure = cert.at("condition_closure").get<bool>();
        frame.certificate.condition_bandwidth = cert.at("condition_bandwidth").get<bool>();
        frame.certificate.frame_lower = cert.at("frame_lower").get<double>();
        frame.certificate.frame_upper = cert.at("frame_upper").get<double>();
        std::string status = cert.at("status").get<std::string>();
        if (status == certificate_status_name(CertificateStatus::TheoremCertified)) {
            frame.certificate.status = CertificateStatus::TheoremCertified;
        } else if (status == certificate_status_name(CertificateStatus::NumericallyCertified)) {
            frame.certificate.status = CertificateStatus::NumericallyCertified;
        } else {
            frame.certificate.status = CertificateStatus::NotCertified;
        }
        const Eigen::Index n = sidecar.at("vertex_count").get<Eigen::Index>();
        frame.theta.resize(n, static_cast<Eigen::Index>(frame.set.size()));
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::ParseError, std::string("bad frame sidecar: ") + e.what());
    }

    std::ifstream in(path);
    if (!in) {
        file_fail(path, "open");
    }
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line)) {
        parse_fail(path, 1, "missing header");
    }
    ++lineno;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        if (row >= frame.set.size()) {
            parse_fail(path, lineno, "more rows than set vertices");
        }
        std::vector<std::string> fields = split_csv(body);
        if (fields.size() != static_cast<std::size_t>(frame.theta.rows()) + 1) {
            parse_fail(path, lineno, "wrong number of fields");
        }
        long long vertex = parse_integer(fields[0], path, lineno);
        if (vertex != frame.set[row]) {
            parse_fail(path, lineno,
                       "row vertex " + std::to_string(vertex) + " does not match set order");
        }
        for (Eigen::Index v = 0; v < frame.theta.rows(); ++v) {
            frame.theta(v, static_cast<Eigen::Index>(row)) =
                parse_real(fields[static_cast<std::size_t>(v) + 1], path, lineno);
        }
        ++row;
    }
    if (row != frame.set.size()) {
        parse_fail(path, lineno, "fewer rows than set vertices");
    }
    return frame;
}

nlohmann::json report_json(const PoincareReport& report) {
    nlohmann::json j;
    j["form"] = form_name(report.form);
    j["level"] = report.level;
    j["power"] = report.power;
    j["scope"] = scope_name(report.global);
    j["per_vertex_weights"] = report.per_vertex_weights;
    j["A"] = report.sample_coefficient;
    j["B"] = report.smoothness_coefficient;
    j["lhs"] = report.lhs;
    j["sample_norm"] = report.sample_norm;
    j["smoothness_norm"] = report.smoothness_norm;
    j["rhs"] = report.rhs;
    j["slack"] = report.slack;
    j["holds"] = report.holds;
    return j;
}

nlohmann::json report_json(const PlancherelPolyaReport& report) {
    nlohmann::json j;
    j["omega"] = report.omega;
    j["gamma"] = report.gamma;
    j["level"] = report.level;
    j["A"] = report.sample_coefficient;
    j["lower"] = report.lower;
    j["norm"] = report.norm;
    j["upper"] = report.upper;
    j["holds"] = report.holds;
    return j;
}

nlohmann::json report_json(const SamplingCertificate& certificate) {
    nlohmann::json j;
    j["set"] = certificate.set;
    j["set_size"] = certificate.set.size();
    j["omega"] = certificate.omega;
    j["pw_dimension"] = certificate.pw_dimension;
    if (certificate.boundary_connectivity < 0) {
        j["boundary_connectivity"] = nullptr;
    } else {
        j["boundary_connectivity"] = certificate.boundary_connectivity;
    }
    j["condition_closure"] = certificate.condition_closure;
    j["condition_bandwidth"] = certificate.condition_bandwidth;
    j["frame_lower"] = certificate.frame_lower;
    j["frame_upper"] = certificate.frame_upper;
    j["status"] = certificate_status_name(certificate.status);
    return j;
}

nlohmann::json report_json(const ApproxReport& report) {
    nlohmann::json j;
    j["omega"] = report.omega;
    j["m"] = report.m;
    j["k"] = report.k;
    j["best_error"] = report.best_error;
    j["filter_error"] = report.filter_error;
    j["constant"] = report.constant;
    j["modulus"] = report.modulus_value;
    j["bound"] = report.bound;
    j["holds"] = report.holds;
    return j;
}

nlohmann::json report_json(const SparseApproxResult& result) {
    nlohmann::json j;
    j["report"] = report_json(result.report);
    j["projection_error"] = result.projection_error;
    j["filter_error"] = result.filter_error;
    j["chain_holds"] = result.chain_holds;
    return j;
}

nlohmann::json kernel_json(const FilterKernel& kernel, bool include_table) {
    nlohmann::json j;
    j["order"] = kernel.order();
    j["normalizer"] = kernel.normalizer();
    if (include_table) {
        nlohmann::json table = nlohmann::json::array();
        for (const auto& [xi, value] : kernel.transform_table()) {
            table.push_back({xi, value});
        }
        j["table"] = table;
    }
    return j;
}

} // namespace gpw
