#ifndef GPW_IO_HPP
#define GPW_IO_HPP

#include "gpw/filtering.hpp"
#include "gpw/graph.hpp"
#include "gpw/inequalities.hpp"
#include "gpw/sampling.hpp"
#include "gpw/spectral.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gpw {

/// Edge list loaded from disk.  Vertex labels may be arbitrary nonnegative
/// integers; they are compressed to 0..N-1 in sorted order, and `labels`
/// maps the dense index back to the original label.
struct EdgeListData {
    Graph graph;
    std::vector<long long> labels;
    bool relabeled = false;
};

/// Text format: one "u v" pair per line, '#' starts a comment, blank lines
/// are skipped.  Malformed lines raise ParseError naming the line number.
EdgeListData read_edge_list(const std::string& path);
void write_edge_list(const std::string& path, const Graph& graph);

/// CSV with header "vertex,re" or "vertex,re,im"; every vertex must appear
/// exactly once.  Pass expected_size < 0 to infer the size from the rows.
Signal read_signal(const std::string& path, Eigen::Index expected_size = -1);
void write_signal(const std::string& path, const Signal& f);

/// Same CSV layout as a signal, but rows may cover any vertex subset; used
/// for sample values keyed by vertex.
std::map<int, Complex> read_samples(const std::string& path);

/// One vertex id per line, '#' comments allowed; returned sorted, duplicates
/// raise ParseError.
std::vector<int> read_vertex_set(const std::string& path);
void write_vertex_set(const std::string& path, const std::vector<int>& set);

/// Frame rows go to `path` as CSV ("vertex,theta_0,...,theta_{N-1}", one row
/// per set vertex); bandwidth, set, and certificate go to `path + ".json"`.
void write_dual_frame(const std::string& path, const DualFrame& frame);
DualFrame read_dual_frame(const std::string& path);

nlohmann::json report_json(const PoincareReport& report);
nlohmann::json report_json(const PlancherelPolyaReport& report);
nlohmann::json report_json(const SamplingCertificate& certificate);
nlohmann::json report_json(const ApproxReport& report);
nlohmann::json report_json(const SparseApproxResult& result);
nlohmann::json kernel_json(const FilterKernel& kernel, bool include_table = false);

} // namespace gpw

#endif // GPW_IO_HPP
