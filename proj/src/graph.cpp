#include "gpw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gpw {

Graph::Graph(Eigen::Index vertex_count, std::vector<std::pair<int, int>> edges,
             bool require_connected) {
    if (vertex_count <= 0)
        raise(ErrorCode::InvalidArgument, "graph needs at least one vertex");

    for (auto& [u, v] : edges) {
        if (u == v)
            raise(ErrorCode::SelfLoop, "edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            raise(ErrorCode::InvalidVertex,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside 0.." +
                      std::to_string(vertex_count - 1));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        raise(ErrorCode::DuplicateEdge,
              "edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");

    adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
    for (auto [u, v] : edges) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
    }
    edges_ = std::move(edges);

    // Connectivity via BFS from vertex 0.
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int u : adjacency_[static_cast<std::size_t>(queue[head])]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
            }
        }
    }
    connected_ = queue.size() == static_cast<std::size_t>(vertex_count);
    if (require_connected && !connected_)
        raise(ErrorCode::Disconnected,
              "graph has " + std::to_string(vertex_count - static_cast<Eigen::Index>(queue.size())) +
                  " vertices unreachable from vertex 0");
}

Graph Graph::from_edges(std::vector<std::pair<int, int>> edges, bool require_connected) {
    int n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
    return Graph(n, std::move(edges), require_connected);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count())
        raise(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
    return adjacency_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = neighbors(u);
    if (v < 0 || v >= vertex_count())
        raise(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) raise(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaf_count) {
    if (leaf_count < 1) raise(ErrorCode::InvalidArgument, "star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaf_count; ++v) edges.emplace_back(0, v);
    return Graph(leaf_count + 1, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

namespace detail {

void check_signal(const Graph& g, const Signal& f, const char* where) {
    if (f.size() != g.vertex_count())
        raise(ErrorCode::GraphMismatch,
              std::string(where) + ": signal has " + std::to_string(f.size()) +
                  " entries, graph has " + std::to_string(g.vertex_count()) + " vertices");
}

std::vector<char> subset_mask(Eigen::Index n, const std::vector<int>& subset,
                              const char* where, bool allow_empty) {
    if (!allow_empty && subset.empty())
        raise(ErrorCode::EmptySubset, std::string(where) + ": vertex subset is empty");
    std::vector<char> mask(static_cast<std::size_t>(n), 0);
    for (int v : subset) {
        if (v < 0 || v >= n)
            raise(ErrorCode::InvalidVertex, std::string(where) + ": vertex " + std::to_string(v));
        if (mask[static_cast<std::size_t>(v)])
            raise(ErrorCode::InvalidArgument,
                  std::string(where) + ": vertex " + std::to_string(v) + " repeated in subset");
        mask[static_cast<std::size_t>(v)] = 1;
    }
    return mask;
}

} // namespace detail

Signal laplacian_apply(const Graph& g, const Signal& f) {
    detail::check_signal(g, f, "laplacian_apply");
    Signal out(f.size());
    for (Eigen::Index v = 0; v < f.size(); ++v) {
        const auto& nbrs = g.neighbors(static_cast<int>(v));
        Complex acc = static_cast<double>(nbrs.size()) * f[v];
        for (int u : nbrs) acc -= f[u];
        out[v] = acc;
    }
    return out;
}

double gradient_norm(const Graph& g, const Signal& f) {
    detail::check_signal(g, f, "gradient_norm");
    double sq = 0.0;
    for (auto [u, v] : g.edges()) sq += 2.0 * std::norm(f[u] - f[v]);
    return std::sqrt(sq);
}

double gradient_norm(const Graph& g, const Signal& f, const std::vector<int>& W) {
    detail::check_signal(g, f, "gradient_norm");
    auto mask = detail::subset_mask(g.vertex_count(), W, "gradient_norm");
    double sq = 0.0;
    for (auto [u, v] : g.edges())
        if (mask[static_cast<std::size_t>(u)] && mask[static_cast<std::size_t>(v)])
            sq += 2.0 * std::norm(f[u] - f[v]);
    return std::sqrt(sq);
}

} // namespace gpw
