#ifndef GPW_GRAPH_HPP
#define GPW_GRAPH_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gpw/errors.hpp"

namespace gpw {

/// A signal is one complex value per vertex, indexed by the dense vertex ids
/// 0..N-1 of the graph it lives on.  All operations that pair a signal with a
/// graph check the sizes and throw GraphMismatch on disagreement.
using Signal = Eigen::VectorXcd;

using Complex = std::complex<double>;

/// Finite, simple, undirected, connected graph over dense vertex ids 0..N-1.
///
/// Immutable after construction.  Adjacency is stored as sorted neighbor
/// lists; the Laplacian is applied matrix-free (see laplacian_apply) so no
/// matrix of the graph is ever materialized here.
class Graph {
public:
    /// Validates and ingests an edge list.  Throws:
    ///   SelfLoop       on an edge (v, v)
    ///   DuplicateEdge  on a repeated edge in either orientation
    ///   InvalidVertex  on an endpoint outside [0, vertex_count)
    ///   Disconnected   when the graph is not connected (skipped if
    ///                  require_connected is false; most of the analysis in
    ///                  this library assumes connectivity, so opting out is
    ///                  only useful for assembling subgraph views)
    Graph(Eigen::Index vertex_count,
          std::vector<std::pair<int, int>> edges,
          bool require_connected = true);

    /// Builds a graph whose vertex count is 1 + the largest endpoint.
    static Graph from_edges(std::vector<std::pair<int, int>> edges,
                            bool require_connected = true);

    Eigen::Index vertex_count() const noexcept { return static_cast<Eigen::Index>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const noexcept { return max_degree_; }

    /// Edges as (min, max) pairs, lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    bool is_connected() const noexcept { return connected_; }

    bool adjacent(int u, int v) const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    int max_degree_ = 0;
    bool connected_ = false;
};

/// Convenience constructors for the standard test-bench graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaf_count); // vertex 0 is the hub
Graph complete_graph(int n);

/// Applies the combinatorial Laplacian matrix-free:
///   (L f)(v) = sum over neighbors u of v of (f(v) - f(u))
///            = deg(v) f(v) - sum_{u ~ v} f(u).
Signal laplacian_apply(const Graph& g, const Signal& f);

/// l2 norm of the difference gradient,
///   |nabla f|^2 = sum over ordered adjacent pairs (v, u) of |f(v) - f(u)|^2,
/// i.e. every edge contributes twice.  That normalization is the one under
/// which |nabla f|^2 = 2 <L f, f> holds exactly, which is what ties the
/// gradient to the smoothness norm |L^(1/2) f| everywhere downstream.
/// The restricted form keeps only pairs with both endpoints inside W.
double gradient_norm(const Graph& g, const Signal& f);
double gradient_norm(const Graph& g, const Signal& f, const std::vector<int>& W);

/// Inner product with the convention <f, g> = sum_v f(v) * conj(g(v)).
inline Complex inner(const Signal& f, const Signal& g) {
    if (f.size() != g.size())
        raise(ErrorCode::GraphMismatch, "inner product of signals of different sizes");
    return g.dot(f); // Eigen conjugates its first argument
}

inline double norm(const Signal& f) { return f.norm(); }

namespace detail {
void check_signal(const Graph& g, const Signal& f, const char* where);
std::vector<char> subset_mask(Eigen::Index n, const std::vector<int>& subset,
                              const char* where, bool allow_empty = false);
} // namespace detail

} // namespace gpw

#endif // GPW_GRAPH_HPP
