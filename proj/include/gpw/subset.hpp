#ifndef GPW_SUBSET_HPP
#define GPW_SUBSET_HPP

#include <optional>
#include <vector>

#include "gpw/graph.hpp"

namespace gpw {

/// Boundary / closure combinatorics of a vertex subset S.
///
/// Level m holds the m-fold closure cl^m(S) (cl^0 = S, cl^{m+1} = cl^m
/// together with every vertex adjacent to it) and its vertex boundary
/// b(cl^m(S)) = { v outside cl^m : v has a neighbor in cl^m }.  On top of the
/// sets, two integer profiles drive all the constants in this library:
///
///   d_m(v)  for v in cl^m(S):    neighbors of v inside b(cl^m(S))
///   k_m(v)  for v in b(cl^m(S)): neighbors of v inside cl^m(S)
///
/// with extremes D_m = max_v d_m(v) and K_m = min_v k_m(v).  Whenever the
/// boundary is nonempty, K_m >= 1 by construction.
///
/// Levels exist up to the exhaustion level e, the first m with cl^m(S) = V;
/// b(cl^e) is empty, so D_e/K_e are undefined and asking for them (or for
/// deeper levels) throws LevelBeyondExhaustion.
class SubsetGeometry {
public:
    /// Computes closures cl^0..cl^levels and the D/K profiles of levels
    /// 0..levels-1, i.e. everything a depth-`levels` iteration needs.  Throws
    /// EmptySubset, InvalidVertex, and LevelBeyondExhaustion when the closure
    /// reaches the whole vertex set strictly before level `levels` (the
    /// boundary of a full closure is empty, so its profile does not exist).
    /// levels == exhaustion level is fine and is exactly the global case.
    SubsetGeometry(const Graph& g, std::vector<int> set, int levels);

    /// Computes every level until the closure reaches the whole vertex set.
    static SubsetGeometry to_exhaustion(const Graph& g, std::vector<int> set);

    Eigen::Index vertex_count() const noexcept { return vertex_count_; }

    /// Deepest computed closure level.
    int levels() const noexcept { return static_cast<int>(closures_.size()) - 1; }

    const std::vector<int>& set() const { return closures_.front(); }
    const std::vector<int>& closure(int m) const;
    const std::vector<int>& boundary(int m) const;
    bool closure_is_full(int m) const;

    int relative_degree(int m, int v) const;        // d_m(v)
    int boundary_connectivity(int m, int v) const;  // k_m(v)
    int max_relative_degree(int m) const;           // D_m
    int min_boundary_connectivity(int m) const;     // K_m

    /// The exhaustion level, when it lies within the computed range.
    std::optional<int> exhaustion_level() const noexcept { return exhaustion_level_; }

private:
    void push_level(const Graph& g);
    void require_level(int m, bool need_boundary) const;

    Eigen::Index vertex_count_ = 0;
    std::vector<std::vector<int>> closures_;    // cl^0 .. cl^L, each sorted
    std::vector<std::vector<int>> boundaries_;  // b(cl^m), sorted (empty iff full)
    std::vector<std::vector<int>> rel_degree_;  // per level: size N, -1 outside cl^m
    std::vector<std::vector<int>> bconn_;       // per level: size N, -1 outside b(cl^m)
    std::vector<int> max_rel_degree_;           // D_m
    std::vector<int> min_bconn_;                // K_m
    std::optional<int> exhaustion_level_;
};

inline SubsetGeometry subset_geometry(const Graph& g, std::vector<int> set, int levels) {
    return SubsetGeometry(g, std::move(set), levels);
}

} // namespace gpw

#endif // GPW_SUBSET_HPP
