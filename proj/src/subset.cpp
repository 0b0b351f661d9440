#include "gpw/subset.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace gpw {

SubsetGeometry::SubsetGeometry(const Graph& g, std::vector<int> set, int levels) {
    if (levels < 0) raise(ErrorCode::InvalidArgument, "negative closure level");
    vertex_count_ = g.vertex_count();
    auto mask = detail::subset_mask(vertex_count_, set, "subset_geometry");
    std::sort(set.begin(), set.end());
    const bool full = set.size() == static_cast<std::size_t>(vertex_count_);
    closures_.push_back(std::move(set));
    if (full) exhaustion_level_ = 0;

    for (int m = 0; m < levels; ++m) {
        if (exhaustion_level_)
            raise(ErrorCode::LevelBeyondExhaustion,
                  "closure reaches the whole graph at level " +
                      std::to_string(*exhaustion_level_) + ", cannot iterate to level " +
                      std::to_string(levels));
        push_level(g);
        if (closures_.back().size() == static_cast<std::size_t>(vertex_count_))
            exhaustion_level_ = m + 1;
    }
}

SubsetGeometry SubsetGeometry::to_exhaustion(const Graph& g, std::vector<int> set) {
    SubsetGeometry geom(g, std::move(set), 0);
    int m = 0;
    while (!geom.exhaustion_level_) {
        geom.push_level(g);
        ++m;
        if (geom.closures_.back().size() == static_cast<std::size_t>(geom.vertex_count_))
            geom.exhaustion_level_ = m;
    }
    return geom;
}

// Derives b(cl^L), the D/K profile of level L, and cl^{L+1} from the deepest
// stored closure.
void SubsetGeometry::push_level(const Graph& g) {
    const std::size_t level = boundaries_.size();
    const auto& closure = closures_[level];

    std::vector<char> in_closure(static_cast<std::size_t>(vertex_count_), 0);
    for (int v : closure) in_closure[static_cast<std::size_t>(v)] = 1;

    std::vector<int> boundary;
    std::vector<int> bconn(static_cast<std::size_t>(vertex_count_), -1);
    for (int v = 0; v < vertex_count_; ++v) {
        if (in_closure[static_cast<std::size_t>(v)]) continue;
        int inward = 0;
        for (int u : g.neighbors(v))
            if (in_closure[static_cast<std::size_t>(u)]) ++inward;
        if (inward > 0) {
            boundary.push_back(v);
            bconn[static_cast<std::size_t>(v)] = inward;
        }
    }

    std::vector<char> in_boundary(static_cast<std::size_t>(vertex_count_), 0);
    for (int v : boundary) in_boundary[static_cast<std::size_t>(v)] = 1;

    std::vector<int> rel_degree(static_cast<std::size_t>(vertex_count_), -1);
    int D = 0;
    for (int v : closure) {
        int outward = 0;
        for (int u : g.neighbors(v))
            if (in_boundary[static_cast<std::size_t>(u)]) ++outward;
        rel_degree[static_cast<std::size_t>(v)] = outward;
        D = std::max(D, outward);
    }
    int K = 0;
    if (!boundary.empty()) {
        K = std::numeric_limits<int>::max();
        for (int v : boundary) K = std::min(K, bconn[static_cast<std::size_t>(v)]);
    }

    std::vector<int> next = closure;
    next.insert(next.end(), boundary.begin(), boundary.end());
    std::sort(next.begin(), next.end());

    boundaries_.push_back(std::move(boundary));
    rel_degree_.push_back(std::move(rel_degree));
    bconn_.push_back(std::move(bconn));
    max_rel_degree_.push_back(D);
    min_bconn_.push_back(K);
    closures_.push_back(std::move(next));
}

void SubsetGeometry::require_level(int m, bool need_boundary) const {
    if (m < 0)
        raise(ErrorCode::InvalidArgument, "negative closure level " + std::to_string(m));
    if (need_boundary && exhaustion_level_ && m >= *exhaustion_level_)
        raise(ErrorCode::LevelBeyondExhaustion,
              "b(cl^" + std::to_string(m) + ") is empty: closure already covers the graph");
    const int deepest = need_boundary ? static_cast<int>(boundaries_.size()) - 1 : levels();
    if (m > deepest)
        raise(ErrorCode::InvalidArgument, "closure level " + std::to_string(m) +
                                              " not computed (deepest is " +
                                              std::to_string(deepest) + ")");
}

const std::vector<int>& SubsetGeometry::closure(int m) const {
    require_level(m, false);
    return closures_[static_cast<std::size_t>(m)];
}

const std::vector<int>& SubsetGeometry::boundary(int m) const {
    require_level(m, true);
    return boundaries_[static_cast<std::size_t>(m)];
}

bool SubsetGeometry::closure_is_full(int m) const {
    require_level(m, false);
    return closures_[static_cast<std::size_t>(m)].size() ==
           static_cast<std::size_t>(vertex_count_);
}

int SubsetGeometry::relative_degree(int m, int v) const {
    require_level(m, true);
    if (v < 0 || v >= vertex_count_)
        raise(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
    int d = rel_degree_[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)];
    if (d < 0)
        raise(ErrorCode::InvalidArgument,
              "vertex " + std::to_string(v) + " outside cl^" + std::to_string(m));
    return d;
}

int SubsetGeometry::boundary_connectivity(int m, int v) const {
    require_level(m, true);
    if (v < 0 || v >= vertex_count_)
        raise(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
    int k = bconn_[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)];
    if (k < 0)
        raise(ErrorCode::InvalidArgument,
              "vertex " + std::to_string(v) + " outside b(cl^" + std::to_string(m) + ")");
    return k;
}

int SubsetGeometry::max_relative_degree(int m) const {
    require_level(m, true);
    return max_rel_degree_[static_cast<std::size_t>(m)];
}

int SubsetGeometry::min_boundary_connectivity(int m) const {
    require_level(m, true);
    return min_bconn_[static_cast<std::size_t>(m)];
}

} // namespace gpw
