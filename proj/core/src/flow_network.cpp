#include "flow_network.hpp"

#include <algorithm>
#include <limits>

#include "seplat/errors.hpp"

namespace seplat::detail {

namespace {
constexpr int kUncuttable = std::numeric_limits<int>::max() / 4;
}

UnitFlowNetwork::UnitFlowNetwork(const Digraph& d, VertexSet sources, VertexSet sinks)
    : graph_(d), sources_(std::move(sources)), sinks_(std::move(sinks)) {
    const int n = d.order();
    super_source_ = 2 * n;
    super_sink_ = 2 * n + 1;
    adjacency_.assign(2 * n + 2, {});

    auto add_arc = [&](int from, int to, int cap) {
        adjacency_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap, 0});
        adjacency_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0, 0});
    };

    std::vector<char> is_src(n, 0), is_snk(n, 0);
    for (Vertex v : sources_) is_src[v] = 1;
    for (Vertex v : sinks_) is_snk[v] = 1;

    for (Vertex v : sources_) add_arc(super_source_, node_in(v), kUncuttable);
    for (Vertex v = 0; v < n; ++v) add_arc(node_in(v), node_out(v), 1);
    for (Vertex v = 0; v < n; ++v) {
        if (is_snk[v]) continue; // no arcs out of Y
        for (Vertex w : d.out(v)) {
            if (is_src[w]) continue; // no arcs into X
            add_arc(node_out(v), node_in(w), kUncuttable);
        }
    }
    for (Vertex v : sinks_) add_arc(node_out(v), super_sink_, kUncuttable);
}

bool UnitFlowNetwork::augment() {
    std::vector<int> parent_arc(adjacency_.size(), -1);
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<int> queue{super_source_};
    seen[super_source_] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[super_sink_]; ++head) {
        const int u = queue[head];
        for (int arc_id : adjacency_[u]) {
            const Arc& arc = arcs_[arc_id];
            if (arc.cap - arc.flow <= 0 || seen[arc.to]) continue;
            seen[arc.to] = 1;
            parent_arc[arc.to] = arc_id;
            if (arc.to == super_sink_) break;
            queue.push_back(arc.to);
        }
    }
    if (!seen[super_sink_]) return false;
    for (int node = super_sink_; node != super_source_;) {
        const int arc_id = parent_arc[node];
        arcs_[arc_id].flow += 1;
        arcs_[arc_id ^ 1].flow -= 1;
        node = arcs_[arc_id ^ 1].to;
    }
    return true;
}

int UnitFlowNetwork::max_flow() {
    if (!solved_) {
        while (augment()) ++value_;
        solved_ = true;
    }
    return value_;
}

std::vector<Path> UnitFlowNetwork::disjoint_paths() {
    max_flow();
    // Each vertex carries at most one unit (in->out arc has capacity one), so
    // following positive flow from a saturated source arc is unambiguous and
    // any residual flow cycles are vertex-disjoint from the traced paths.
    std::vector<Arc> work = arcs_;
    std::vector<Path> paths;
    for (int arc_id : adjacency_[super_source_]) {
        if (arc_id & 1) continue;
        if (work[arc_id].flow <= 0) continue;
        work[arc_id].flow -= 1;
        Path path;
        int node = work[arc_id].to;
        while (node != super_sink_) {
            if (node % 2 == 1) path.push_back(static_cast<Vertex>(node / 2));
            int next_arc = -1;
            for (int candidate : adjacency_[node]) {
                if ((candidate & 1) == 0 && work[candidate].flow > 0) {
                    next_arc = candidate;
                    break;
                }
            }
            if (next_arc < 0)
                throw VerificationError("flow decomposition lost conservation");
            work[next_arc].flow -= 1;
            node = work[next_arc].to;
        }
        paths.push_back(std::move(path));
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

std::vector<char> UnitFlowNetwork::residual_reachable() const {
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<int> queue{super_source_};
    seen[super_source_] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int arc_id : adjacency_[queue[head]]) {
            const Arc& arc = arcs_[arc_id];
            if (arc.cap - arc.flow <= 0 || seen[arc.to]) continue;
            seen[arc.to] = 1;
            queue.push_back(arc.to);
        }
    }
    return seen;
}

VertexSet UnitFlowNetwork::source_side_cut() {
    max_flow();
    const std::vector<char> seen = residual_reachable();
    VertexSet cut;
    for (Vertex v = 0; v < graph_.order(); ++v)
        if (seen[node_in(v)] && !seen[node_out(v)]) cut.push_back(v);
    return cut;
}

} // namespace seplat::detail
