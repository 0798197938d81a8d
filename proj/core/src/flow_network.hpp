#pragma once

#include <vector>

#include "seplat/digraph.hpp"

namespace seplat::detail {

/// Unit-capacity vertex-split flow network between two terminal sets X, Y of
/// a digraph. Encodes the exact X->Y path semantics: arcs into X and out of
/// Y are dropped, every vertex carries capacity one across its in-copy ->
/// out-copy arc, and terminal/edge arcs are uncuttable, so minimum arc cuts
/// correspond exactly to vertex sets.
///
/// Deterministic: augmenting paths are shortest, tie-broken by vertex order.
class UnitFlowNetwork {
public:
    UnitFlowNetwork(const Digraph& d, VertexSet sources, VertexSet sinks);

    /// Value of a maximum flow = maximum number of disjoint X->Y paths.
    int max_flow();

    /// Decomposes the maximum flow into vertex-disjoint X->Y paths.
    std::vector<Path> disjoint_paths();

    /// Source-side canonical minimum vertex cut: vertices whose in-copy is
    /// residual-reachable from the super-source and whose out-copy is not.
    VertexSet source_side_cut();

private:
    struct Arc {
        int to;
        int cap;
        int flow;
    };

    int node_in(Vertex v) const { return 2 * v; }
    int node_out(Vertex v) const { return 2 * v + 1; }

    bool augment();
    std::vector<char> residual_reachable() const;

    const Digraph& graph_;
    VertexSet sources_;
    VertexSet sinks_;
    int super_source_;
    int super_sink_;
    std::vector<Arc> arcs_;                 // arc 2k+1 is the reverse of arc 2k
    std::vector<std::vector<int>> adjacency_;
    bool solved_ = false;
    int value_ = 0;
};

} // namespace seplat::detail
