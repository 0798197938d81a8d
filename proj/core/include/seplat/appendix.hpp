#pragma once

#include <string>
#include <vector>

#include "seplat/digraph.hpp"

namespace seplat {

/// Finite index window of a doubly-infinite two-column family: sources a_i
/// and sinks b_i for |i| <= n plus the two middle vertices u, v, with edges
/// a_0->u->b_1, a_0->v->b_-1 and a_i->b_i, a_i->b_{i+1} on the positive side
/// (mirrored negatively). Its point: two Erdős–Menger separations whose
/// infimum contains both u and v, hence is not Erdős–Menger itself.
///
/// Every A->B path has at most three vertices and edge patterns are
/// translation-invariant away from index 0, so any claim about paths
/// touching index |i| <= n-1 is decided exactly inside the window.
class Figure1Window {
public:
    /// Refuses (InputError) n < 3: too small for the interior claims.
    explicit Figure1Window(int half_width);

    int half_width() const { return half_width_; }
    const Digraph& graph() const { return graph_; }

    Vertex a(int i) const;
    Vertex b(int i) const; // i != 0; there is no b_0
    Vertex u() const { return u_; }
    Vertex v() const { return v_; }

    /// S = {..., b_-2, b_-1, u, a_1, a_2, ...} restricted to the window.
    VertexSet s() const;
    /// T = {..., a_-2, a_-1, v, b_1, b_2, ...} restricted to the window.
    VertexSet t() const;
    /// inf {S, T} = (A \ {a_0}) ∪ {u, v} restricted to the window.
    VertexSet inf_st() const;
    /// {... a_-1 b_-1, a_0 u b_1, a_1 b_2, ...} restricted to the window.
    PathSystem s_witness() const;
    /// {... a_-1 b_-2, a_0 v b_-1, a_1 b_1, ...} restricted to the window.
    PathSystem t_witness() const;

    /// |index| of a window vertex (0 for u, v).
    int index_of(Vertex vertex) const;

private:
    int half_width_;
    Digraph graph_;
    std::vector<Vertex> a_;   // a_[i + n] = a_i
    std::vector<Vertex> b_;   // b_[i + n] = b_i, slot n unused
    Vertex u_ = -1;
    Vertex v_ = -1;
};

struct Figure1Claim {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Figure1Report {
    int half_width = 0;
    int interior_range = 0; // claims touching |i| <= interior_range are exact
    std::vector<Figure1Claim> claims;
    VertexSet window_inf;
    bool all_pass = false;
};

/// Checks, exactly on the window: (i) S and T separate and are minimal at
/// interior indices, (ii) the two witness systems are disjoint A->B systems
/// orthogonal to S resp. T (interior-exact), (iii) the infimum formula on
/// {S, T} yields (A \ {a_0}) ∪ {u, v}, and (iv) every A->B path through u or
/// through v starts at a_0, so no disjoint system is orthogonal to a set
/// containing both u and v — the infimum is not an Erdős–Menger separation.
Figure1Report figure1_check(int half_width);

} // namespace seplat
