#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seplat {

using Vertex = std::int32_t;

/// Vertex set, kept sorted ascending with no duplicates.
using VertexSet = std::vector<Vertex>;

/// Vertex sequence of length >= 1. A single vertex is a valid path.
using Path = std::vector<Vertex>;

bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& lhs, const VertexSet& rhs);
VertexSet set_difference(const VertexSet& lhs, const VertexSet& rhs);
VertexSet set_intersection(const VertexSet& lhs, const VertexSet& rhs);

/// Sorts and deduplicates arbitrary vertex lists into a VertexSet.
VertexSet normalized(std::vector<Vertex> values);

/// Finite digraph with designated terminal sets A (sources) and B (sinks).
///
/// Vertices are opaque string labels; their total order is the order they
/// were listed at construction, and every set-valued result in the library
/// is emitted in that order. Self-loops are rejected, parallel edges
/// collapse to one. Immutable after construction, so concurrent readers are
/// safe.
class Digraph {
public:
    Digraph() = default;

    /// Label-based construction. Throws InputError on duplicate labels,
    /// self-loops, unknown endpoints, or terminal vertices outside V.
    Digraph(const std::vector<std::string>& vertex_labels,
            const std::vector<std::pair<std::string, std::string>>& edge_list,
            const std::vector<std::string>& source_labels,
            const std::vector<std::string>& sink_labels);

    /// Index-based construction for programmatic callers.
    static Digraph from_indexed(std::vector<std::string> vertex_labels,
                                const std::vector<std::pair<Vertex, Vertex>>& edge_list,
                                VertexSet sources, VertexSet sinks);

    int order() const { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& label(Vertex v) const;
    std::vector<std::string> labels(const VertexSet& set) const;
    std::optional<Vertex> find(const std::string& vertex_label) const;
    /// Like find() but throws InputError for unknown labels.
    Vertex vertex(const std::string& vertex_label) const;
    VertexSet vertex_set(const std::vector<std::string>& vertex_labels) const;

    const std::vector<Vertex>& out(Vertex v) const;
    const std::vector<Vertex>& in(Vertex v) const;
    bool has_edge(Vertex from, Vertex to) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    const VertexSet& source_set() const { return sources_; }
    const VertexSet& sink_set() const { return sinks_; }
    bool is_source(Vertex v) const;
    bool is_sink(Vertex v) const;

    /// Same vertices, every edge reversed, A and B swapped.
    Digraph reversed() const;
    /// Same vertices and edges, new terminal sets.
    Digraph with_terminals(VertexSet sources, VertexSet sinks) const;

    /// "{a,x}" rendering used in messages and lattice labels.
    std::string format_set(const VertexSet& set) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<char> source_flag_;
    std::vector<char> sink_flag_;
    VertexSet sources_;
    VertexSet sinks_;
    std::size_t edge_count_ = 0;

    void check_vertex(Vertex v) const;
};

/// Set of pairwise vertex-disjoint A->B paths, sorted lexicographically.
struct PathSystem {
    std::vector<Path> paths;

    std::size_t size() const { return paths.size(); }

    /// Validates that every member is an A->B path of `d` and that members
    /// are pairwise vertex-disjoint; sorts for determinism.
    static PathSystem checked(const Digraph& d, std::vector<Path> raw);
};

/// Default vertex-count guard for exhaustive path enumeration.
inline constexpr std::size_t kPathEnumerationGuard = 20;

/// Structural validation: nonempty, distinct vertices, consecutive edges.
/// Throws InputError otherwise.
void validate_path(const Digraph& d, const Path& p);

/// True iff p's first vertex is its only vertex in A and its last vertex is
/// its only vertex in B. A single vertex of A∩B qualifies. Structurally
/// invalid sequences are rejected with InputError.
bool is_ab_path(const Digraph& d, const Path& p);

VertexSet v_first(const PathSystem& ps);
VertexSet v_last(const PathSystem& ps);

/// All vertices reachable from `sources` \ `forbidden` by directed walks
/// avoiding `forbidden` entirely. Plain reachability; no A->B semantics.
VertexSet reachable(const Digraph& d, const VertexSet& sources, const VertexSet& forbidden);

/// Every A->B path of d, in lexicographic vertex-order. Exponential; refuses
/// graphs with more than `max_vertices` vertices (GuardError).
std::vector<Path> enumerate_ab_paths(const Digraph& d,
                                     std::size_t max_vertices = kPathEnumerationGuard);

} // namespace seplat
