#include "seplat/digraph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "seplat/errors.hpp"

namespace seplat {

bool contains(const VertexSet& set, Vertex v) {
    return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& lhs, const VertexSet& rhs) {
    VertexSet out;
    out.reserve(lhs.size() + rhs.size());
    std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& lhs, const VertexSet& rhs) {
    VertexSet out;
    out.reserve(lhs.size());
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& lhs, const VertexSet& rhs) {
    VertexSet out;
    std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
    return out;
}

VertexSet normalized(std::vector<Vertex> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> dedup_edges(int order,
                                                   const std::vector<std::pair<Vertex, Vertex>>& raw) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& [from, to] : raw) {
        if (from < 0 || from >= order || to < 0 || to >= order)
            throw InputError("edge endpoint out of range");
        if (from == to)
            throw InputError("self-loop rejected");
        seen.insert({from, to});
    }
    return {seen.begin(), seen.end()};
}

} // namespace

Digraph Digraph::from_indexed(std::vector<std::string> vertex_labels,
                              const std::vector<std::pair<Vertex, Vertex>>& edge_list,
                              VertexSet sources, VertexSet sinks) {
    Digraph d;
    d.labels_ = std::move(vertex_labels);
    {
        std::unordered_set<std::string> uniq(d.labels_.begin(), d.labels_.end());
        if (uniq.size() != d.labels_.size())
            throw InputError("duplicate vertex label");
    }
    const int n = d.order();
    d.out_.assign(n, {});
    d.in_.assign(n, {});
    for (const auto& [from, to] : dedup_edges(n, edge_list)) {
        d.out_[from].push_back(to);
        d.in_[to].push_back(from);
        ++d.edge_count_;
    }
    for (auto& adj : d.out_) std::sort(adj.begin(), adj.end());
    for (auto& adj : d.in_) std::sort(adj.begin(), adj.end());

    d.sources_ = normalized(std::move(sources));
    d.sinks_ = normalized(std::move(sinks));
    d.source_flag_.assign(n, 0);
    d.sink_flag_.assign(n, 0);
    for (Vertex v : d.sources_) {
        if (v < 0 || v >= n) throw InputError("source vertex out of range");
        d.source_flag_[v] = 1;
    }
    for (Vertex v : d.sinks_) {
        if (v < 0 || v >= n) throw InputError("sink vertex out of range");
        d.sink_flag_[v] = 1;
    }
    return d;
}

Digraph::Digraph(const std::vector<std::string>& vertex_labels,
                 const std::vector<std::pair<std::string, std::string>>& edge_list,
                 const std::vector<std::string>& source_labels,
                 const std::vector<std::string>& sink_labels) {
    std::unordered_map<std::string, Vertex> index;
    index.reserve(vertex_labels.size());
    for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
        if (!index.emplace(vertex_labels[i], static_cast<Vertex>(i)).second)
            throw InputError("duplicate vertex label: " + vertex_labels[i]);
    }
    auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw InputError("unknown vertex label: " + name);
        return it->second;
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(edge_list.size());
    for (const auto& [from, to] : edge_list) edges.emplace_back(lookup(from), lookup(to));
    VertexSet sources, sinks;
    for (const auto& name : source_labels) sources.push_back(lookup(name));
    for (const auto& name : sink_labels) sinks.push_back(lookup(name));
    *this = from_indexed(vertex_labels, edges, std::move(sources), std::move(sinks));
}

void Digraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
        throw InputError("vertex index out of range: " + std::to_string(v));
}

const std::string& Digraph::label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
}

std::vector<std::string> Digraph::labels(const VertexSet& set) const {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (Vertex v : set) out.push_back(label(v));
    return out;
}

std::optional<Vertex> Digraph::find(const std::string& vertex_label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == vertex_label) return static_cast<Vertex>(i);
    return std::nullopt;
}

Vertex Digraph::vertex(const std::string& vertex_label) const {
    if (auto v = find(vertex_label)) return *v;
    throw InputError("unknown vertex label: " + vertex_label);
}

VertexSet Digraph::vertex_set(const std::vector<std::string>& vertex_labels) const {
    std::vector<Vertex> out;
    out.reserve(vertex_labels.size());
    for (const auto& name : vertex_labels) out.push_back(vertex(name));
    return normalized(std::move(out));
}

const std::vector<Vertex>& Digraph::out(Vertex v) const {
    check_vertex(v);
    return out_[v];
}

const std::vector<Vertex>& Digraph::in(Vertex v) const {
    check_vertex(v);
    return in_[v];
}

bool Digraph::has_edge(Vertex from, Vertex to) const {
    check_vertex(from);
    check_vertex(to);
    return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex v = 0; v < order(); ++v)
        for (Vertex w : out_[v]) out.emplace_back(v, w);
    return out;
}

bool Digraph::is_source(Vertex v) const {
    check_vertex(v);
    return source_flag_[v] != 0;
}

bool Digraph::is_sink(Vertex v) const {
    check_vertex(v);
    return sink_flag_[v] != 0;
}

Digraph Digraph::reversed() const {
    std::vector<std::pair<Vertex, Vertex>> rev;
    rev.reserve(edge_count_);
    for (const auto& [from, to] : edges()) rev.emplace_back(to, from);
    return from_indexed(labels_, rev, sinks_, sources_);
}

Digraph Digraph::with_terminals(VertexSet sources, VertexSet sinks) const {
    return from_indexed(labels_, edges(), std::move(sources), std::move(sinks));
}

std::string Digraph::format_set(const VertexSet& set) const {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += label(set[i]);
    }
    out += "}";
    return out;
}

void validate_path(const Digraph& d, const Path& p) {
    if (p.empty()) throw InputError("empty vertex sequence is not a path");
    std::unordered_set<Vertex> seen;
    for (Vertex v : p) {
        if (v < 0 || v >= d.order())
            throw InputError("path vertex out of range");
        if (!seen.insert(v).second)
            throw InputError("repeated vertex in path: " + d.label(v));
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!d.has_edge(p[i], p[i + 1]))
            throw InputError("non-edge step in path: " + d.label(p[i]) + " -> " + d.label(p[i + 1]));
}

bool is_ab_path(const Digraph& d, const Path& p) {
    validate_path(d, p);
    if (!d.is_source(p.front()) || !d.is_sink(p.back())) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0 && d.is_source(p[i])) return false;
        if (i + 1 < p.size() && d.is_sink(p[i])) return false;
    }
    return true;
}

PathSystem PathSystem::checked(const Digraph& d, std::vector<Path> raw) {
    std::unordered_set<Vertex> used;
    for (const Path& p : raw) {
        if (!is_ab_path(d, p))
            throw InputError("path system member is not an A->B path");
        for (Vertex v : p) {
            if (!used.insert(v).second)
                throw InputError("path system members share vertex: " + d.label(v));
        }
    }
    std::sort(raw.begin(), raw.end());
    PathSystem ps;
    ps.paths = std::move(raw);
    return ps;
}

VertexSet v_first(const PathSystem& ps) {
    std::vector<Vertex> out;
    out.reserve(ps.paths.size());
    for (const Path& p : ps.paths) out.push_back(p.front());
    return normalized(std::move(out));
}

VertexSet v_last(const PathSystem& ps) {
    std::vector<Vertex> out;
    out.reserve(ps.paths.size());
    for (const Path& p : ps.paths) out.push_back(p.back());
    return normalized(std::move(out));
}

VertexSet reachable(const Digraph& d, const VertexSet& sources, const VertexSet& forbidden) {
    std::vector<char> banned(d.order(), 0);
    for (Vertex v : forbidden) {
        if (v < 0 || v >= d.order()) throw InputError("forbidden vertex out of range");
        banned[v] = 1;
    }
    std::vector<char> seen(d.order(), 0);
    std::vector<Vertex> queue;
    for (Vertex v : sources) {
        if (v < 0 || v >= d.order()) throw InputError("source vertex out of range");
        if (!banned[v] && !seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : d.out(queue[head])) {
            if (!banned[w] && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < d.order(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

std::vector<Path> enumerate_ab_paths(const Digraph& d, std::size_t max_vertices) {
    if (static_cast<std::size_t>(d.order()) > max_vertices)
        throw GuardError("enumerate_ab_paths: " + std::to_string(d.order()) +
                         " vertices exceed guard " + std::to_string(max_vertices) +
                         " (path enumeration is exponential)");
    std::vector<Path> result;
    std::vector<char> on_path(d.order(), 0);
    Path current;

    // Edges into A and out of B never occur on an A->B path, so the search
    // simply refuses those steps and emits on the first B vertex reached.
    auto dfs = [&](auto&& self, Vertex v) -> void {
        on_path[v] = 1;
        current.push_back(v);
        if (d.is_sink(v)) {
            result.push_back(current);
        } else {
            for (Vertex w : d.out(v))
                if (!on_path[w] && !d.is_source(w)) self(self, w);
        }
        current.pop_back();
        on_path[v] = 0;
    };
    for (Vertex a : d.source_set()) dfs(dfs, a);
    return result;
}

} // namespace seplat
