#include "seplat/menger.hpp"

#include <algorithm>
#include <unordered_map>

#include "flow_network.hpp"
#include "seplat/errors.hpp"
#include "seplat/separations.hpp"

namespace seplat {

const char* to_string(EmFailure reason) {
    switch (reason) {
        case EmFailure::NotSeparation: return "not a separation";
        case EmFailure::NotMinimal: return "not a minimal separation";
        case EmFailure::WrongCardinality: return "cardinality differs from the maximum disjoint path count";
    }
    return "unknown";
}

PathSystem max_disjoint_paths(const Digraph& d) {
    detail::UnitFlowNetwork net(d, d.source_set(), d.sink_set());
    net.max_flow();
    return PathSystem::checked(d, net.disjoint_paths());
}

std::optional<OrthogonalityWitness> is_orthogonal(const VertexSet& s, const PathSystem& ps) {
    if (s.size() != ps.size()) return std::nullopt;
    std::unordered_map<Vertex, int> owner;
    for (std::size_t i = 0; i < ps.paths.size(); ++i) {
        int hits = 0;
        for (Vertex v : ps.paths[i]) {
            if (contains(s, v)) {
                ++hits;
                owner[v] = static_cast<int>(i);
            }
        }
        if (hits != 1) return std::nullopt;
    }
    OrthogonalityWitness w;
    w.separation = s;
    w.system = ps;
    w.path_of.reserve(s.size());
    for (Vertex v : s) {
        auto it = owner.find(v);
        if (it == owner.end()) return std::nullopt;
        w.path_of.push_back(it->second);
    }
    return w;
}

namespace {

/// |S| disjoint A->B paths, each meeting S exactly once: a saturating A->S
/// half and a saturating S->B half, spliced at S. Both halves exist because
/// S is a minimum-cardinality separation.
PathSystem route_through(const Digraph& d, const VertexSet& s) {
    detail::UnitFlowNetwork front(d, d.source_set(), s);
    if (front.max_flow() != static_cast<int>(s.size()))
        throw VerificationError("A->S half flow does not saturate a minimum separation");
    detail::UnitFlowNetwork back(d, s, d.sink_set());
    if (back.max_flow() != static_cast<int>(s.size()))
        throw VerificationError("S->B half flow does not saturate a minimum separation");

    std::unordered_map<Vertex, Path> tail;
    for (Path& p : back.disjoint_paths()) tail[p.front()] = std::move(p);
    std::vector<Path> spliced;
    for (Path p : front.disjoint_paths()) {
        auto it = tail.find(p.back());
        if (it == tail.end())
            throw VerificationError("half systems do not meet at the separation");
        p.insert(p.end(), it->second.begin() + 1, it->second.end());
        spliced.push_back(std::move(p));
    }
    return PathSystem::checked(d, std::move(spliced));
}

} // namespace

EmCheck is_em_separation(const Digraph& d, const VertexSet& s) {
    EmCheck result;
    if (!is_separation(d, s)) {
        result.failure = EmFailure::NotSeparation;
        return result;
    }
    if (!is_minimal_separation(d, s)) {
        result.failure = EmFailure::NotMinimal;
        return result;
    }
    detail::UnitFlowNetwork net(d, d.source_set(), d.sink_set());
    if (net.max_flow() != static_cast<int>(s.size())) {
        result.failure = EmFailure::WrongCardinality;
        return result;
    }
    PathSystem system = route_through(d, s);
    result.witness = is_orthogonal(s, system);
    if (!result.witness)
        throw VerificationError("spliced system is not orthogonal to the separation");
    return result;
}

EmExtreme em_min(const Digraph& d) {
    detail::UnitFlowNetwork net(d, d.source_set(), d.sink_set());
    net.max_flow();
    const VertexSet cut = net.source_side_cut();
    PathSystem system = PathSystem::checked(d, net.disjoint_paths());
    auto witness = is_orthogonal(cut, system);
    if (!witness)
        throw VerificationError("canonical source-side cut is not orthogonal to the maximum system");
    return {cut, std::move(*witness)};
}

EmExtreme em_max(const Digraph& d) {
    const Digraph rev = d.reversed();
    detail::UnitFlowNetwork net(rev, rev.source_set(), rev.sink_set());
    net.max_flow();
    const VertexSet cut = net.source_side_cut();
    std::vector<Path> paths = net.disjoint_paths();
    for (Path& p : paths) std::reverse(p.begin(), p.end());
    PathSystem system = PathSystem::checked(d, std::move(paths));
    auto witness = is_orthogonal(cut, system);
    if (!witness)
        throw VerificationError("canonical sink-side cut is not orthogonal to the maximum system");
    return {cut, std::move(*witness)};
}

namespace {

std::optional<LinkageWitness> linkage(const Digraph& d, const VertexSet& s, bool from_separation) {
    if (!is_minimal_separation(d, s))
        throw InputError("linkage test requires a minimal separation, got " + d.format_set(s));
    const VertexSet& sources = from_separation ? s : d.source_set();
    const VertexSet& sinks = from_separation ? d.sink_set() : s;
    detail::UnitFlowNetwork net(d, sources, sinks);
    if (net.max_flow() != static_cast<int>(s.size())) return std::nullopt;
    Digraph carrier = d.with_terminals(sources, sinks);
    PathSystem system = PathSystem::checked(carrier, net.disjoint_paths());
    const VertexSet covered = from_separation ? v_first(system) : v_last(system);
    if (covered != s)
        throw VerificationError("saturating linkage system does not cover the separation");
    return LinkageWitness{std::move(carrier), std::move(system), covered};
}

} // namespace

std::optional<LinkageWitness> in_s_plus(const Digraph& d, const VertexSet& s) {
    return linkage(d, s, /*from_separation=*/true);
}

std::optional<LinkageWitness> in_s_minus(const Digraph& d, const VertexSet& s) {
    return linkage(d, s, /*from_separation=*/false);
}

} // namespace seplat
