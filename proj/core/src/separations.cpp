#include "seplat/separations.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "flow_network.hpp"
#include "seplat/errors.hpp"
#include "seplat/lattice.hpp"
#include "seplat/menger.hpp"

namespace seplat {

namespace {

/// Hard cap for the subset enumeration, independent of the caller's guard.
constexpr std::size_t kEnumerationHardCap = 22;

/// Is there an X->Y path (exactly the first vertex in X, exactly the last in
/// Y) avoiding `avoid`? Optionally reconstructs one such path, found
/// breadth-first with lowest-vertex tie-breaking.
bool exists_xy_path_avoiding(const Digraph& d, const VertexSet& x, const VertexSet& y,
                             const VertexSet& avoid, Path* out = nullptr) {
    const int n = d.order();
    std::vector<char> in_x(n, 0), in_y(n, 0), banned(n, 0);
    for (Vertex v : x) in_x[v] = 1;
    for (Vertex v : y) in_y[v] = 1;
    for (Vertex v : avoid) banned[v] = 1;

    for (Vertex v : x) {
        if (in_y[v] && !banned[v]) {
            if (out) *out = {v};
            return true;
        }
    }
    constexpr int kUnseen = -2;
    std::vector<int> parent(n, kUnseen);
    std::vector<Vertex> queue;
    for (Vertex v : x) {
        if (!in_y[v] && !banned[v]) {
            parent[v] = -1;
            queue.push_back(v);
        }
    }
    auto rebuild = [&](Vertex tip, Vertex last) {
        Path path{last};
        for (Vertex v = tip; v != -1; v = parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        if (out) *out = std::move(path);
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : d.out(u)) {
            if (banned[w] || in_x[w]) continue;
            if (in_y[w]) {
                rebuild(u, w);
                return true;
            }
            if (parent[w] == kUnseen) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return false;
}

void require_minimal(const Digraph& d, const VertexSet& s, const char* op) {
    if (!is_minimal_separation(d, s))
        throw InputError(std::string(op) + ": " + d.format_set(s) + " is not a minimal separation");
}

VertexSet infimum_formula(const Digraph& d, const std::vector<VertexSet>& family) {
    VertexSet pool;
    for (const VertexSet& member : family) pool = set_union(pool, member);
    VertexSet result;
    for (Vertex v : pool) {
        VertexSet others = pool;
        others.erase(std::find(others.begin(), others.end(), v));
        if (contains(reachable(d, d.source_set(), others), v)) result.push_back(v);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Bitmask fast path over the relevant subgraph; used by the enumerators. The
// relevant subgraph carries every A->B path, every A->T path into a minimal
// separation T, and every walk the infimum formula can use, so all checks
// below are faithful to the full digraph for sets of relevant vertices.
// ---------------------------------------------------------------------------

struct MaskGraph {
    int n = 0;
    std::vector<Vertex> global;        // local index -> vertex of d
    std::vector<std::uint64_t> out;
    std::uint64_t sources = 0;
    std::uint64_t sinks = 0;
    std::uint64_t all = 0;
};

MaskGraph make_mask_graph(const Digraph& d, const VertexSet& pool) {
    MaskGraph g;
    g.n = static_cast<int>(pool.size());
    g.global = pool;
    std::vector<int> local(d.order(), -1);
    for (int i = 0; i < g.n; ++i) local[pool[i]] = i;
    g.out.assign(g.n, 0);
    for (int i = 0; i < g.n; ++i) {
        for (Vertex w : d.out(pool[i])) {
            if (local[w] < 0) continue;
            g.out[i] |= std::uint64_t{1} << local[w];
        }
        if (d.is_source(pool[i])) g.sources |= std::uint64_t{1} << i;
        if (d.is_sink(pool[i])) g.sinks |= std::uint64_t{1} << i;
    }
    g.all = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
    return g;
}

bool mask_xy_path_exists(const MaskGraph& g, std::uint64_t xmask, std::uint64_t ymask,
                         std::uint64_t avoid) {
    if (xmask & ymask & ~avoid) return true;
    const std::uint64_t allowed = ~xmask & ~ymask & ~avoid & g.all;
    const std::uint64_t target = ymask & ~xmask & ~avoid;
    std::uint64_t reach = xmask & ~ymask & ~avoid;
    std::uint64_t frontier = reach;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.out[v];
        }
        if (next & target) return true;
        frontier = next & allowed & ~reach;
        reach |= frontier;
    }
    return false;
}

bool mask_is_separation(const MaskGraph& g, std::uint64_t s) {
    return !mask_xy_path_exists(g, g.sources, g.sinks, s);
}

bool mask_leq(const MaskGraph& g, std::uint64_t s, std::uint64_t t) {
    return !mask_xy_path_exists(g, g.sources, t, s);
}

VertexSet mask_to_set(const MaskGraph& g, std::uint64_t m) {
    VertexSet out;
    for (std::uint64_t f = m; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        out.push_back(g.global[v]);
    }
    return out;
}

std::vector<std::uint64_t> enumerate_minimal_masks(const MaskGraph& g) {
    const std::uint64_t total = std::uint64_t{1} << g.n;
    std::vector<bool> separation(total, false);
    for (std::uint64_t m = 0; m < total; ++m) separation[m] = mask_is_separation(g, m);
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t m = 0; m < total; ++m) {
        if (!separation[m]) continue;
        bool strict = true;
        for (std::uint64_t f = m; f && strict;) {
            const std::uint64_t bit = f & (0 - f);
            f &= f - 1;
            if (separation[m ^ bit]) strict = false;
        }
        if (strict) minimal.push_back(m);
    }
    return minimal;
}

SeparationLattice build_lattice(const MaskGraph& g,
                                const std::vector<std::uint64_t>& masks) {
    std::vector<std::pair<VertexSet, std::uint64_t>> keyed;
    keyed.reserve(masks.size());
    for (std::uint64_t m : masks) keyed.emplace_back(mask_to_set(g, m), m);
    std::sort(keyed.begin(), keyed.end());

    const std::size_t count = keyed.size();
    std::vector<VertexSet> elements(count);
    std::vector<std::vector<bool>> order(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i) elements[i] = keyed[i].first;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            order[i][j] = mask_leq(g, keyed[i].second, keyed[j].second);
    return SeparationLattice::checked(std::move(elements), std::move(order));
}

SeparationLattice em_subfamily(const Digraph& d, const SeparationLattice& full) {
    detail::UnitFlowNetwork net(d, d.source_set(), d.sink_set());
    const std::size_t k = static_cast<std::size_t>(net.max_flow());
    std::vector<int> keep;
    for (std::size_t i = 0; i < full.size(); ++i)
        if (full.elements[i].size() == k) keep.push_back(static_cast<int>(i));
    if (keep.empty())
        throw VerificationError("Erdős–Menger family is empty; finite nonemptiness is violated");
    std::vector<VertexSet> elements;
    elements.reserve(keep.size());
    std::vector<std::vector<bool>> order(keep.size(), std::vector<bool>(keep.size(), false));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        elements.push_back(full.elements[keep[i]]);
        for (std::size_t j = 0; j < keep.size(); ++j) order[i][j] = full.order[keep[i]][keep[j]];
    }
    return SeparationLattice::checked(std::move(elements), std::move(order));
}

} // namespace

bool is_separation(const Digraph& d, const VertexSet& s) {
    return !exists_xy_path_avoiding(d, d.source_set(), d.sink_set(), s);
}

bool is_minimal_separation(const Digraph& d, const VertexSet& s) {
    if (!is_separation(d, s)) return false;
    for (Vertex v : s) {
        VertexSet rest = s;
        rest.erase(std::find(rest.begin(), rest.end(), v));
        if (!exists_xy_path_avoiding(d, d.source_set(), d.sink_set(), rest)) return false;
    }
    return true;
}

std::optional<Path> ab_path_avoiding(const Digraph& d, const VertexSet& avoid) {
    Path path;
    if (exists_xy_path_avoiding(d, d.source_set(), d.sink_set(), avoid, &path)) return path;
    return std::nullopt;
}

bool leq(const Digraph& d, const VertexSet& s, const VertexSet& t) {
    require_minimal(d, s, "leq");
    require_minimal(d, t, "leq");
    return !exists_xy_path_avoiding(d, d.source_set(), t, s);
}

bool leq_dual(const Digraph& d, const VertexSet& s, const VertexSet& t) {
    require_minimal(d, s, "leq_dual");
    require_minimal(d, t, "leq_dual");
    return !exists_xy_path_avoiding(d, s, d.sink_set(), t);
}

VertexSet infimum(const Digraph& d, const std::vector<VertexSet>& family) {
    if (family.empty()) throw InputError("infimum of an empty family is undefined");
    for (const VertexSet& member : family) require_minimal(d, member, "infimum");
    return infimum_formula(d, family);
}

VertexSet supremum(const Digraph& d, const std::vector<VertexSet>& family) {
    if (family.empty()) throw InputError("supremum of an empty family is undefined");
    for (const VertexSet& member : family) require_minimal(d, member, "supremum");
    return infimum_formula(d.reversed(), family);
}

int SeparationLattice::index_of(const VertexSet& s) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it == elements.end() || *it != s) return -1;
    return static_cast<int>(it - elements.begin());
}

int SeparationLattice::bottom() const {
    for (std::size_t i = 0; i < size(); ++i) {
        bool least = true;
        for (std::size_t j = 0; j < size() && least; ++j) least = order[i][j];
        if (least) return static_cast<int>(i);
    }
    throw VerificationError("separation lattice has no least element");
}

int SeparationLattice::top() const {
    for (std::size_t i = 0; i < size(); ++i) {
        bool greatest = true;
        for (std::size_t j = 0; j < size() && greatest; ++j) greatest = order[j][i];
        if (greatest) return static_cast<int>(i);
    }
    throw VerificationError("separation lattice has no greatest element");
}

SeparationLattice SeparationLattice::checked(std::vector<VertexSet> elements,
                                             std::vector<std::vector<bool>> order) {
    const std::size_t count = elements.size();
    if (order.size() != count)
        throw VerificationError("order matrix size mismatch");
    for (const auto& row : order)
        if (row.size() != count) throw VerificationError("order matrix is not square");

    for (std::size_t i = 0; i < count; ++i) {
        if (!order[i][i]) throw VerificationError("⊴ is not reflexive");
        for (std::size_t j = 0; j < count; ++j) {
            if (i != j && order[i][j] && order[j][i])
                throw VerificationError("⊴ is not antisymmetric");
            if (!order[i][j]) continue;
            for (std::size_t k = 0; k < count; ++k)
                if (order[j][k] && !order[i][k])
                    throw VerificationError("⊴ is not transitive");
        }
    }

    const std::size_t words = (count + 63) / 64;
    std::vector<std::vector<std::uint64_t>> below(count, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<std::uint64_t>> above(count, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (order[i][j]) {
                below[j][i / 64] |= std::uint64_t{1} << (i % 64);
                above[i][j / 64] |= std::uint64_t{1} << (j % 64);
            }
    auto subset = [&](const std::vector<std::uint64_t>& lhs, const std::vector<std::uint64_t>& rhs) {
        for (std::size_t w = 0; w < words; ++w)
            if (lhs[w] & ~rhs[w]) return false;
        return true;
    };
    auto bound = [&](const std::vector<std::vector<std::uint64_t>>& rows, std::size_t i,
                     std::size_t j, const char* kind) {
        std::vector<std::uint64_t> candidates(words);
        for (std::size_t w = 0; w < words; ++w) candidates[w] = rows[i][w] & rows[j][w];
        for (std::size_t k = 0; k < count; ++k) {
            if (!(candidates[k / 64] >> (k % 64) & 1)) continue;
            if (subset(candidates, rows[k])) return static_cast<int>(k);
        }
        throw VerificationError(std::string("pair has no ") + kind + "; not a lattice");
    };

    SeparationLattice lattice;
    lattice.elements = std::move(elements);
    lattice.order = std::move(order);
    lattice.meet.assign(count, std::vector<int>(count, 0));
    lattice.join.assign(count, std::vector<int>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            lattice.meet[i][j] = bound(below, i, j, "meet");
            lattice.join[i][j] = bound(above, i, j, "join");
        }
    }
    return lattice;
}

VertexSet relevant_vertices(const Digraph& d) {
    const VertexSet fwd = reachable(d, d.source_set(), {});
    const VertexSet bwd = reachable(d.reversed(), d.sink_set(), {});
    return set_intersection(fwd, bwd);
}

SeparationLattice enumerate_minimal_separations(const Digraph& d, std::size_t guard) {
    const VertexSet pool = relevant_vertices(d);
    const std::size_t limit = std::min(guard, kEnumerationHardCap);
    if (pool.size() > limit)
        throw GuardError("enumerate_minimal_separations: " + std::to_string(pool.size()) +
                         " relevant vertices exceed guard " + std::to_string(limit) +
                         " (subset enumeration is exponential)");
    const MaskGraph g = make_mask_graph(d, pool);
    return build_lattice(g, enumerate_minimal_masks(g));
}

SeparationLattice em_family(const Digraph& d, std::size_t guard) {
    return em_subfamily(d, enumerate_minimal_separations(d, guard));
}

EscalanteReport check_escalante(const Digraph& d, std::size_t guard) {
    EscalanteReport report;
    const SeparationLattice all = enumerate_minimal_separations(d, guard);
    const PathSystem fixed_system = max_disjoint_paths(d);
    const std::size_t k = fixed_system.size();

    report.orthogonality_matches = true;
    std::vector<VertexSet> em_elements;
    for (const VertexSet& s : all.elements) {
        const bool member = static_cast<bool>(is_em_separation(d, s));
        const bool orthogonal = is_orthogonal(s, fixed_system).has_value();
        if (member != orthogonal) {
            report.orthogonality_matches = false;
            report.findings.push_back("membership/orthogonality mismatch at " + d.format_set(s));
        }
        if (member) em_elements.push_back(s);
        if (member != (s.size() == k)) {
            report.orthogonality_matches = false;
            report.findings.push_back("cardinality characterization mismatch at " + d.format_set(s));
        }
    }

    report.closed_under_meet_join = true;
    for (const VertexSet& s : em_elements) {
        for (const VertexSet& t : em_elements) {
            const VertexSet meet = infimum(d, {s, t});
            const VertexSet join = supremum(d, {s, t});
            if (!std::binary_search(em_elements.begin(), em_elements.end(), meet)) {
                report.closed_under_meet_join = false;
                report.findings.push_back("meet of " + d.format_set(s) + " and " + d.format_set(t) +
                                          " leaves the family");
            }
            if (!std::binary_search(em_elements.begin(), em_elements.end(), join)) {
                report.closed_under_meet_join = false;
                report.findings.push_back("join of " + d.format_set(s) + " and " + d.format_set(t) +
                                          " leaves the family");
            }
        }
    }

    const SeparationLattice em = em_subfamily(d, all);
    const FiniteLattice as_lattice = to_lattice(em, d);
    if (auto violation = distributivity_violation(as_lattice)) {
        report.distributive = false;
        report.findings.push_back("distributivity fails on (" + as_lattice.label((*violation)[0]) +
                                  ", " + as_lattice.label((*violation)[1]) + ", " +
                                  as_lattice.label((*violation)[2]) + ")");
    } else {
        report.distributive = true;
    }
    return report;
}

} // namespace seplat
