#include "seplat/representation.hpp"

#include <algorithm>
#include <numeric>

#include "seplat/errors.hpp"

namespace seplat {

namespace {

std::string copy_label(const std::string& base, int alpha) {
    return base + "@" + std::to_string(alpha);
}

} // namespace

BlowUp::BlowUp(Digraph base, int copies) : base_(std::move(base)), copies_(copies) {
    if (copies_ < 1) throw InputError("blow_up: copy count must be at least 1");
    const int n = base_.order();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n) * copies_);
    for (Vertex v = 0; v < n; ++v)
        for (int alpha = 0; alpha < copies_; ++alpha)
            labels.push_back(copy_label(base_.label(v), alpha));

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(base_.edge_count() * copies_ * copies_);
    for (const auto& [from, to] : base_.edges())
        for (int alpha = 0; alpha < copies_; ++alpha)
            for (int beta = 0; beta < copies_; ++beta)
                edges.emplace_back(from * copies_ + alpha, to * copies_ + beta);

    VertexSet sources, sinks;
    for (Vertex v : base_.source_set())
        for (int alpha = 0; alpha < copies_; ++alpha) sources.push_back(v * copies_ + alpha);
    for (Vertex v : base_.sink_set())
        for (int alpha = 0; alpha < copies_; ++alpha) sinks.push_back(v * copies_ + alpha);

    product_ = Digraph::from_indexed(std::move(labels), edges, std::move(sources), std::move(sinks));
}

Vertex BlowUp::copy_of(Vertex base_vertex, int alpha) const {
    if (base_vertex < 0 || base_vertex >= base_.order() || alpha < 0 || alpha >= copies_)
        throw InputError("blow_up copy index out of range");
    return base_vertex * copies_ + alpha;
}

VertexSet BlowUp::lift(const VertexSet& base_set) const {
    VertexSet out;
    out.reserve(base_set.size() * copies_);
    for (Vertex v : base_set)
        for (int alpha = 0; alpha < copies_; ++alpha) out.push_back(copy_of(v, alpha));
    return normalized(std::move(out));
}

VertexSet BlowUp::project(const VertexSet& product_set) const {
    std::vector<Vertex> bases;
    for (Vertex v : product_set) {
        if (v < 0 || v >= product_.order()) throw InputError("project: vertex out of range");
        bases.push_back(v / copies_);
    }
    const VertexSet projected = normalized(std::move(bases));
    for (Vertex v : projected) {
        for (int alpha = 0; alpha < copies_; ++alpha) {
            if (!contains(product_set, copy_of(v, alpha))) {
                for (int present = 0; present < copies_; ++present) {
                    if (contains(product_set, copy_of(v, present)))
                        throw InputError("project: set is not copy-saturated; contains " +
                                         product_.label(copy_of(v, present)) + " but not " +
                                         product_.label(copy_of(v, alpha)));
                }
            }
        }
    }
    return projected;
}

Digraph blow_up(const Digraph& base, int copies) { return BlowUp(base, copies).product(); }

AsymmetricBlowUp::AsymmetricBlowUp(Digraph base, VertexSet separator, int separator_copies)
    : base_(std::move(base)), separator_(std::move(separator)), separator_copies_(separator_copies) {
    if (separator_copies_ < 1)
        throw InputError("asymmetric blow-up: separator copy count must be at least 1");
    if (!is_minimal_separation(base_, separator_))
        throw InputError("asymmetric blow-up: " + base_.format_set(separator_) +
                         " is not a minimal separation of the base");
    other_copies_ = std::max<int>(1, static_cast<int>(separator_.size()) * separator_copies_);

    const int n = base_.order();
    copy_index_.assign(n, {});
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) {
        const int copies = contains(separator_, v) ? separator_copies_ : other_copies_;
        copy_index_[v].resize(copies);
        for (int alpha = 0; alpha < copies; ++alpha) {
            copy_index_[v][alpha] = static_cast<Vertex>(labels.size());
            labels.push_back(copy_label(base_.label(v), alpha));
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& [from, to] : base_.edges())
        for (Vertex fc : copy_index_[from])
            for (Vertex tc : copy_index_[to]) edges.emplace_back(fc, tc);
    VertexSet sources, sinks;
    for (Vertex v : base_.source_set())
        for (Vertex copy : copy_index_[v]) sources.push_back(copy);
    for (Vertex v : base_.sink_set())
        for (Vertex copy : copy_index_[v]) sinks.push_back(copy);
    product_ = Digraph::from_indexed(std::move(labels), edges, std::move(sources), std::move(sinks));
}

VertexSet AsymmetricBlowUp::lifted_separator() const {
    VertexSet out;
    for (Vertex t : separator_)
        for (Vertex copy : copy_index_[t]) out.push_back(copy);
    return normalized(std::move(out));
}

OrthogonalityWitness AsymmetricBlowUp::witness() const {
    std::vector<Path> paths;
    for (std::size_t t_index = 0; t_index < separator_.size(); ++t_index) {
        const Vertex t = separator_[t_index];
        // A base path meeting the separator only at t; minimality provides it.
        VertexSet rest = separator_;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t_index));
        const auto base_path = ab_path_avoiding(base_, rest);
        if (!base_path || std::find(base_path->begin(), base_path->end(), t) == base_path->end())
            throw VerificationError("no private base path through separator vertex " +
                                    base_.label(t));
        for (int alpha = 0; alpha < separator_copies_; ++alpha) {
            const int shared = static_cast<int>(t_index) * separator_copies_ + alpha;
            Path copy;
            copy.reserve(base_path->size());
            for (Vertex v : *base_path)
                copy.push_back(v == t ? copy_index_[t][alpha] : copy_index_[v][shared]);
            paths.push_back(std::move(copy));
        }
    }
    PathSystem system = PathSystem::checked(product_, std::move(paths));
    auto witness = is_orthogonal(lifted_separator(), system);
    if (!witness)
        throw VerificationError("asymmetric blow-up path family is not orthogonal to the lifted separator");
    return *witness;
}

OrthogonalityWitness witness_blowup_em(const Digraph& base, const VertexSet& separator,
                                       int separator_copies) {
    return AsymmetricBlowUp(base, separator, separator_copies).witness();
}

namespace {

/// Greedy chain partition of a poset: repeatedly start at the lowest-index
/// minimal unused element and climb along covers among unused elements.
std::vector<std::vector<int>> chain_partition(const FinitePoset& p) {
    const int n = p.size();
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> chains;
    int remaining = n;
    while (remaining > 0) {
        int start = -1;
        for (int i = 0; i < n && start < 0; ++i) {
            if (used[i]) continue;
            bool minimal = true;
            for (int j = 0; j < n && minimal; ++j)
                if (!used[j] && j != i && p.less_eq(j, i)) minimal = false;
            if (minimal) start = i;
        }
        std::vector<int> chain{start};
        used[start] = 1;
        --remaining;
        for (bool grew = true; grew;) {
            grew = false;
            const int tip = chain.back();
            for (int next = 0; next < n; ++next) {
                if (used[next] || !p.less_eq(tip, next) || next == tip) continue;
                bool immediate = true;
                for (int mid = 0; mid < n && immediate; ++mid)
                    if (!used[mid] && mid != tip && mid != next && p.less_eq(tip, mid) &&
                        p.less_eq(mid, next))
                        immediate = false;
                if (!immediate) continue;
                chain.push_back(next);
                used[next] = 1;
                --remaining;
                grew = true;
                break;
            }
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

} // namespace

DistributiveRepresentation represent_distributive(const FiniteLattice& l) {
    if (auto violation = distributivity_violation(l))
        throw InputError("represent_distributive: lattice is not distributive; triple (" +
                         l.label((*violation)[0]) + ", " + l.label((*violation)[1]) + ", " +
                         l.label((*violation)[2]) + ") violates the law");

    const FinitePoset poset = join_irreducibles(l);
    const std::vector<std::vector<int>> chains = chain_partition(poset);

    // One path a_i -> w_i_1 -> ... -> b_i per chain; position c on chain i is
    // vertex c of that path, so a selection cutting position c has "passed"
    // the first c chain elements.
    const int n = poset.size();
    std::vector<int> chain_of(n, -1), pos_in_chain(n, -1);
    for (std::size_t c = 0; c < chains.size(); ++c)
        for (std::size_t k = 0; k < chains[c].size(); ++k) {
            chain_of[chains[c][k]] = static_cast<int>(c);
            pos_in_chain[chains[c][k]] = static_cast<int>(k) + 1; // 1-based
        }

    std::vector<std::string> labels;
    std::vector<std::vector<Vertex>> path_vertex(chains.size());
    for (std::size_t c = 0; c < chains.size(); ++c) {
        const std::size_t len = chains[c].size();
        path_vertex[c].resize(len + 1);
        const std::string id = std::to_string(c + 1);
        path_vertex[c][0] = static_cast<Vertex>(labels.size());
        labels.push_back("a" + id);
        for (std::size_t k = 1; k < len; ++k) {
            path_vertex[c][k] = static_cast<Vertex>(labels.size());
            labels.push_back("w" + id + "_" + std::to_string(k));
        }
        path_vertex[c][len] = static_cast<Vertex>(labels.size());
        labels.push_back("b" + id);
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    VertexSet sources, sinks;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        for (std::size_t k = 0; k + 1 <= chains[c].size(); ++k)
            edges.emplace_back(path_vertex[c][k], path_vertex[c][k + 1]);
        sources.push_back(path_vertex[c][0]);
        sinks.push_back(path_vertex[c].back());
    }
    // Covering relation p (chain i, pos alpha) < q (chain j, pos beta) across
    // chains: edge from the vertex just before q to the vertex just after p.
    for (int p_elt = 0; p_elt < n; ++p_elt) {
        for (int q_elt = 0; q_elt < n; ++q_elt) {
            if (p_elt == q_elt || chain_of[p_elt] == chain_of[q_elt]) continue;
            if (!poset.less_eq(p_elt, q_elt)) continue;
            bool covering = true;
            for (int mid = 0; mid < n && covering; ++mid)
                if (mid != p_elt && mid != q_elt && poset.less_eq(p_elt, mid) &&
                    poset.less_eq(mid, q_elt))
                    covering = false;
            if (!covering) continue;
            const int i = chain_of[p_elt], alpha = pos_in_chain[p_elt];
            const int j = chain_of[q_elt], beta = pos_in_chain[q_elt];
            edges.emplace_back(path_vertex[j][beta - 1], path_vertex[i][alpha]);
        }
    }

    DistributiveRepresentation result;
    result.graph = Digraph::from_indexed(std::move(labels), edges, std::move(sources),
                                         std::move(sinks));
    // The construction rule is our own derivation, so verification is part of
    // the contract: enumerate and check the isomorphism on every invocation.
    result.em = em_family(result.graph, static_cast<std::size_t>(result.graph.order()));
    const FiniteLattice realized = to_lattice(result.em, result.graph);
    auto iso = are_isomorphic(realized, l, std::max<std::size_t>(kIsomorphismGuard,
                                                                 static_cast<std::size_t>(l.size())));
    if (!iso)
        throw VerificationError(
            "represent_distributive: realized Erdős–Menger lattice is not isomorphic to the input");
    result.iso = std::move(*iso);
    return result;
}

} // namespace seplat
