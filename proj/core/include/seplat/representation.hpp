#pragma once

#include <string>
#include <vector>

#include "seplat/digraph.hpp"
#include "seplat/lattice.hpp"
#include "seplat/menger.hpp"
#include "seplat/separations.hpp"

namespace seplat {

/// Uniform blow-up: vertex (v, α) for α < copies, with an edge
/// (u, α) -> (v, β) iff u -> v is a base edge; terminal sets are lifted.
/// Copy vertices are labelled "<base>@<α>".
class BlowUp {
public:
    /// copies = 0 is refused; copies = 1 reproduces the base graph.
    BlowUp(Digraph base, int copies);

    const Digraph& base() const { return base_; }
    const Digraph& product() const { return product_; }
    int copies() const { return copies_; }

    Vertex copy_of(Vertex base_vertex, int alpha) const;

    /// T × copies, as product vertices.
    VertexSet lift(const VertexSet& base_set) const;

    /// {v : (v, α) ∈ s for some α}; refuses (InputError, with a witness
    /// pair in the message) unless s is copy-saturated, i.e. equals the
    /// lift of its projection.
    VertexSet project(const VertexSet& product_set) const;

private:
    Digraph base_;
    int copies_;
    Digraph product_;
};

/// Convenience wrapper returning just the blown-up digraph.
Digraph blow_up(const Digraph& base, int copies);

/// Blow-up with separator vertices getting `separator_copies` copies and all
/// other vertices |T| * separator_copies copies, so that the per-copy
/// disjoint path family has room for an injective copy assignment.
class AsymmetricBlowUp {
public:
    /// Refuses (InputError) unless `separator` is a minimal separation of
    /// the base and separator_copies >= 1.
    AsymmetricBlowUp(Digraph base, VertexSet separator, int separator_copies);

    const Digraph& base() const { return base_; }
    const Digraph& product() const { return product_; }
    int separator_copies() const { return separator_copies_; }
    int other_copies() const { return other_copies_; }
    const VertexSet& separator() const { return separator_; }

    /// separator × separator_copies, as product vertices.
    VertexSet lifted_separator() const;

    /// The per-copy path family: copy (t, α) rides a base path through t
    /// that meets the separator only at t, with every other vertex v mapped
    /// to (v, f(t, α)) for the injection f(t, α) = index(t) * separator_copies
    /// + α. Verified orthogonal before it is returned.
    OrthogonalityWitness witness() const;

private:
    Digraph base_;
    VertexSet separator_;
    int separator_copies_;
    int other_copies_;
    Digraph product_;
    std::vector<std::vector<Vertex>> copy_index_; // [base vertex][alpha] -> product vertex
};

/// Orthogonality witness for T × separator_copies in the asymmetric blow-up.
OrthogonalityWitness witness_blowup_em(const Digraph& base, const VertexSet& separator,
                                       int separator_copies);

/// A digraph whose Erdős–Menger separation lattice is isomorphic to the
/// given finite distributive lattice, with the verified isomorphism.
struct DistributiveRepresentation {
    Digraph graph;
    SeparationLattice em;
    /// em element index -> lattice element index.
    std::vector<int> iso;
};

/// Constructive realization for finite distributive lattices: chains of the
/// join-irreducible poset become disjoint A->B paths, covering relations
/// across chains become cross edges, and minimum cuts then biject with the
/// down-sets of the poset. Verified by enumeration and isomorphism check on
/// every invocation; refuses (InputError) non-distributive inputs, naming a
/// violating triple.
DistributiveRepresentation represent_distributive(const FiniteLattice& l);

} // namespace seplat
