#pragma once

#include <optional>
#include <string>

#include "seplat/digraph.hpp"

namespace seplat {

/// Certificate that a vertex set picks exactly one vertex from each path of
/// a disjoint system: |separation| = |system| and the incidence map is a
/// bijection.
struct OrthogonalityWitness {
    VertexSet separation;
    PathSystem system;
    /// path_of[i] = index into system.paths of the path containing
    /// separation[i].
    std::vector<int> path_of;
};

/// Maximum-cardinality system of pairwise vertex-disjoint A->B paths,
/// computed by unit-capacity vertex-split flow. Deterministic. A digraph
/// with no A->B path yields the empty system.
PathSystem max_disjoint_paths(const Digraph& d);

/// Witness iff S consists of choosing exactly one vertex from each path of
/// ps.
std::optional<OrthogonalityWitness> is_orthogonal(const VertexSet& s, const PathSystem& ps);

enum class EmFailure { NotSeparation, NotMinimal, WrongCardinality };
const char* to_string(EmFailure reason);

struct EmCheck {
    std::optional<OrthogonalityWitness> witness;
    std::optional<EmFailure> failure;
    explicit operator bool() const { return witness.has_value(); }
};

/// Erdős–Menger membership test with witness. S qualifies iff it is a
/// minimal separation and |S| equals the maximum number of disjoint A->B
/// paths; the witness routes |S| disjoint paths through S by splicing a
/// saturating A->S system with a saturating S->B system.
EmCheck is_em_separation(const Digraph& d, const VertexSet& s);

struct EmExtreme {
    VertexSet separation;
    OrthogonalityWitness witness;
};

/// Least Erdős–Menger separation under the ⊴ order: the source-side
/// canonical minimum vertex cut extracted from the residual structure of a
/// maximum flow.
EmExtreme em_min(const Digraph& d);
/// Greatest Erdős–Menger separation: em_min of the reversed digraph.
EmExtreme em_max(const Digraph& d);

/// Witness for full linkage of a minimal separation to one terminal side:
/// a disjoint path system of the re-terminaled digraph whose first (or last)
/// vertex set is exactly `covered`.
struct LinkageWitness {
    Digraph carrier;
    PathSystem system;
    VertexSet covered;
};

/// Witness iff some disjoint S->B system has first-vertex set exactly S.
/// Refuses (InputError) when S is not a minimal separation.
std::optional<LinkageWitness> in_s_plus(const Digraph& d, const VertexSet& s);
/// Dual: disjoint A->S system with last-vertex set exactly S.
std::optional<LinkageWitness> in_s_minus(const Digraph& d, const VertexSet& s);

} // namespace seplat
