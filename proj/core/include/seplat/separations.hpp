#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seplat/digraph.hpp"

namespace seplat {

/// Default guard on the number of candidate vertices for separation
/// enumeration (exponential subset search).
inline constexpr std::size_t kSeparationEnumerationGuard = 16;

/// True iff every A->B path of d meets s. Vacuously true when no A->B path
/// exists (in particular for s = {}).
bool is_separation(const Digraph& d, const VertexSet& s);

/// True iff s is a separation and, for each v in s, some A->B path meets s
/// only at v (⊆-minimality).
bool is_minimal_separation(const Digraph& d, const VertexSet& s);

/// Some A->B path avoiding `avoid`, or nullopt. Deterministic (breadth-first,
/// lowest vertex order).
std::optional<Path> ab_path_avoiding(const Digraph& d, const VertexSet& avoid);

/// The order S ⊴ T on minimal separations: S meets every A->T path.
/// Refuses (InputError) unless both arguments are minimal separations.
bool leq(const Digraph& d, const VertexSet& s, const VertexSet& t);

/// Dual characterization of the same order: T meets every S->B path.
/// Equivalent to leq on minimal separations; computed independently.
bool leq_dual(const Digraph& d, const VertexSet& s, const VertexSet& t);

/// Greatest lower bound of a nonempty family of minimal separations: the
/// vertices of the union reachable from A without touching any other vertex
/// of the union. The result is again a minimal separation.
VertexSet infimum(const Digraph& d, const std::vector<VertexSet>& family);

/// Least upper bound, computed as the infimum on the reversed digraph with
/// the terminal sets swapped.
VertexSet supremum(const Digraph& d, const std::vector<VertexSet>& family);

/// The family of all minimal separations with its ⊴ order and meet/join
/// tables. Elements are sorted lexicographically by their sorted vertex
/// lists; `order[i][j]` means elements[i] ⊴ elements[j]; meet/join entries
/// index into `elements`.
struct SeparationLattice {
    std::vector<VertexSet> elements;
    std::vector<std::vector<bool>> order;
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<int>> join;

    std::size_t size() const { return elements.size(); }
    int index_of(const VertexSet& s) const;
    int bottom() const;
    int top() const;

    /// Validates the partial-order axioms and derives meet/join tables as
    /// greatest lower / least upper bounds under `order`. Throws
    /// VerificationError if some pair lacks a bound (not a lattice).
    static SeparationLattice checked(std::vector<VertexSet> elements,
                                     std::vector<std::vector<bool>> order);
};

/// Vertices both reachable from A and co-reachable from B (plain
/// reachability). Every vertex of a minimal separation is among them.
VertexSet relevant_vertices(const Digraph& d);

/// All minimal separations, enumerated over the relevant vertices. Refuses
/// (GuardError) when their count exceeds `guard`.
SeparationLattice enumerate_minimal_separations(const Digraph& d,
                                                std::size_t guard = kSeparationEnumerationGuard);

/// The Erdős–Menger sub-family: minimal separations of minimum cardinality,
/// with the induced order.
SeparationLattice em_family(const Digraph& d, std::size_t guard = kSeparationEnumerationGuard);

/// Checks, on one digraph: (i) membership in the Erdős–Menger family
/// coincides with orthogonality to one fixed maximum path system, (ii) the
/// family is closed under the ambient meet and join, (iii) it is
/// distributive. Failures are reported as findings, not thrown.
struct EscalanteReport {
    bool orthogonality_matches = false;
    bool closed_under_meet_join = false;
    bool distributive = false;
    std::vector<std::string> findings;

    bool all_pass() const {
        return orthogonality_matches && closed_under_meet_join && distributive;
    }
};

EscalanteReport check_escalante(const Digraph& d,
                                std::size_t guard = kSeparationEnumerationGuard);

} // namespace seplat
