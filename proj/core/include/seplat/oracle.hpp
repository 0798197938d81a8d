#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seplat/digraph.hpp"

namespace seplat::oracle {

/// Brute-force reference implementations, intentionally naive and sharing no
/// code with the main algorithms. They back the `verify` consistency report
/// and the derived expected values in the test suites.

inline constexpr std::size_t kOracleGuard = 16;

/// Every A->B path, by plain recursion over out-neighbors.
std::vector<Path> all_ab_paths(const Digraph& d, std::size_t guard = kOracleGuard);

/// Subset enumeration over path-covered vertices.
std::vector<VertexSet> minimal_separations(const Digraph& d, std::size_t guard = kOracleGuard);

/// Maximum number of pairwise disjoint A->B paths, by memoized search over
/// path combinations.
int max_disjoint(const Digraph& d, std::size_t guard = kOracleGuard);

/// S ⊴ T decided by scanning the full list of A->T paths.
bool leq_by_paths(const Digraph& d, const VertexSet& s, const VertexSet& t,
                  std::size_t guard = kOracleGuard);

/// Is there a disjoint path system orthogonal to s? Backtracking over the
/// path list, one path per separation vertex.
bool has_orthogonal_system(const Digraph& d, const VertexSet& s,
                           std::size_t guard = kOracleGuard);

/// Greatest lower / least upper bound of a family inside the enumerated
/// minimal-separation family, found by pairwise leq scans. nullopt reports
/// absence (which would falsify the lattice structure).
std::optional<VertexSet> glb(const Digraph& d, const std::vector<VertexSet>& family,
                             std::size_t guard = kOracleGuard);
std::optional<VertexSet> lub(const Digraph& d, const std::vector<VertexSet>& family,
                             std::size_t guard = kOracleGuard);

/// Oracle-vs-main consistency over one digraph: paths, maximum systems,
/// minimal separations, the order and its dual, infima/suprema of pairs, and
/// Erdős–Menger membership.
struct VerifyReport {
    struct Entry {
        std::string check;
        bool ok = false;
        std::string detail;
    };
    std::vector<Entry> entries;
    int mismatches = 0;
    bool ok() const { return mismatches == 0; }
};

VerifyReport verify(const Digraph& d, std::size_t guard = kOracleGuard);

} // namespace seplat::oracle
