#include "seplat/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "seplat/errors.hpp"
#include "seplat/lattice.hpp"
#include "seplat/menger.hpp"
#include "seplat/separations.hpp"

namespace seplat::oracle {

namespace {

void check_guard(const Digraph& d, std::size_t guard, const char* who) {
    if (static_cast<std::size_t>(d.order()) > guard)
        throw GuardError(std::string(who) + ": " + std::to_string(d.order()) +
                         " vertices exceed oracle guard " + std::to_string(guard));
}

void grow(const Digraph& d, Path& prefix, std::vector<char>& used, std::vector<Path>& out) {
    const Vertex tip = prefix.back();
    if (d.is_sink(tip)) {
        // exactly the last vertex may be a sink, and sources may not repeat
        out.push_back(prefix);
        return;
    }
    for (Vertex next : d.out(tip)) {
        if (used[next] || d.is_source(next)) continue;
        used[next] = 1;
        prefix.push_back(next);
        grow(d, prefix, used, out);
        prefix.pop_back();
        used[next] = 0;
    }
}

} // namespace

std::vector<Path> all_ab_paths(const Digraph& d, std::size_t guard) {
    check_guard(d, guard, "oracle::all_ab_paths");
    std::vector<Path> out;
    std::vector<char> used(d.order(), 0);
    for (Vertex a : d.source_set()) {
        Path prefix{a};
        used[a] = 1;
        grow(d, prefix, used, out);
        used[a] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> minimal_separations(const Digraph& d, std::size_t guard) {
    const std::vector<Path> paths = all_ab_paths(d, guard);
    std::vector<Vertex> covered_list;
    for (const Path& p : paths)
        for (Vertex v : p) covered_list.push_back(v);
    const VertexSet covered = normalized(std::move(covered_list));
    if (covered.size() > 8 * sizeof(std::uint64_t))
        throw GuardError("oracle::minimal_separations: too many path-covered vertices");

    std::vector<std::uint64_t> path_masks;
    path_masks.reserve(paths.size());
    for (const Path& p : paths) {
        std::uint64_t mask = 0;
        for (Vertex v : p) {
            const auto at = std::lower_bound(covered.begin(), covered.end(), v) - covered.begin();
            mask |= std::uint64_t{1} << at;
        }
        path_masks.push_back(mask);
    }

    auto hits_all = [&](std::uint64_t s) {
        for (std::uint64_t pm : path_masks)
            if (!(pm & s)) return false;
        return true;
    };
    auto minimal = [&](std::uint64_t s) {
        for (std::uint64_t f = s; f;) {
            const std::uint64_t bit = f & (0 - f);
            f &= f - 1;
            bool private_path = false;
            for (std::uint64_t pm : path_masks)
                if ((pm & s) == bit) {
                    private_path = true;
                    break;
                }
            if (!private_path) return false;
        }
        return true;
    };

    std::vector<VertexSet> result;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << covered.size()); ++s) {
        if (!hits_all(s) || !minimal(s)) continue;
        VertexSet set;
        for (std::size_t i = 0; i < covered.size(); ++i)
            if (s >> i & 1) set.push_back(covered[i]);
        result.push_back(std::move(set));
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

int best_packing(const std::vector<std::uint64_t>& path_masks, std::uint64_t free_mask,
                 std::map<std::uint64_t, int>& memo) {
    auto it = memo.find(free_mask);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (std::uint64_t pm : path_masks)
        if ((pm & ~free_mask) == 0)
            best = std::max(best, 1 + best_packing(path_masks, free_mask & ~pm, memo));
    memo[free_mask] = best;
    return best;
}

} // namespace

int max_disjoint(const Digraph& d, std::size_t guard) {
    const std::vector<Path> paths = all_ab_paths(d, guard);
    VertexSet covered_list;
    for (const Path& p : paths)
        for (Vertex v : p) covered_list.push_back(v);
    const VertexSet covered = normalized(std::move(covered_list));
    std::vector<std::uint64_t> path_masks;
    for (const Path& p : paths) {
        std::uint64_t mask = 0;
        for (Vertex v : p)
            mask |= std::uint64_t{1}
                    << (std::lower_bound(covered.begin(), covered.end(), v) - covered.begin());
        path_masks.push_back(mask);
    }
    std::map<std::uint64_t, int> memo;
    const std::uint64_t all =
        covered.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << covered.size()) - 1;
    return best_packing(path_masks, all, memo);
}

bool leq_by_paths(const Digraph& d, const VertexSet& s, const VertexSet& t, std::size_t guard) {
    const Digraph toward_t = d.with_terminals(d.source_set(), t);
    for (const Path& p : all_ab_paths(toward_t, guard)) {
        bool meets = false;
        for (Vertex v : p)
            if (contains(s, v)) {
                meets = true;
                break;
            }
        if (!meets) return false;
    }
    return true;
}

namespace {

bool assign_paths(const std::vector<std::vector<std::uint64_t>>& choices, std::size_t at,
                  std::uint64_t used) {
    if (at == choices.size()) return true;
    for (std::uint64_t pm : choices[at]) {
        if (pm & used) continue;
        if (assign_paths(choices, at + 1, used | pm)) return true;
    }
    return false;
}

} // namespace

bool has_orthogonal_system(const Digraph& d, const VertexSet& s, std::size_t guard) {
    const std::vector<Path> paths = all_ab_paths(d, guard);
    if (s.empty()) return true; // the empty system
    // choices[i]: masks of paths meeting s exactly at s[i]
    std::vector<std::vector<std::uint64_t>> choices(s.size());
    for (const Path& p : paths) {
        int which = -1;
        int hits = 0;
        for (Vertex v : p) {
            if (!contains(s, v)) continue;
            ++hits;
            which = static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
        }
        if (hits != 1) continue;
        std::uint64_t mask = 0;
        for (Vertex v : p) mask |= std::uint64_t{1} << v;
        if (d.order() > 64)
            throw GuardError("oracle::has_orthogonal_system: more than 64 vertices");
        choices[which].push_back(mask);
    }
    return assign_paths(choices, 0, 0);
}

namespace {

std::optional<VertexSet> bound_scan(const Digraph& d, const std::vector<VertexSet>& family,
                                    std::size_t guard, bool lower) {
    if (family.empty()) throw InputError("oracle bound of an empty family is undefined");
    const std::vector<VertexSet> all = minimal_separations(d, guard);
    auto before = [&](const VertexSet& x, const VertexSet& y) {
        return lower ? leq_by_paths(d, x, y, guard) : leq_by_paths(d, y, x, guard);
    };
    std::vector<VertexSet> candidates;
    for (const VertexSet& m : all) {
        bool bounds_all = true;
        for (const VertexSet& member : family)
            if (!before(m, member)) {
                bounds_all = false;
                break;
            }
        if (bounds_all) candidates.push_back(m);
    }
    for (const VertexSet& best : candidates) {
        bool extremal = true;
        for (const VertexSet& other : candidates)
            if (!before(other, best)) {
                extremal = false;
                break;
            }
        if (extremal) return best;
    }
    return std::nullopt;
}

} // namespace

std::optional<VertexSet> glb(const Digraph& d, const std::vector<VertexSet>& family,
                             std::size_t guard) {
    return bound_scan(d, family, guard, /*lower=*/true);
}

std::optional<VertexSet> lub(const Digraph& d, const std::vector<VertexSet>& family,
                             std::size_t guard) {
    return bound_scan(d, family, guard, /*lower=*/false);
}

VerifyReport verify(const Digraph& d, std::size_t guard) {
    VerifyReport report;
    auto record = [&](const std::string& check, bool ok, const std::string& detail) {
        report.entries.push_back({check, ok, detail});
        if (!ok) ++report.mismatches;
    };

    const std::vector<Path> oracle_paths = all_ab_paths(d, guard);
    {
        const auto main_paths = enumerate_ab_paths(d, guard);
        record("ab_paths", main_paths == oracle_paths,
               std::to_string(oracle_paths.size()) + " paths");
    }
    {
        const PathSystem system = max_disjoint_paths(d);
        const int expect = max_disjoint(d, guard);
        bool ok = static_cast<int>(system.size()) == expect;
        for (const Path& p : system.paths)
            ok = ok && std::binary_search(oracle_paths.begin(), oracle_paths.end(), p);
        record("max_disjoint_paths", ok,
               "maximum = " + std::to_string(expect));
    }

    const std::vector<VertexSet> oracle_min = minimal_separations(d, guard);
    SeparationLattice lattice = enumerate_minimal_separations(d, guard);
    record("minimal_separations", lattice.elements == oracle_min,
           std::to_string(oracle_min.size()) + " separations");

    // One A->T path list per element; reused for every pairwise check below.
    const std::size_t count = lattice.size();
    std::vector<std::vector<Path>> paths_into(count);
    for (std::size_t j = 0; j < count; ++j)
        paths_into[j] = all_ab_paths(d.with_terminals(d.source_set(), lattice.elements[j]), guard);
    auto oracle_leq = [&](const VertexSet& s, std::size_t j) {
        for (const Path& p : paths_into[j]) {
            bool meets = false;
            for (Vertex v : p)
                if (contains(s, v)) {
                    meets = true;
                    break;
                }
            if (!meets) return false;
        }
        return true;
    };
    std::vector<std::vector<bool>> omatrix(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            omatrix[i][j] = oracle_leq(lattice.elements[i], j);

    bool order_ok = true;
    bool dual_ok = true;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            order_ok = order_ok && lattice.order[i][j] == omatrix[i][j];
            dual_ok = dual_ok &&
                      leq_dual(d, lattice.elements[i], lattice.elements[j]) == omatrix[i][j];
        }
    }
    record("order", order_ok, "pairwise ⊴ against path scans");
    record("order_dual", dual_ok, "leq_dual agrees");

    auto scan_bound = [&](std::size_t i, std::size_t j, bool lower) -> std::optional<VertexSet> {
        std::vector<std::size_t> candidates;
        for (std::size_t k = 0; k < count; ++k) {
            const bool below_i = lower ? omatrix[k][i] : omatrix[i][k];
            const bool below_j = lower ? omatrix[k][j] : omatrix[j][k];
            if (below_i && below_j) candidates.push_back(k);
        }
        for (std::size_t best : candidates) {
            bool extremal = true;
            for (std::size_t other : candidates)
                if (!(lower ? omatrix[other][best] : omatrix[best][other])) {
                    extremal = false;
                    break;
                }
            if (extremal) return lattice.elements[best];
        }
        return std::nullopt;
    };
    bool inf_ok = true;
    bool sup_ok = true;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i; j < count; ++j) {
            const std::vector<VertexSet> pair{lattice.elements[i], lattice.elements[j]};
            inf_ok = inf_ok && infimum(d, pair) == scan_bound(i, j, true);
            sup_ok = sup_ok && supremum(d, pair) == scan_bound(i, j, false);
        }
    }
    record("infimum", inf_ok, "pairwise infima against glb scans");
    record("supremum", sup_ok, "pairwise suprema against lub scans");

    bool em_ok = true;
    const int menger_number = max_disjoint(d, guard);
    for (const VertexSet& s : lattice.elements) {
        const bool main_member = static_cast<bool>(is_em_separation(d, s));
        const bool oracle_member = has_orthogonal_system(d, s, guard);
        em_ok = em_ok && main_member == oracle_member &&
                main_member == (static_cast<int>(s.size()) == menger_number);
    }
    record("erdos_menger_membership", em_ok, "witness search against cardinality test");

    return report;
}

} // namespace seplat::oracle
