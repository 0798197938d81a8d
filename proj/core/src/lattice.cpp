#include "seplat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "seplat/errors.hpp"

namespace seplat {

namespace {

void validate_partial_order(const std::vector<std::string>& labels,
                            const std::vector<std::vector<bool>>& matrix) {
    const std::size_t count = labels.size();
    if (matrix.size() != count)
        throw InputError("order matrix does not match element count");
    for (const auto& row : matrix)
        if (row.size() != count) throw InputError("order matrix is not square");
    for (std::size_t i = 0; i < count; ++i) {
        if (!matrix[i][i]) throw InputError("order is not reflexive at " + labels[i]);
        for (std::size_t j = 0; j < count; ++j) {
            if (i != j && matrix[i][j] && matrix[j][i])
                throw InputError("order is not antisymmetric on " + labels[i] + ", " + labels[j]);
            if (!matrix[i][j]) continue;
            for (std::size_t k = 0; k < count; ++k)
                if (matrix[j][k] && !matrix[i][k])
                    throw InputError("order is not transitive through " + labels[j]);
        }
    }
}

} // namespace

FinitePoset FinitePoset::checked(std::vector<std::string> labels,
                                 std::vector<std::vector<bool>> less_eq) {
    validate_partial_order(labels, less_eq);
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.matrix_ = std::move(less_eq);
    return p;
}

FiniteLattice FiniteLattice::checked(std::vector<std::string> labels,
                                     std::vector<std::vector<bool>> less_eq) {
    validate_partial_order(labels, less_eq);
    const int count = static_cast<int>(labels.size());
    if (count == 0) throw InputError("a lattice needs at least one element");

    FiniteLattice l;
    l.labels_ = std::move(labels);
    l.matrix_ = std::move(less_eq);
    l.meet_.assign(count, std::vector<int>(count, -1));
    l.join_.assign(count, std::vector<int>(count, -1));

    const int words = (count + 63) / 64;
    std::vector<std::vector<std::uint64_t>> below(count, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<std::uint64_t>> above(count, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (l.matrix_[i][j]) {
                below[j][i / 64] |= std::uint64_t{1} << (i % 64);
                above[i][j / 64] |= std::uint64_t{1} << (j % 64);
            }
    std::vector<std::uint64_t> candidates(words);
    auto bound = [&](const std::vector<std::vector<std::uint64_t>>& rows, int i, int j) {
        for (int w = 0; w < words; ++w) candidates[w] = rows[i][w] & rows[j][w];
        for (int k = 0; k < count; ++k) {
            if (!(candidates[k / 64] >> (k % 64) & 1)) continue;
            bool extremal = true;
            for (int w = 0; w < words && extremal; ++w)
                if (candidates[w] & ~rows[k][w]) extremal = false;
            if (extremal) return k;
        }
        return -1;
    };
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            const int meet = bound(below, i, j);
            const int join = bound(above, i, j);
            if (meet < 0)
                throw InputError("no meet for " + l.labels_[i] + ", " + l.labels_[j] +
                                 "; not a lattice");
            if (join < 0)
                throw InputError("no join for " + l.labels_[i] + ", " + l.labels_[j] +
                                 "; not a lattice");
            l.meet_[i][j] = meet;
            l.join_[i][j] = join;
        }
    }
    l.bottom_ = 0;
    l.top_ = 0;
    for (int i = 0; i < count; ++i) {
        l.bottom_ = l.meet_[l.bottom_][i];
        l.top_ = l.join_[l.top_][i];
    }
    return l;
}

std::vector<int> FiniteLattice::lower_covers(int i) const {
    std::vector<int> covers;
    for (int j = 0; j < size(); ++j) {
        if (j == i || !matrix_[j][i]) continue;
        bool covered = true;
        for (int k = 0; k < size() && covered; ++k)
            if (k != i && k != j && matrix_[j][k] && matrix_[k][i]) covered = false;
        if (covered) covers.push_back(j);
    }
    return covers;
}

std::vector<int> FiniteLattice::upper_covers(int i) const {
    std::vector<int> covers;
    for (int j = 0; j < size(); ++j) {
        if (j == i || !matrix_[i][j]) continue;
        bool covered = true;
        for (int k = 0; k < size() && covered; ++k)
            if (k != i && k != j && matrix_[i][k] && matrix_[k][j]) covered = false;
        if (covered) covers.push_back(j);
    }
    return covers;
}

std::optional<std::array<int, 3>> distributivity_violation(const FiniteLattice& l) {
    for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y)
            for (int z = 0; z < l.size(); ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
                    return std::array<int, 3>{x, y, z};
    return std::nullopt;
}

bool is_distributive(const FiniteLattice& l) { return !distributivity_violation(l).has_value(); }

FinitePoset join_irreducibles(const FiniteLattice& l) {
    std::vector<int> keep;
    for (int i = 0; i < l.size(); ++i)
        if (i != l.bottom() && l.lower_covers(i).size() == 1) keep.push_back(i);
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    std::vector<std::vector<bool>> matrix(keep.size(), std::vector<bool>(keep.size(), false));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        labels.push_back(l.label(keep[a]));
        for (std::size_t b = 0; b < keep.size(); ++b) matrix[a][b] = l.less_eq(keep[a], keep[b]);
    }
    return FinitePoset::checked(std::move(labels), std::move(matrix));
}

FiniteLattice downset_lattice(const FinitePoset& p, std::size_t guard) {
    const int n = p.size();
    if (static_cast<std::size_t>(n) > guard)
        throw GuardError("downset_lattice: poset of " + std::to_string(n) +
                         " elements exceeds guard " + std::to_string(guard));
    std::vector<std::uint32_t> below(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.less_eq(j, i)) below[i] |= std::uint32_t{1} << j;

    std::vector<std::uint32_t> downsets;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        bool closed = true;
        for (std::uint32_t f = m; f && closed;) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            if ((below[v] & ~m) != 0) closed = false;
        }
        if (closed) downsets.push_back(m);
    }
    if (downsets.size() > 512)
        throw GuardError("downset_lattice: " + std::to_string(downsets.size()) +
                         " down-sets exceed the 512-element lattice cap");

    std::vector<std::string> labels;
    labels.reserve(downsets.size());
    for (std::uint32_t m : downsets) {
        std::string text = "{";
        bool first = true;
        for (int i = 0; i < n; ++i) {
            if (!(m >> i & 1)) continue;
            if (!first) text += ",";
            text += p.label(i);
            first = false;
        }
        text += "}";
        labels.push_back(std::move(text));
    }
    std::vector<std::vector<bool>> matrix(downsets.size(),
                                          std::vector<bool>(downsets.size(), false));
    for (std::size_t a = 0; a < downsets.size(); ++a)
        for (std::size_t b = 0; b < downsets.size(); ++b)
            matrix[a][b] = (downsets[a] & ~downsets[b]) == 0;
    return FiniteLattice::checked(std::move(labels), std::move(matrix));
}

namespace {

struct IsoSignature {
    int height;
    int depth;
    int lower;
    int upper;
    int below;
    int above;

    auto operator<=>(const IsoSignature&) const = default;
};

std::vector<IsoSignature> signatures(const FiniteLattice& l) {
    const int n = l.size();
    std::vector<int> below(n, 0), above(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (l.less_eq(j, i)) {
                ++below[i];
                ++above[j];
            }
    // longest-chain height from bottom / depth from top
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return below[a] < below[b]; });
    std::vector<int> height(n, 0), depth(n, 0);
    for (int i : ord)
        for (int j = 0; j < n; ++j)
            if (j != i && l.less_eq(j, i)) height[i] = std::max(height[i], height[j] + 1);
    std::reverse(ord.begin(), ord.end());
    for (int i : ord)
        for (int j = 0; j < n; ++j)
            if (j != i && l.less_eq(i, j)) depth[i] = std::max(depth[i], depth[j] + 1);

    std::vector<IsoSignature> sig(n);
    for (int i = 0; i < n; ++i)
        sig[i] = {height[i], depth[i], static_cast<int>(l.lower_covers(i).size()),
                  static_cast<int>(l.upper_covers(i).size()), below[i], above[i]};
    return sig;
}

bool extend_isomorphism(const FiniteLattice& l1, const FiniteLattice& l2,
                        const std::vector<IsoSignature>& sig1,
                        const std::vector<IsoSignature>& sig2, std::vector<int>& mapping,
                        std::vector<char>& used, int next) {
    const int n = l1.size();
    if (next == n) return true;
    for (int candidate = 0; candidate < n; ++candidate) {
        if (used[candidate] || sig1[next] != sig2[candidate]) continue;
        bool consistent = true;
        for (int prev = 0; prev < next && consistent; ++prev) {
            if (l1.less_eq(prev, next) != l2.less_eq(mapping[prev], candidate)) consistent = false;
            if (l1.less_eq(next, prev) != l2.less_eq(candidate, mapping[prev])) consistent = false;
        }
        if (!consistent) continue;
        mapping[next] = candidate;
        used[candidate] = 1;
        if (extend_isomorphism(l1, l2, sig1, sig2, mapping, used, next + 1)) return true;
        used[candidate] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& l1, const FiniteLattice& l2,
                                               std::size_t guard) {
    if (static_cast<std::size_t>(l1.size()) > guard || static_cast<std::size_t>(l2.size()) > guard)
        throw GuardError("are_isomorphic: lattice exceeds guard of " + std::to_string(guard) +
                         " elements");
    if (l1.size() != l2.size()) return std::nullopt;
    const auto sig1 = signatures(l1);
    const auto sig2 = signatures(l2);
    {
        auto sorted1 = sig1;
        auto sorted2 = sig2;
        std::sort(sorted1.begin(), sorted1.end());
        std::sort(sorted2.begin(), sorted2.end());
        if (sorted1 != sorted2) return std::nullopt;
    }
    std::vector<int> mapping(l1.size(), -1);
    std::vector<char> used(l1.size(), 0);
    if (!extend_isomorphism(l1, l2, sig1, sig2, mapping, used, 0)) return std::nullopt;
    // A returned mapping is always re-verified to preserve and reflect order.
    for (int i = 0; i < l1.size(); ++i)
        for (int j = 0; j < l1.size(); ++j)
            if (l1.less_eq(i, j) != l2.less_eq(mapping[i], mapping[j]))
                throw VerificationError("isomorphism backtracking returned a non-isomorphism");
    return mapping;
}

FiniteLattice to_lattice(const SeparationLattice& lattice, const Digraph& d) {
    std::vector<std::string> labels;
    labels.reserve(lattice.size());
    for (const VertexSet& s : lattice.elements) labels.push_back(d.format_set(s));
    return FiniteLattice::checked(std::move(labels), lattice.order);
}

} // namespace seplat
