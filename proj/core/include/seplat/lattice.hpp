#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "seplat/digraph.hpp"
#include "seplat/separations.hpp"

namespace seplat {

inline constexpr std::size_t kIsomorphismGuard = 20;
inline constexpr std::size_t kDownsetGuard = 20;

/// Finite partial order over opaque labels, validated at construction.
class FinitePoset {
public:
    static FinitePoset checked(std::vector<std::string> labels,
                               std::vector<std::vector<bool>> less_eq);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    bool less_eq(int i, int j) const { return matrix_.at(i).at(j); }
    const std::vector<std::vector<bool>>& matrix() const { return matrix_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> matrix_;
};

/// Finite lattice carried extensionally: labels plus the order matrix.
/// Construction validates the partial-order axioms and that every pair has
/// a meet and a join; the tables are derived then and cached.
class FiniteLattice {
public:
    static FiniteLattice checked(std::vector<std::string> labels,
                                 std::vector<std::vector<bool>> less_eq);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    bool less_eq(int i, int j) const { return matrix_.at(i).at(j); }
    const std::vector<std::vector<bool>>& matrix() const { return matrix_; }
    int meet(int i, int j) const { return meet_.at(i).at(j); }
    int join(int i, int j) const { return join_.at(i).at(j); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    std::vector<int> lower_covers(int i) const;
    std::vector<int> upper_covers(int i) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> matrix_;
    std::vector<std::vector<int>> meet_;
    std::vector<std::vector<int>> join_;
    int bottom_ = 0;
    int top_ = 0;
};

/// First triple (x, y, z) with x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z), if any.
std::optional<std::array<int, 3>> distributivity_violation(const FiniteLattice& l);
bool is_distributive(const FiniteLattice& l);

/// Non-bottom elements with exactly one lower cover, under the restricted
/// order. For distributive lattices this is the Birkhoff dual.
FinitePoset join_irreducibles(const FiniteLattice& l);

/// Lattice of down-closed subsets of p, ordered by inclusion.
FiniteLattice downset_lattice(const FinitePoset& p, std::size_t guard = kDownsetGuard);

/// An order isomorphism l1 -> l2 (as an index mapping), or nullopt.
/// Backtracking with (height, cover-degree) signatures; refuses lattices
/// larger than `guard` elements.
std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& l1, const FiniteLattice& l2,
                                               std::size_t guard = kIsomorphismGuard);

/// View of a separation lattice as an abstract lattice; labels render the
/// vertex sets.
FiniteLattice to_lattice(const SeparationLattice& lattice, const Digraph& d);

} // namespace seplat
