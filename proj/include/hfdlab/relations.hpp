#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "hfdlab/blockmonoid.hpp"
#include "hfdlab/diophantine.hpp"

namespace hfdlab {

/// Default candidate budget for every Hilbert-basis computation.
inline constexpr std::size_t kDefaultResourceCap = 1'000'000;

/// Multiplicity matrix of an atom table: entry (i, j) is the number of
/// copies of class i (in class-subset order) inside atom j.
std::vector<std::vector<long long>> content_matrix(const AtomTable& atoms);

/// An equality between two distinct products of atoms that multiply to the
/// same zero-sum sequence.  Canonical orientation puts the side with the
/// smaller (length, counts) pair on the left.
struct Relation {
    FactorizationVector lhs;
    FactorizationVector rhs;

    bool balanced() const { return lhs.length() == rhs.length(); }
    bool r_balanced(int r) const;
    /// Absolute difference of the two factorization lengths.
    int distance() const;

    auto operator<=>(const Relation&) const = default;
};

/// Builds a relation in canonical orientation.  Throws InvalidParameterError
/// unless both sides fit the table, multiply to the same class content, and
/// differ as factorizations.
Relation make_relation(const AtomTable& atoms, FactorizationVector lhs, FactorizationVector rhs);

/// Atoms appearing on either side, as indices into the atom table.
std::vector<std::size_t> relation_support(const Relation& rel);

/// Total length of the zero-sum sequence both sides multiply to.
int relation_content_length(const AtomTable& atoms, const Relation& rel);

/// All irredundant relations of the atom table: the indecomposable elements
/// of {(x, y) : both sides have equal class content}, excluding the trivial
/// pairs that put the same single atom on both sides.  Every other relation
/// between atom products is a sum of these.  Output is sorted by
/// (lhs length, rhs length, lhs counts, rhs counts).
std::vector<Relation> irredundant_relations(const AtomTable& atoms,
                                            const SolverOptions& options = {});

/// The irredundant relations whose content length is at most max_content:
/// exactly the corresponding subset of irredundant_relations, but computed
/// by a budgeted search over factorization pairs, so it stays cheap when
/// the full relation set is out of reach.
std::vector<Relation> irredundant_relations_within(const AtomTable& atoms, int max_content,
                                                   const SolverOptions& options = {});

/// Rank of the lattice of content-balanced integer combinations of the
/// atoms.  Zero exactly when the table admits no relation at all, i.e. the
/// monoid is factorial.
std::size_t relation_lattice_rank(const AtomTable& atoms);

/// gcd of the length differences |lhs| - |rhs| over all irredundant
/// relations, computed from a kernel lattice basis without enumerating
/// them.  Returns 0 exactly when every relation is balanced (the
/// half-factorial case, including the case of no relations); the monoid
/// satisfies the mod-r congruence variant exactly when r divides this gcd.
long long relation_distance_gcd(const AtomTable& atoms);

/// Tests one relation for irredundance directly: computes the minimal
/// elements of the pair system below (lhs, rhs) and checks that the pair
/// itself is among them.  Independent of the enumeration above except for
/// the shared linear solver.
bool is_irredundant(const AtomTable& atoms, const Relation& rel,
                    const SolverOptions& options = {});

/// Good/bad split of the atoms of a table, derived from a relation list.
/// An atom is bad when it appears in some unbalanced relation, r-bad when
/// it appears in a relation whose side lengths differ mod r.  `witness`
/// holds the index of one such relation, or -1 for good atoms.
struct AtomClassification {
    std::vector<bool> bad;
    std::vector<int> witness;
    std::map<int, std::vector<bool>> r_bad;
    std::map<int, std::vector<int>> r_witness;

    std::size_t size() const { return bad.size(); }
    std::vector<std::size_t> good_indices() const;
    std::vector<std::size_t> bad_indices() const;
};

/// Classifies every atom against `relations`; `rs` lists the moduli for the
/// congruence variant (each must be >= 2, else InvalidParameterError).
AtomClassification classify_atoms(const AtomTable& atoms, const std::vector<Relation>& relations,
                                  const std::vector<int>& rs = {});

} // namespace hfdlab
