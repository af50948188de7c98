#pragma once

#include <map>
#include <set>
#include <vector>

#include "hfdlab/group.hpp"

namespace hfdlab {

/// The classes of a group that carry prime divisors. Kept sorted by
/// coordinate order, so every zero-sum sequence over the subset has a
/// canonical dense multiplicity vector.
class ClassSubset {
public:
    ClassSubset() = default;
    ClassSubset(FiniteAbelianGroup group, std::vector<GroupElement> classes);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<GroupElement>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }

    /// Position of g among the classes, -1 if absent.
    int index_of(const GroupElement& g) const;

    /// Group sum of a multiplicity vector over the classes.
    GroupElement content_sum(const std::vector<int>& mult) const;

    bool operator==(const ClassSubset&) const = default;

private:
    FiniteAbelianGroup group_;
    std::vector<GroupElement> classes_;
};

/// Multiset of classes summing to zero; models the prime-divisor content of
/// a principal ideal. mult is aligned with ClassSubset::classes().
struct ZeroSumSequence {
    std::vector<int> mult;

    int total_length() const;
    bool empty() const { return total_length() == 0; }

    auto operator<=>(const ZeroSumSequence&) const = default;
};

/// Validates support and zero-sum; throws InvalidSequenceError otherwise.
ZeroSumSequence make_sequence(const ClassSubset& cs, std::vector<int> mult);

/// Builds a sequence from explicit class elements ("(2,2,4)" style input).
ZeroSumSequence sequence_of(const ClassSubset& cs, const std::vector<GroupElement>& elems);

/// True iff no nonempty proper sub-multiset of s sums to zero. s must be a
/// nonempty zero-sum sequence over cs.
bool is_atom(const ClassSubset& cs, const ZeroSumSequence& s);

/// The complete list of atoms (minimal zero-sum sequences) of the block
/// monoid over a class subset, ordered by total length then lexicographic
/// multiplicity vector.
class AtomTable {
public:
    AtomTable() = default;
    AtomTable(ClassSubset cs, std::vector<ZeroSumSequence> atoms);

    const ClassSubset& class_subset() const { return cs_; }
    const std::vector<ZeroSumSequence>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    const ZeroSumSequence& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }

    /// Position of s in the table, -1 if absent.
    int index_of(const ZeroSumSequence& s) const;

private:
    ClassSubset cs_;
    std::vector<ZeroSumSequence> atoms_;
    std::map<std::vector<int>, int> index_;
};

/// Enumerates all atoms over cs. Search depth is bounded by |G| (every
/// minimal zero-sum sequence has length at most the group order); the DFS
/// runs over non-decreasing class indices and prunes any branch whose
/// multiset already contains a nonempty proper zero-sum sub-multiset.
AtomTable enumerate_atoms(const ClassSubset& cs);

/// Multiset of atoms; counts is aligned with AtomTable::atoms().
struct FactorizationVector {
    std::vector<int> counts;

    int length() const;
    auto operator<=>(const FactorizationVector&) const = default;
};

/// Content of a factorization: sum of counts[a] * content(atom a), as a
/// multiplicity vector over the table's classes.
std::vector<int> factorization_content(const FactorizationVector& f, const AtomTable& t);

/// All factorizations of s into atoms of t, by DFS over atom indices with
/// content-dominance pruning. The empty sequence has exactly the empty
/// factorization. Results sorted by (length, counts).
std::vector<FactorizationVector> enumerate_factorizations(const ZeroSumSequence& s,
                                                          const AtomTable& t);

/// Same, but only atoms whose index appears in `allowed` may be used.
/// Counts stay indexed over the full table.
std::vector<FactorizationVector> enumerate_factorizations(const ZeroSumSequence& s,
                                                          const AtomTable& t,
                                                          const std::vector<int>& allowed);

/// Lengths of all factorizations of s.
std::set<int> length_set(const ZeroSumSequence& s, const AtomTable& t);

} // namespace hfdlab
