#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfdlab/analysis.hpp"

namespace hfdlab {

/// A base instance together with an inverted submonoid: S is generated by a
/// divisor-closed set of good atoms (indices into the atom table).  B holds
/// the inverted atoms (they become units), C the atoms that remain atoms
/// after inverting S.  Atoms in neither set become units or reducible.
struct LocalizationSetup {
    ClassSubset cs;
    AtomTable atoms;
    std::vector<Relation> base_relations;
    AtomClassification classification;
    std::vector<int> s_generators;
    std::vector<int> B;
    std::vector<int> C;
};

/// Bounded divisor-closedness of a generator set: for every product of
/// generators with content length <= 2 * |G|, each atom dividing the
/// product must itself be a generator.  Divisibility of zero-sum sequences
/// is component-wise domination, so the check is a finite enumeration.
bool is_divisor_closed(const AtomTable& atoms, const std::vector<int>& generators);

/// Builds a setup and fills B and C.  B is the generator set itself.  An
/// atom a outside B lands in C unless it becomes a unit (content(a) plus
/// some product of B equals another product of B) or reducible (content(a)
/// plus a product of B equals a sum of >= 2 non-B atoms plus a product of
/// B); both are decided exactly as feasibility of linear systems.
///
/// Throws LocalizationError when a generator index is out of range or
/// duplicated, a generator is bad, or the divisor-closedness check fails.
LocalizationSetup make_localization(const ClassSubset& cs, const AtomTable& atoms,
                                    const std::vector<Relation>& base_relations,
                                    const AtomClassification& classification,
                                    std::vector<int> s_generators,
                                    const SolverOptions& options = {});

/// A relation of the localized monoid: both sides may carry inverted atoms
/// (counts over the full table), but only the C-atoms contribute length.
struct LocalizedRelation {
    FactorizationVector lhs;
    FactorizationVector rhs;
    int lhs_length = 0;
    int rhs_length = 0;

    bool balanced() const { return lhs_length == rhs_length; }
    bool r_balanced(int r) const;
    int distance() const;

    auto operator<=>(const LocalizedRelation&) const = default;
};

/// Indecomposable solutions of {M_C x + M_B u = M_C y + M_B v} minus the
/// trivial identical pairs, oriented by (length over C, counts) and sorted
/// deterministically.  Lengths count the x and y parts only.
std::vector<LocalizedRelation> localized_relations(const LocalizationSetup& setup,
                                                   const SolverOptions& options = {});

/// A balanced insertion witness: product(s_factors) * g = product(mixed),
/// with s_factors from B, mixed from B and C, and exactly one more factor
/// on the right.  Factor lists hold atom indices with multiplicity.
struct ClaimStarWitness {
    int atom = -1;
    std::vector<int> s_factors;
    std::vector<int> mixed_factors;
};

struct ClaimStarResult {
    int atom = -1;
    std::optional<ClaimStarWitness> witness;
    std::string diagnostic;
    int bound = 0;
};

/// Atoms outside B and C (the ones that become units or reducible); these
/// are the candidates for the balanced-insertion search.
std::vector<int> eligible_claim_star_atoms(const LocalizationSetup& setup);

/// Searches for a balanced insertion of atom_idx (which must lie outside
/// B and C, else LocalizationError) with left content length <= bound;
/// bound <= 0 selects the default 4 * |G|.  Returns the witness or a
/// diagnostic explaining that the budget was exhausted.
ClaimStarResult claim_star_witness(const LocalizationSetup& setup, int atom_idx, int bound = 0,
                                   const SolverOptions& options = {});

/// gcd of the C-length differences |x| - |y| over all localized relations,
/// computed from a kernel lattice basis of the doubled system without
/// enumerating them.  Zero exactly when every localized relation is
/// balanced; the localized monoid satisfies the mod-r congruence variant
/// exactly when r divides this gcd.
long long localized_distance_gcd(const LocalizationSetup& setup);

/// One transfer verdict: does the property hold after inverting S, in the
/// base, and is the implication "localized => base" satisfied.
struct TransferCheck {
    bool localized = false;
    bool base = false;
    bool consistent = false;
};

struct NagataCheck {
    TransferCheck hfd;
    std::map<int, TransferCheck> r_chfd;
};

/// Evaluates the localization-to-base transfer for half-factoriality and
/// its congruence variants (each r >= 2).  Both sides are decided from
/// kernel lattice gcds, so no relation enumeration is involved.
NagataCheck nagata_instance_check(const LocalizationSetup& setup, const std::vector<int>& rs = {});

/// All subsets of the good atoms that pass the bounded divisor-closedness
/// check, in ascending bitmask order (the empty set first).
std::vector<std::vector<int>> divisor_closed_good_subsets(const AtomTable& atoms,
                                                          const AtomClassification& c);

} // namespace hfdlab
