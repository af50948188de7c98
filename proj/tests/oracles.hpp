#pragma once

#include <vector>

#include "hfdlab/blockmonoid.hpp"
#include "hfdlab/quadratic.hpp"
#include "hfdlab/relations.hpp"

// Definition-level reference implementations, used only by tests.  Nothing
// here calls the library's enumeration or solver code paths: atoms come
// from an exhaustive multiset walk, factorizations from naive peeling,
// irredundance from a direct sub-pair scan.  Agreement with the library is
// therefore evidence, not circularity.
namespace hfdlab::oracles {

// All minimal nonempty zero-sum multisets, found by walking every
// multiplicity vector of total length <= |G| (minimal zero-sum sequences
// never exceed the group order: with more elements two prefix sums over
// any ordering coincide, splitting off a proper zero-sum part).
std::vector<ZeroSumSequence> atom_oracle(const ClassSubset& cs);

// Every factorization of s into atoms from the table, by peeling one
// atom at a time with non-decreasing index.
std::vector<FactorizationVector> factorization_oracle(const ZeroSumSequence& s,
                                                      const AtomTable& atoms);

// Direct definition: the pair (x, y) decomposes iff some componentwise
// sub-pair other than (0,0) and (x,y) itself has equal class content on
// both sides.
bool irredundant_oracle(const AtomTable& atoms, const FactorizationVector& x,
                        const FactorizationVector& y);

// All irredundant equalities between distinct factorizations of the same
// sequence, over every zero-sum sequence of total length <= max_content,
// oriented and deduplicated like the library's relation list.
std::vector<Relation> relation_oracle(const ClassSubset& cs, const AtomTable& atoms,
                                      int max_content);

// Atom test by exhaustive divisor scan over the coefficient box
// |a| <= sqrt(N), |b| <= sqrt(N/d); divisibility is checked by clearing
// the denominator with the conjugate.
bool qi_atom_oracle(const QuadraticInteger& x);

} // namespace hfdlab::oracles
