#pragma once

#include <string>

#include "hfdlab/blockmonoid.hpp"

namespace hfdlab {

/// Renders an element as comma-separated residues: "3" for rank one,
/// "1,0" for higher rank, "()" for the trivial group's element.
std::string format_element(const GroupElement& g);

/// Accepts "3", "1:0" (flag syntax) and "1,0"; residues must already be
/// canonical for the group.  Throws InvalidParameterError on syntax and
/// IncompatibleElementError on rank mismatch or out-of-range residues.
GroupElement parse_element(const std::string& text, const FiniteAbelianGroup& group);

/// Sequence literal: classes repeated per multiplicity in class order,
/// e.g. "(2,2,4)"; rank >= 2 classes are parenthesized: "((1,0),(0,1))".
std::string format_sequence(const ZeroSumSequence& s, const ClassSubset& cs);

/// Parses a sequence literal back over cs; every listed class must belong
/// to the subset (InvalidParameterError) and the multiset must be zero-sum
/// (InvalidSequenceError).
ZeroSumSequence parse_sequence(const std::string& text, const ClassSubset& cs);

} // namespace hfdlab
