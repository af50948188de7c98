#pragma once

#include <cstddef>
#include <vector>

#include "hfdlab/errors.hpp"

namespace hfdlab {

/// Element of a finite abelian group given as a product of cyclic factors.
/// coords[i] is the canonical residue modulo the i-th factor, so two
/// elements are equal iff their coordinate vectors are equal.
using GroupElement = std::vector<int>;

/// Finite abelian group Z/m1 x ... x Z/mk. The moduli are kept exactly as
/// given: [2,3] and [6] are distinct presentations of isomorphic groups.
/// An empty modulus list is the trivial group.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<int> moduli);

    const std::vector<int>& moduli() const { return moduli_; }
    long long order() const { return order_; }
    std::size_t rank() const { return moduli_.size(); }

    GroupElement zero() const;
    GroupElement add(const GroupElement& g, const GroupElement& h) const;
    GroupElement negate(const GroupElement& g) const;
    bool is_zero(const GroupElement& g) const;

    /// Canonical representative of an arbitrary integer coordinate vector.
    GroupElement reduce(const GroupElement& g) const;

    /// Least k >= 1 with k*g = 0; divides order().
    int element_order(const GroupElement& g) const;

    /// All elements exactly once, in lexicographic coordinate order.
    std::vector<GroupElement> enumerate_elements() const;

    /// Rank of g in the enumeration order (mixed-radix value of coords).
    long long index_of(const GroupElement& g) const;
    GroupElement element_at(long long index) const;

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    void check_rank(const GroupElement& g) const;
    void check_element(const GroupElement& g) const;

    std::vector<int> moduli_;
    long long order_ = 1;
};

} // namespace hfdlab
