#include "hfdlab/group.hpp"

#include <string>

namespace hfdlab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> moduli)
    : moduli_(std::move(moduli)) {
    for (int m : moduli_) {
        if (m < 2) {
            throw InvalidGroupError("group modulus must be >= 2, got " +
                                    std::to_string(m));
        }
        order_ *= m;
    }
}

GroupElement FiniteAbelianGroup::zero() const {
    return GroupElement(moduli_.size(), 0);
}

void FiniteAbelianGroup::check_rank(const GroupElement& g) const {
    if (g.size() != moduli_.size()) {
        throw IncompatibleElementError(
            "element has " + std::to_string(g.size()) + " coordinates, group has rank " +
            std::to_string(moduli_.size()));
    }
}

void FiniteAbelianGroup::check_element(const GroupElement& g) const {
    check_rank(g);
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (g[i] < 0 || g[i] >= moduli_[i]) {
            throw IncompatibleElementError("coordinate " + std::to_string(g[i]) +
                                           " is not a canonical residue modulo " +
                                           std::to_string(moduli_[i]));
        }
    }
}

GroupElement FiniteAbelianGroup::add(const GroupElement& g, const GroupElement& h) const {
    check_element(g);
    check_element(h);
    GroupElement out(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        out[i] = (g[i] + h[i]) % moduli_[i];
    }
    return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& g) const {
    check_element(g);
    GroupElement out(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        out[i] = g[i] == 0 ? 0 : moduli_[i] - g[i];
    }
    return out;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& g) const {
    check_element(g);
    for (int c : g) {
        if (c != 0) return false;
    }
    return true;
}

GroupElement FiniteAbelianGroup::reduce(const GroupElement& g) const {
    check_rank(g);
    GroupElement out(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        int r = g[i] % moduli_[i];
        out[i] = r < 0 ? r + moduli_[i] : r;
    }
    return out;
}

int FiniteAbelianGroup::element_order(const GroupElement& g) const {
    check_element(g);
    GroupElement acc = g;
    int k = 1;
    while (!is_zero(acc)) {
        acc = add(acc, g);
        ++k;
    }
    return k;
}

std::vector<GroupElement> FiniteAbelianGroup::enumerate_elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    GroupElement cur = zero();
    for (long long i = 0; i < order_; ++i) {
        out.push_back(cur);
        // odometer increment, least significant coordinate last
        for (std::size_t j = moduli_.size(); j-- > 0;) {
            if (++cur[j] < moduli_[j]) break;
            cur[j] = 0;
        }
    }
    return out;
}

long long FiniteAbelianGroup::index_of(const GroupElement& g) const {
    check_element(g);
    long long idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        idx = idx * moduli_[i] + g[i];
    }
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(long long index) const {
    GroupElement out(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        out[i] = static_cast<int>(index % moduli_[i]);
        index /= moduli_[i];
    }
    return out;
}

} // namespace hfdlab
