#include <algorithm>

#include "doctest.h"

#include "hfdlab/blockmonoid.hpp"
#include "oracles.hpp"

using namespace hfdlab;

namespace {

std::vector<ZeroSumSequence> sorted(std::vector<ZeroSumSequence> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<FactorizationVector> sorted(std::vector<FactorizationVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("class subsets canonicalize their elements") {
    const FiniteAbelianGroup z6({6});
    const ClassSubset cs(z6, {{4}, {2}, {3}, {2}});
    CHECK(cs.size() == 3);
    CHECK(cs.classes() == std::vector<GroupElement>{{2}, {3}, {4}});
    CHECK(cs.index_of({3}) == 1);
    CHECK(cs.index_of({5}) == -1);
    CHECK(cs.content_sum({1, 0, 1}) == GroupElement{0});
    CHECK(cs.content_sum({1, 1, 0}) == GroupElement{5});

    CHECK_THROWS_AS(ClassSubset(z6, {{6}}), IncompatibleElementError);
    CHECK_THROWS_AS(ClassSubset(z6, {{-1}}), IncompatibleElementError);
    CHECK_THROWS_AS(ClassSubset(z6, {{1, 0}}), IncompatibleElementError);
}

TEST_CASE("sequence construction validates support and zero-sum") {
    const FiniteAbelianGroup z6({6});
    const ClassSubset cs(z6, {{2}, {3}, {4}});
    const ZeroSumSequence s = make_sequence(cs, {1, 0, 1});
    CHECK(s.total_length() == 2);
    CHECK_FALSE(s.empty());
    CHECK(make_sequence(cs, {0, 0, 0}).empty());

    CHECK_THROWS_AS(make_sequence(cs, {1, 0, 0}), InvalidSequenceError);
    CHECK_THROWS_AS(make_sequence(cs, {1, 0}), InvalidSequenceError);
    CHECK_THROWS_AS(make_sequence(cs, {-1, 0, 1}), InvalidSequenceError);

    CHECK(sequence_of(cs, {{2}, {2}, {2}}) == make_sequence(cs, {3, 0, 0}));
    CHECK_THROWS_AS(sequence_of(cs, {{5}}), InvalidSequenceError);
}

TEST_CASE("atom test on hand-checked sequences") {
    const FiniteAbelianGroup z6({6});
    const ClassSubset cs(z6, {{2}, {3}, {4}});
    CHECK(is_atom(cs, make_sequence(cs, {0, 2, 0})));
    CHECK(is_atom(cs, make_sequence(cs, {1, 0, 1})));
    CHECK(is_atom(cs, make_sequence(cs, {3, 0, 0})));
    CHECK_FALSE(is_atom(cs, make_sequence(cs, {3, 2, 0})));
    CHECK_FALSE(is_atom(cs, make_sequence(cs, {2, 0, 2})));
    CHECK_THROWS_AS(is_atom(cs, make_sequence(cs, {0, 0, 0})), InvalidSequenceError);
    CHECK_THROWS_AS(is_atom(cs, ZeroSumSequence{{1, 0, 0}}), InvalidSequenceError);
}

TEST_CASE("atom tables for worked instances") {
    const FiniteAbelianGroup z6({6});
    const ClassSubset cs(z6, {{2}, {3}, {4}});
    const AtomTable table = enumerate_atoms(cs);
    REQUIRE(table.size() == 4);
    // Sorted by length, then lexicographic multiplicity.
    CHECK(table.atom(0) == make_sequence(cs, {0, 2, 0})); // (3,3)
    CHECK(table.atom(1) == make_sequence(cs, {1, 0, 1})); // (2,4)
    CHECK(table.atom(2) == make_sequence(cs, {0, 0, 3})); // (4,4,4)
    CHECK(table.atom(3) == make_sequence(cs, {3, 0, 0})); // (2,2,2)
    CHECK(table.index_of(make_sequence(cs, {1, 0, 1})) == 1);
    // (2,3,3,4) is zero-sum but splits as (3,3)(2,4), so it is no atom.
    CHECK(table.index_of(make_sequence(cs, {1, 2, 1})) == -1);

    const FiniteAbelianGroup v4({2, 2});
    const ClassSubset full(v4, v4.enumerate_elements());
    CHECK(enumerate_atoms(full).size() == 5);

    const FiniteAbelianGroup z4({4});
    const ClassSubset z4_full(z4, z4.enumerate_elements());
    CHECK(enumerate_atoms(z4_full).size() == 7);

    const ClassSubset empty_subset(z4, {});
    CHECK(enumerate_atoms(empty_subset).size() == 0);

    const FiniteAbelianGroup trivial(std::vector<int>{});
    const ClassSubset trivial_full(trivial, {GroupElement{}});
    const AtomTable trivial_atoms = enumerate_atoms(trivial_full);
    REQUIRE(trivial_atoms.size() == 1);
    CHECK(trivial_atoms.atom(0).total_length() == 1);
}

TEST_CASE("atom enumeration matches the exhaustive oracle") {
    std::vector<ClassSubset> instances;
    for (int m = 2; m <= 6; ++m) {
        const FiniteAbelianGroup g({m});
        const auto elements = g.enumerate_elements();
        for (std::size_t mask = 0; mask < (std::size_t{1} << elements.size()); ++mask) {
            std::vector<GroupElement> classes;
            for (std::size_t i = 0; i < elements.size(); ++i) {
                if (mask & (std::size_t{1} << i)) classes.push_back(elements[i]);
            }
            instances.emplace_back(g, classes);
        }
        // the full cyclic subset is already included by the last mask
    }
    const FiniteAbelianGroup v4({2, 2});
    instances.emplace_back(v4, v4.enumerate_elements());
    instances.emplace_back(v4, std::vector<GroupElement>{{0, 1}, {1, 0}, {1, 1}});

    for (const auto& cs : instances) {
        const AtomTable table = enumerate_atoms(cs);
        const auto expected = oracles::atom_oracle(cs);
        CHECK(sorted(table.atoms()) == expected);
        for (const auto& atom : expected) CHECK(is_atom(cs, atom));
    }
}

TEST_CASE("factorization enumeration matches naive peeling") {
    const FiniteAbelianGroup z6({6});
    const ClassSubset cs(z6, {{2}, {3}, {4}});
    const AtomTable table = enumerate_atoms(cs);

    const ZeroSumSequence s = make_sequence(cs, {3, 0, 3});
    const auto found = enumerate_factorizations(s, table);
    REQUIRE(found.size() == 2);
    CHECK(found[0].length() == 2); // (2,2,2)(4,4,4)
    CHECK(found[1].length() == 3); // (2,4)^3
    CHECK(sorted(found) == oracles::factorization_oracle(s, table));
    CHECK(length_set(s, table) == std::set<int>{2, 3});

    CHECK(factorization_content(found[0], table) == s.mult);
    CHECK(factorization_content(found[1], table) == s.mult);

    const auto none = enumerate_factorizations(make_sequence(cs, {0, 0, 0}), table);
    REQUIRE(none.size() == 1);
    CHECK(none[0].length() == 0);
}

TEST_CASE("factorizations agree with the oracle across instances") {
    std::vector<ClassSubset> instances;
    const FiniteAbelianGroup z4({4});
    instances.emplace_back(z4, z4.enumerate_elements());
    const FiniteAbelianGroup z5({5});
    instances.emplace_back(z5, std::vector<GroupElement>{{1}, {2}, {3}, {4}});
    const FiniteAbelianGroup v4({2, 2});
    instances.emplace_back(v4, v4.enumerate_elements());

    for (const auto& cs : instances) {
        const AtomTable table = enumerate_atoms(cs);
        std::vector<int> mult(cs.size(), 0);
        // every zero-sum sequence of total length <= 6
        const int bound = 6;
        while (true) {
            std::size_t i = 0;
            int sum = 0;
            for (int c : mult) sum += c;
            for (; i < mult.size(); ++i) {
                if (sum < bound) {
                    ++mult[i];
                    break;
                }
                sum -= mult[i];
                mult[i] = 0;
            }
            if (i == mult.size()) break;
            if (!cs.group().is_zero(cs.content_sum(mult))) continue;
            const ZeroSumSequence s{mult};
            CHECK(sorted(enumerate_factorizations(s, table)) ==
                  oracles::factorization_oracle(s, table));
        }
    }
}

TEST_CASE("restricted factorizations only use allowed atoms") {
    const FiniteAbelianGroup z6({6});
    const ClassSubset cs(z6, {{2}, {3}, {4}});
    const AtomTable table = enumerate_atoms(cs);
    const ZeroSumSequence s = make_sequence(cs, {3, 0, 3});

    const int pair_idx = table.index_of(make_sequence(cs, {1, 0, 1}));
    const auto only_pairs = enumerate_factorizations(s, table, {pair_idx});
    REQUIRE(only_pairs.size() == 1);
    CHECK(only_pairs[0].length() == 3);

    const auto nothing = enumerate_factorizations(s, table, {});
    CHECK(nothing.empty());
}
