#include "doctest.h"

#include "hfdlab/localization.hpp"

using namespace hfdlab;

namespace {

struct Instance {
    ClassSubset cs;
    AtomTable atoms;
    std::vector<Relation> relations;
    AtomClassification classification;
};

Instance build(const std::vector<int>& moduli, const std::vector<GroupElement>& classes) {
    const FiniteAbelianGroup group(moduli);
    const ClassSubset cs(group, classes);
    AtomTable atoms = enumerate_atoms(cs);
    auto relations = irredundant_relations(atoms);
    auto classification = classify_atoms(atoms, relations);
    return Instance{cs, std::move(atoms), std::move(relations), std::move(classification)};
}

LocalizationSetup localize(const Instance& inst, std::vector<int> generators) {
    return make_localization(inst.cs, inst.atoms, inst.relations, inst.classification,
                             std::move(generators));
}

} // namespace

TEST_CASE("inverting the good atom of the worked Z/6 instance") {
    const Instance inst = build({6}, {{2}, {3}, {4}});
    const int three_sq = inst.atoms.index_of(make_sequence(inst.cs, {0, 2, 0}));
    const LocalizationSetup setup = localize(inst, {three_sq});

    CHECK(setup.B == std::vector<int>{three_sq});
    CHECK(setup.C.size() == 3);
    CHECK(eligible_claim_star_atoms(setup).empty());

    const auto relations = localized_relations(setup);
    REQUIRE(relations.size() == 1);
    CHECK(relations[0].lhs_length == 2);
    CHECK(relations[0].rhs_length == 3);
    CHECK_FALSE(relations[0].balanced());
    CHECK(relations[0].distance() == 1);

    const NagataCheck nagata = nagata_instance_check(setup, {2});
    CHECK_FALSE(nagata.hfd.localized);
    CHECK_FALSE(nagata.hfd.base);
    CHECK(nagata.hfd.consistent);
    CHECK_FALSE(nagata.r_chfd.at(2).localized);
    CHECK(nagata.r_chfd.at(2).consistent);
}

TEST_CASE("an atom can become reducible after inverting a generator") {
    const Instance inst = build({4}, {{1}, {2}});
    // atoms: (1,1,2) = (2,1), (2,2) = (0,2), (1,1,1,1) = (4,0)
    const int two_sq = inst.atoms.index_of(make_sequence(inst.cs, {0, 2}));
    const int mixed = inst.atoms.index_of(make_sequence(inst.cs, {2, 1}));
    const int ones = inst.atoms.index_of(make_sequence(inst.cs, {4, 0}));
    REQUIRE(inst.relations.size() == 1);
    CHECK(inst.relations[0].balanced());
    CHECK(inst.classification.bad_indices().empty());

    const LocalizationSetup setup = localize(inst, {two_sq});
    CHECK(setup.B == std::vector<int>{two_sq});
    CHECK(setup.C == std::vector<int>{mixed});
    CHECK(eligible_claim_star_atoms(setup) == std::vector<int>{ones});

    // (1,1,1,1) * (2,2) = (1,1,2)^2 inserts one extra factor
    const ClaimStarResult star = claim_star_witness(setup, ones);
    CHECK(star.atom == ones);
    CHECK(star.bound == 16);
    REQUIRE(star.witness.has_value());
    CHECK(star.witness->s_factors == std::vector<int>{two_sq});
    CHECK(star.witness->mixed_factors == std::vector<int>{mixed, mixed});

    const ClaimStarResult tight = claim_star_witness(setup, ones, 1);
    CHECK_FALSE(tight.witness.has_value());
    CHECK_FALSE(tight.diagnostic.empty());

    CHECK(localized_relations(setup).empty());
    const NagataCheck nagata = nagata_instance_check(setup);
    CHECK(nagata.hfd.localized);
    CHECK(nagata.hfd.base);
    CHECK(nagata.hfd.consistent);

    CHECK_THROWS_AS(claim_star_witness(setup, two_sq), LocalizationError);
    CHECK_THROWS_AS(claim_star_witness(setup, mixed), LocalizationError);
    CHECK_THROWS_AS(claim_star_witness(setup, 99), LocalizationError);
}

TEST_CASE("localization setup validation") {
    const Instance z6 = build({6}, {{2}, {3}, {4}});
    const int pair = z6.atoms.index_of(make_sequence(z6.cs, {1, 0, 1}));
    const int three_sq = z6.atoms.index_of(make_sequence(z6.cs, {0, 2, 0}));
    CHECK_THROWS_AS(localize(z6, {pair}), LocalizationError);      // bad atom
    CHECK_THROWS_AS(localize(z6, {-1}), LocalizationError);        // out of range
    CHECK_THROWS_AS(localize(z6, {three_sq, three_sq}), LocalizationError);

    const Instance z4 = build({4}, {{1}, {2}});
    const int mixed = z4.atoms.index_of(make_sequence(z4.cs, {2, 1}));
    // (2,2) divides (1,1,2)^2 but would not be inverted
    CHECK_FALSE(is_divisor_closed(z4.atoms, {mixed}));
    CHECK_THROWS_AS(localize(z4, {mixed}), LocalizationError);
    const int two_sq = z4.atoms.index_of(make_sequence(z4.cs, {0, 2}));
    CHECK(is_divisor_closed(z4.atoms, {two_sq}));
}

TEST_CASE("empty generator set reproduces the base relations") {
    const Instance inst = build({6}, {{2}, {3}, {4}});
    const LocalizationSetup setup = localize(inst, {});
    CHECK(setup.B.empty());
    CHECK(setup.C.size() == inst.atoms.size());

    const auto relations = localized_relations(setup);
    REQUIRE(relations.size() == inst.relations.size());
    for (std::size_t i = 0; i < relations.size(); ++i) {
        CHECK(relations[i].lhs.counts == inst.relations[i].lhs.counts);
        CHECK(relations[i].rhs.counts == inst.relations[i].rhs.counts);
        CHECK(relations[i].lhs_length == inst.relations[i].lhs.length());
        CHECK(relations[i].rhs_length == inst.relations[i].rhs.length());
    }
}

TEST_CASE("divisor-closed good generator subsets") {
    const Instance z4 = build({4}, {{1}, {2}});
    const auto subsets = divisor_closed_good_subsets(z4.atoms, z4.classification);
    const int two_sq = z4.atoms.index_of(make_sequence(z4.cs, {0, 2}));
    const int ones = z4.atoms.index_of(make_sequence(z4.cs, {4, 0}));
    const std::vector<std::vector<int>> expected = {
        {}, {two_sq}, {ones}, {0, 1, 2}};
    CHECK(subsets == expected);

    const Instance z6 = build({6}, {{2}, {3}, {4}});
    const int three_sq = z6.atoms.index_of(make_sequence(z6.cs, {0, 2, 0}));
    CHECK(divisor_closed_good_subsets(z6.atoms, z6.classification) ==
          std::vector<std::vector<int>>{{}, {three_sq}});
}
