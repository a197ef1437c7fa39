#include "altres/verdicts.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace altres;

namespace {

Partition P(std::initializer_list<int> v) { return Partition(std::vector<int>(v)); }

}  // namespace

TEST_CASE("point stabilizer") {
    auto v = classify_point_stabilizer(P({5, 3}), 2);
    CHECK(v.outcome == Outcome::Irreducible);
    CHECK(v.clause == "Theorem B(a)");
    v = classify_point_stabilizer(P({4, 3, 1}), 2);
    CHECK(v.outcome == Outcome::Irreducible);
    CHECK(v.clause == "Theorem B(b)");
    CHECK(v.evidence.normal_nodes.size() == 2);
    for (const auto& a : v.evidence.normal_nodes) CHECK(residue(a, 2) == 1);
    v = classify_point_stabilizer(P({4, 1, 1}), 3);
    CHECK(v.outcome == Outcome::Irreducible);
    CHECK(v.clause == "Theorem B(a)");
    CHECK(classify_point_stabilizer(P({4, 4}), 2).outcome == Outcome::NotApplicable);
}

TEST_CASE("point stabilizer residue form equals parity form at p = 2") {
    for (int n = 5; n <= 22; ++n)
        for (const auto& l : enumerate_splitting(n, 2)) {
            bool irr = classify_point_stabilizer(l, 2).outcome == Outcome::Irreducible;
            CHECK(irr == point_stabilizer_parity_form(l));
        }
}

TEST_CASE("two-point stabilizer") {
    auto v = classify_two_point(P({5, 3}), 2);
    CHECK(v.outcome == Outcome::Irreducible);
    REQUIRE(v.evidence.label.has_value());
    CHECK(*v.evidence.label == P({4, 2}));
    CHECK(classify_two_point(P({4, 3, 1}), 2).outcome == Outcome::Reducible);
    CHECK(classify_two_point(P({4, 1, 1}), 3).outcome == Outcome::Irreducible);
    CHECK(two_point_label(P({7, 5, 3})) == P({6, 4, 3}));
}

TEST_CASE("intransitive") {
    CHECK(classify_intransitive(P({4, 3, 1}), 2, {7, 1}).outcome == Outcome::Irreducible);
    CHECK(classify_intransitive(P({4, 3, 1}), 2, {5, 3}).outcome == Outcome::Reducible);
    CHECK(classify_intransitive(P({4, 1, 1}), 3, {4, 2}).outcome == Outcome::Irreducible);
    CHECK(classify_intransitive(P({4, 3, 2, 1}), 2, {4, 3, 3}).outcome == Outcome::Reducible);
}

TEST_CASE("wreath") {
    CHECK(classify_wreath(P({4, 3, 1}), 2, 4, 2).outcome == Outcome::Reducible);
    CHECK(classify_wreath(P({3, 2, 1}), 2, 3, 2).outcome == Outcome::Reducible);
    CHECK(classify_wreath(P({7, 5}), 2, 3, 4).outcome == Outcome::Irreducible);
}

TEST_CASE("basic spin") {
    CHECK(basic_spin_dim(8) == 8);
    CHECK(basic_spin_dim(9) == 16);
    CHECK(basic_spin_dim(2) == 1);
    CHECK(classify_basic_spin_intransitive(12, {5, 5, 2}).outcome == Outcome::Irreducible);
    CHECK(classify_basic_spin_intransitive(12, {7, 5}).outcome == Outcome::Irreducible);
    CHECK(classify_basic_spin_intransitive(12, {4, 4, 4}).outcome == Outcome::Reducible);
    CHECK(spin_multiplicity_intransitive(12, {7, 5}) == 0);
    CHECK(spin_multiplicity_intransitive(12, {5, 5, 2}) == 1);
    auto w = classify_basic_spin_wreath(12, 3, 4);
    CHECK(w.outcome == Outcome::Irreducible);
    CHECK(spin_multiplicity_wreath(3, 4) == 0);
    CHECK(classify_basic_spin_wreath(12, 6, 2).outcome == Outcome::Irreducible);
    CHECK(classify_basic_spin_wreath(16, 4, 4).outcome == Outcome::Reducible);
    CHECK(spin_multiplicity_wreath(4, 4) == 2);
}

TEST_CASE("umbrella dispatch") {
    auto v = classify({2, beta(16), SubgroupDescriptor::intransitive(13, 3)});
    CHECK(v.outcome == Outcome::Irreducible);
    CHECK(v.clause == "Theorem D(ii)");
    CHECK(classify({2, beta(16), SubgroupDescriptor::intransitive(12, 4)}).outcome == Outcome::Reducible);
    CHECK(classify({2, P({5, 3}), SubgroupDescriptor::primitive()}).outcome == Outcome::OutOfScopePrimitive);
    CHECK(classify({2, P({5, 3}), SubgroupDescriptor::full()}).outcome == Outcome::Irreducible);
    auto b = classify({3, P({4, 2, 1}), SubgroupDescriptor::point_stabilizer()});
    CHECK(b.clause.rfind("Theorem B", 0) == 0);
    CHECK(b.outcome == classify_point_stabilizer(P({4, 2, 1}), 3).outcome);
}

TEST_CASE("small-case table") {
    CHECK(small_case_table().size() == 11);
    for (const auto& c : small_case_table()) {
        CHECK(c.lambda.size() == c.n);
        CHECK_FALSE(c.justification.empty());
        auto hit = small_case(c.p, c.lambda, c.subgroup);
        REQUIRE(hit.has_value());
        CHECK(hit->outcome == c.outcome);
    }
}
