#include "altres/permmod.hpp"
#include "altres/permutation.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace altres;

TEST_CASE("permutations") {
    auto g = Permutation::parse(4, "(1,2,3)");
    CHECK(g(0) == 1);
    CHECK(g.is_even());
    CHECK_FALSE(Permutation::parse(4, "(1,2)").is_even());
    CHECK(to_string(g * g.inverse()) == "()");
    CHECK(to_string(Permutation::from_cycles(5, {{1, 2}, {4, 5}})) == "(1,2)(4,5)");
    CHECK(closure_order({Permutation::parse(4, "(1,2,3)"), Permutation::parse(4, "(2,3,4)")}) == 12);
    auto orb = orbits({Permutation::parse(5, "(1,2)(4,5)")}, 5);
    CHECK(orb == std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}});
}

TEST_CASE("subgroup syntax round trips") {
    for (const char* s : {"point-stabilizer", "young:5,3,1", "intransitive:13,3", "wreath:4x3", "full", "primitive"})
        CHECK(to_string(parse_subgroup(s)) == s);
    CHECK_THROWS(parse_subgroup("wreath:4"));
    CHECK_THROWS(parse_subgroup("nonsense"));
    CHECK_THROWS(validate(SubgroupDescriptor::young({3, 3}), 7));
    CHECK(SubgroupDescriptor::intransitive(5, 3).young_blocks(8) == Composition{5, 3});
}

TEST_CASE("generators are even and produce the stated order") {
    const std::vector<std::pair<SubgroupDescriptor, int>> cases = {
        {SubgroupDescriptor::young({3, 2}), 5},       {SubgroupDescriptor::young({4, 2, 1}), 7},
        {SubgroupDescriptor::young({2, 2, 2}), 6},    {SubgroupDescriptor::intransitive(4, 3), 7},
        {SubgroupDescriptor::wreath(2, 3), 6},        {SubgroupDescriptor::wreath(3, 2), 6},
        {SubgroupDescriptor::wreath(2, 4), 8},        {SubgroupDescriptor::wreath(3, 3), 9},
        {SubgroupDescriptor::point_stabilizer(), 6},  {SubgroupDescriptor::full(), 7},
    };
    for (const auto& [d, n] : cases) {
        auto gens = generators(d, n);
        for (const auto& g : gens) CHECK(g.is_even());
        CHECK_MESSAGE(closure_order(gens) == subgroup_order(d, n), to_string(d));
    }
}

TEST_CASE("permutation module invariants count orbits") {
    for (int n = 5; n <= 8; ++n)
        for (const auto& d : {SubgroupDescriptor::young({n - 2, 2}), SubgroupDescriptor::point_stabilizer(),
                              SubgroupDescriptor::young({n - 3, 2, 1})})
            for (int k = 1; 2 * k <= n; ++k) {
                auto gens = generators(d, n);
                int orb = oracle::orbits_on_subsets(gens, n, k);
                CHECK(orbit_count(gens, n, k) == orb);
                for (int p : {2, 3}) CHECK(invariant_dim(ModuleSpec{ModuleKind::Permutation, n, p, k}, d) == orb);
            }
}

TEST_CASE("dual Specht invariants match the quotient computation") {
    for (int p : {2, 3})
        for (int n = 5; n <= 9; ++n) {
            std::vector<SubgroupDescriptor> ds = {SubgroupDescriptor::point_stabilizer(),
                                                  SubgroupDescriptor::young({n - 2, 2}),
                                                  SubgroupDescriptor::young({n - 3, 3})};
            if (n % 2 == 0) ds.push_back(SubgroupDescriptor::wreath(2, n / 2));
            if (n % 3 == 0) ds.push_back(SubgroupDescriptor::wreath(3, n / 3));
            for (const auto& d : ds) {
                auto gens = generators(d, n);
                CHECK(invariant_dim(ModuleSpec{ModuleKind::S1Star, n, p, 1}, d) == oracle::s1_quotient_invariants(n, p, gens));
                CHECK(invariant_dim(ModuleSpec{ModuleKind::S2Star, n, p, 2}, d) == oracle::s2_quotient_invariants(n, p, gens));
            }
        }
}

TEST_CASE("dual Specht dimensions and coordinates") {
    CHECK(ModuleSpec{ModuleKind::S1Star, 7, 2, 1}.dimension() == 6);
    CHECK(ModuleSpec{ModuleKind::S2Star, 7, 2, 2}.dimension() == 14);
    CHECK(ModuleSpec{ModuleKind::Permutation, 7, 2, 3}.dimension() == 35);
    CHECK(s2_basis_labels(6).size() == 9);
    auto c = s2_coordinates(6, 1, 2);
    CHECK(c.size() == 9);
    CHECK(c[0] == 1);
    CHECK_THROWS(validate(ModuleSpec{ModuleKind::Permutation, 5, 2, 3}));
}
