#include "altres/branching.hpp"
#include "altres/mullineux.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace altres;

TEST_CASE("small images") {
    CHECK(mullineux_map(Partition({2, 1}), 3) == Partition({3}));
    CHECK(mullineux_map(Partition({3}), 3) == Partition({2, 1}));
    CHECK(mullineux_map(Partition({4, 3, 1}), 2) == Partition({4, 3, 1}));
}

TEST_CASE("conjugation when p exceeds n") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& l : oracle::partitions(n)) {
            CHECK(mullineux_map(l, 11) == oracle::conjugate(l));
            CHECK(mullineux_map_crystal(l, 11) == oracle::conjugate(l));
        }
}

TEST_CASE("involution, size, symbol and crystal agree") {
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 14; ++n)
            for (const auto& l : enumerate_p_regular(n, p)) {
                auto m = mullineux_map(l, p);
                CHECK(m.size() == n);
                CHECK(oracle::regular(m, p));
                CHECK(mullineux_map(m, p) == l);
                CHECK(mullineux_map_crystal(l, p) == m);
                CHECK(partition_from_symbol(mullineux_symbol(l, p), p) == l);
                if (p == 2) CHECK(m == l);
            }
}

TEST_CASE("p-rim of (5,3) at p = 2") {
    auto rim = p_rim(Partition({5, 3}), 2);
    CHECK(rim.nodes.size() + static_cast<std::size_t>(rim.remainder.size()) == 8);
    auto sym = mullineux_symbol(Partition({5, 3}), 2);
    int total = 0;
    for (auto [a, r] : sym) total += a;
    CHECK(total == 8);
}

TEST_CASE("good path rebuilds the partition") {
    for (const auto& l : enumerate_p_regular(9, 3)) {
        Partition cur;
        for (int i : good_path(l, 3)) cur = *f_tilde(cur, i, 3);
        CHECK(cur == l);
    }
}

TEST_CASE("sporadic p = 3 JS partitions are fixed points") {
    CHECK(js3_sporadic().size() == 11);
    for (const auto& l : js3_sporadic()) {
        CHECK(is_mullineux_fixed(l, 3));
        CHECK(is_js(l, 3));
    }
}
