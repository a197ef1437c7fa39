#include "altres/nodes.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace altres;

TEST_CASE("residues and removable/addable nodes") {
    CHECK(residue(Node{1, 1}, 3) == 0);
    CHECK(residue(Node{3, 1}, 3) == 1);
    CHECK(residue(Node{1, 3}, 2) == 0);
    Partition l({3, 1});
    CHECK(removable_nodes(l) == std::vector<Node>{{1, 3}, {2, 1}});
    CHECK(addable_nodes(l) == std::vector<Node>{{1, 4}, {2, 2}, {3, 1}});
    CHECK(remove_node(l, Node{2, 1}) == Partition({3}));
    CHECK(add_node(l, Node{2, 2}) == Partition({3, 2}));
    CHECK_FALSE(is_removable(l, Node{1, 2}));
}

TEST_CASE("normal and conormal nodes agree with the segment criterion") {
    for (int p : {2, 3, 5})
        for (int n = 0; n <= 14; ++n)
            for (const auto& l : oracle::partitions(n))
                for (int i = 0; i < p; ++i) {
                    CHECK(normal_nodes(l, i, p) == oracle::normal(l, i, p));
                    CHECK(conormal_nodes(l, i, p) == oracle::conormal(l, i, p));
                }
}

TEST_CASE("reduced signature has the form -...-+...+") {
    for (const auto& l : oracle::partitions(12)) {
        auto red = reduced_signature(l, 1, 3);
        bool seen_plus = false;
        for (const auto& e : red) {
            if (e.sign == Sign::Plus) seen_plus = true;
            else CHECK_FALSE(seen_plus);
        }
    }
}

TEST_CASE("crystal round trips on p-regular partitions") {
    for (int p : {2, 3})
        for (int n = 1; n <= 12; ++n)
            for (const auto& l : oracle::partitions(n)) {
                if (!oracle::regular(l, p)) continue;
                for (int i = 0; i < p; ++i) {
                    CHECK(epsilon(l, i, p) == static_cast<int>(oracle::normal(l, i, p).size()));
                    CHECK(phi(l, i, p) == static_cast<int>(oracle::conormal(l, i, p).size()));
                    if (auto e = e_tilde(l, i, p)) {
                        CHECK(oracle::regular(*e, p));
                        CHECK(f_tilde(*e, i, p) == l);
                        // the good node is the lowest normal node
                        CHECK(good_node(l, i, p) == oracle::normal(l, i, p).back());
                    }
                    if (auto f = f_tilde(l, i, p)) CHECK(e_tilde(*f, i, p) == l);
                }
            }
}

TEST_CASE("JS partitions") {
    CHECK(is_js(Partition({5, 3}), 2));
    CHECK_FALSE(is_js(Partition({4, 3, 1}), 2));
    for (int n = 1; n <= 18; ++n)
        for (const auto& l : oracle::partitions(n)) {
            if (!oracle::regular(l, 2)) continue;
            bool same_parity = true;
            for (int x : l.parts()) same_parity = same_parity && (x % 2 == l.parts()[0] % 2);
            CHECK(is_js(l, 2) == same_parity);
            CHECK(is_js(l, 2) == (oracle::normal_count(l, 2) == 1));
        }
}

TEST_CASE("endomorphism dimension of the restriction counts normal nodes") {
    for (const auto& l : oracle::partitions(10))
        if (oracle::regular(l, 3)) CHECK(dim_end_restriction(l, 3) == oracle::normal_count(l, 3));
    // (3,2,1) at p = 3: the 1-removable node in row 3 is cancelled by the
    // 1-addable node at the end of row 2.
    Partition l({3, 2, 1});
    CHECK(restriction_multiplicity(l, Node{3, 1}, 3) == 0);
}
