#include "doctest.h"

#include <stdexcept>

#include <random>

#include "partblocks/partition.hpp"
#include "oracles.hpp"

using namespace partblocks;

TEST_CASE("partition construction strips zeros and validates") {
    Partition lam = Partition::of({5, 5, 3, 2, 1, 1, 0, 0});
    CHECK(lam.parts() == std::vector<int>{5, 5, 3, 2, 1, 1});
    CHECK(lam.degree() == 17);
    CHECK(lam.to_string() == "(5^2,3,2,1^2)");

    CHECK(Partition::of({}) == Partition());
    CHECK(Partition().degree() == 0);

    CHECK_THROWS_AS(Partition::of({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::of({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::of({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("content sums") {
    CHECK(content_sum(Partition()) == 0);
    for (int n = 1; n <= 7; ++n) CHECK(content_sum(Partition::of({n})) == n * (n - 1) / 2);
    CHECK(content_sum(Partition::of({2, 1})) == 0); // nodes (1,1),(1,2),(2,1): 0+1-1
}

TEST_CASE("p-regularity") {
    CHECK_FALSE(is_p_regular(Partition::of({1, 1}), 2));
    CHECK(is_p_regular(Partition(), 2));
    CHECK(is_p_regular(Partition::of({5, 5, 3, 2, 1, 1}), 3));
    CHECK_FALSE(is_p_regular(Partition::of({5, 5, 3, 2, 1, 1}), 2));
}

TEST_CASE("dominance order basics") {
    CHECK(dominance_leq(Partition::of({1, 1}), Partition::of({2})));
    CHECK_FALSE(dominance_leq(Partition::of({2}), Partition::of({1, 1})));
    CHECK(dominance_leq(Partition::of({3}), Partition::of({2, 2}))); // degree 3 < 4
}

TEST_CASE("dominance is a partial order on small label sets") {
    auto labels = partitions_up_to(5);
    for (const auto& a : labels) {
        CHECK(dominance_leq(a, a));
        for (const auto& b : labels) {
            if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
            for (const auto& c : labels)
                if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
    }
}

TEST_CASE("removable and addable nodes match the worked diagram") {
    Partition lam = Partition::of({5, 5, 3, 2, 1, 1});
    std::vector<Node> rem = removable_nodes(lam);
    std::vector<Node> add = addable_nodes(lam);
    std::vector<int> rem_rows, add_rows;
    for (auto& nd : rem) rem_rows.push_back(nd.row);
    for (auto& nd : add) add_rows.push_back(nd.row);
    CHECK(rem_rows == std::vector<int>{2, 3, 4, 6});
    CHECK(add_rows == std::vector<int>{1, 3, 4, 5, 7});

    CHECK(removable_nodes(Partition()).empty());
    CHECK(addable_nodes(Partition()) == std::vector<Node>{{1, 1}});
    CHECK(removable_nodes(Partition::of({1})) == std::vector<Node>{{1, 1}});
    CHECK(addable_nodes(Partition::of({1})) == std::vector<Node>{{1, 2}, {2, 1}});
}

TEST_CASE("node removal round-trips and shifts the content sum") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Partition lam = testoracles::random_partition(rng, 12);
        for (const Node& nd : removable_nodes(lam)) {
            Partition mu = remove_node(lam, nd.row);
            CHECK(add_node(mu, nd.row) == lam);
            CHECK(content_sum(lam) - content_sum(mu) == lam.part(nd.row) - nd.row);
        }
    }
}

TEST_CASE("partitions_up_to: order and counts") {
    auto l0 = partitions_up_to(0);
    REQUIRE(l0.size() == 1);
    CHECK(l0[0] == Partition());

    auto l2 = partitions_up_to(2);
    REQUIRE(l2.size() == 4);
    CHECK(l2[0] == Partition());
    CHECK(l2[1] == Partition::of({1}));
    CHECK(l2[2] == Partition::of({2}));
    CHECK(l2[3] == Partition::of({1, 1}));

    CHECK(partitions_up_to(4).size() == 12);

    for (int n = 0; n <= 9; ++n) {
        long long expect = 0;
        for (int i = 0; i <= n; ++i) expect += testoracles::partition_count(i);
        CHECK(static_cast<long long>(partitions_up_to(n).size()) == expect);
        CHECK(static_cast<long long>(partitions_of(n).size()) == testoracles::partition_count(n));
    }
}
