#include "doctest.h"

#include <stdexcept>

#include <random>

#include "partblocks/abacus.hpp"
#include "partblocks/blocks.hpp"
#include "oracles.hpp"

using namespace partblocks;

TEST_CASE("beta sequences") {
    CHECK(beta_sequence(Partition::of({5, 4}), 10) ==
          std::vector<long long>{14, 12, 7, 6, 5, 4, 3, 2, 1, 0});
    CHECK(beta_sequence(Partition(), 4) == std::vector<long long>{3, 2, 1, 0});
    CHECK(beta_sequence(Partition::of({1}), 3) == std::vector<long long>{3, 1, 0});
    CHECK_THROWS_AS(beta_sequence(Partition::of({3, 2}), 4), std::invalid_argument);
}

TEST_CASE("beta shift under b -> b+1") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Partition lam = testoracles::random_partition(rng, 10);
        int b = lam.degree() + static_cast<int>(rng() % 4);
        auto small = beta_sequence(lam, b);
        auto big = beta_sequence(lam, b + 1);
        REQUIRE(big.size() == small.size() + 1);
        for (size_t i = 0; i < small.size(); ++i) CHECK(big[i] == small[i] + 1);
        CHECK(big.back() == 0);
    }
}

TEST_CASE("abacus round trip") {
    Abacus a = abacus_of(Partition::of({5, 4}), 5, 10);
    CHECK(a.beads() == std::vector<long long>{0, 1, 2, 3, 4, 5, 6, 7, 12, 14});
    CHECK(partition_of(a) == Partition::of({5, 4}));

    Abacus empty = abacus_of(Partition(), 3, 6);
    CHECK(empty.beads() == std::vector<long long>{0, 1, 2, 3, 4, 5});

    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Partition lam = testoracles::random_partition(rng, 12);
        int b = lam.degree() + static_cast<int>(rng() % 5);
        CHECK(partition_of(abacus_of(lam, 5, b)) == lam);
        CHECK(partition_of(abacus_of(lam, 2, b)) == lam);
    }
}

TEST_CASE("runner counts") {
    CHECK(gamma(Partition::of({5, 4}), 5, 10).counts == std::vector<int>{2, 2, 3, 1, 2});
    CHECK(gamma(Partition(), 3, 6).counts == std::vector<int>{2, 2, 2});
}

TEST_CASE("p-cores against the rim-hook oracle") {
    CHECK(p_core(Partition::of({5, 4}), 5) == Partition::of({3, 1}));
    CHECK(p_core(Partition::of({2}), 2) == Partition());

    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        Partition lam = testoracles::random_partition(rng, 11);
        for (int p : {2, 3, 5}) {
            Partition core = p_core(lam, p);
            CHECK(core == testoracles::p_core_rim_hook(lam, p));
            CHECK(p_core(core, p) == core); // idempotent
            // Nakayama-compatible invariance of runner counts.
            int b = lam.degree();
            CHECK(gamma(lam, p, b) == gamma(core, p, b));
            // Degree = core degree + p * (total upward bead slack).
            long long slack = 0;
            Abacus a = abacus_of(lam, p, b);
            std::vector<std::vector<long long>> runner_rows(p);
            for (long long pos : a.beads()) runner_rows[pos % p].push_back(pos / p);
            for (int r = 0; r < p; ++r)
                for (size_t k = 0; k < runner_rows[r].size(); ++k)
                    slack += runner_rows[r][k] - static_cast<long long>(k);
            CHECK(lam.degree() == core.degree() + p * slack);
        }
    }
}

TEST_CASE("marked abacus of the worked example") {
    CHECK(beta_delta_sequence(Partition::of({2, 1}), 1, 7) ==
          std::vector<long long>{5, 8, 6, 4, 3, 2, 1, 0});
    MarkedAbacus m = marked_abacus(Partition::of({2, 1}), 5, 1, 7);
    CHECK(m.marker() == 0);
    CHECK(gamma_delta(m).counts == std::vector<int>{2, 2, 1, 2, 1});

    MarkedAbacus empty = marked_abacus(Partition(), 5, 2, 5);
    CHECK(empty.marker() == 2); // delta + b mod p
    CHECK(empty.base().beads() == std::vector<long long>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(marked_abacus(Partition::of({2, 1}), 5, 0, 7), std::invalid_argument);
    CHECK_THROWS_AS(marked_abacus(Partition::of({2, 1}), 5, 5, 7), std::invalid_argument);
}

TEST_CASE("gamma_delta sums to b+1") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        Partition lam = testoracles::random_partition(rng, 10);
        for (int p : {2, 3, 5}) {
            int delta = 1 + static_cast<int>(rng() % (p - 1));
            int b = lam.degree() + static_cast<int>(rng() % 4);
            auto g = gamma_delta(lam, p, delta, b);
            int total = 0;
            for (int c : g.counts) total += c;
            CHECK(total == b + 1);
        }
    }
}

TEST_CASE("runner counts agree iff the beta_delta sequences match mod p") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        Partition lam = testoracles::random_partition(rng, 7);
        Partition mu = testoracles::random_partition(rng, 7);
        for (int p : {2, 3, 5}) {
            int delta = 1 + static_cast<int>(rng() % (p - 1));
            int b = std::max(lam.degree(), mu.degree()) + static_cast<int>(rng() % 3);
            bool by_counts =
                gamma_delta(lam, p, delta, b) == gamma_delta(mu, p, delta, b);
            bool by_multisets = tilde_p(beta_delta_sequence(lam, delta, b),
                                        beta_delta_sequence(mu, delta, b), p);
            CHECK(by_counts == by_multisets);
        }
    }
}

TEST_CASE("orbit minimum") {
    CHECK(orbit_min(Partition::of({7, 3, 3, 1, 1}), 5, 1) == Partition::of({7, 3}));

    // A fixed point: already a p-core with the marker on the rightmost
    // maximal runner stays put.
    Partition fixed = orbit_min(Partition::of({7, 3}), 5, 1);
    CHECK(orbit_min(fixed, 5, 1) == fixed);

    SUBCASE("b-independence and the defining conditions") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            Partition lam = testoracles::random_partition(rng, 10);
            for (int p : {2, 3, 5}) {
                int delta = 1 + static_cast<int>(rng() % (p - 1));
                Partition mini = orbit_min(lam, p, delta);
                // Same orbit invariant at a shared bead count.
                int b = std::max(lam.degree(), mini.degree()) + static_cast<int>(rng() % 3);
                auto g_lam = gamma_delta(lam, p, delta, b);
                auto g_min = gamma_delta(mini, p, delta, b);
                CHECK(g_lam == g_min);
                // (ii) beads fully pushed up: the minimum is a p-core.
                CHECK(p_core(mini, p) == mini);
                // (iii) marker on the rightmost runner of maximal count.
                MarkedAbacus mm = marked_abacus(mini, p, delta, b);
                auto counts = gamma_delta(mm).counts;
                for (int r = mm.marker() + 1; r < p; ++r) CHECK(counts[r] < counts[mm.marker()]);
                // Degree minimality is checked against charp_orbit elsewhere.
                CHECK(mini.degree() <= lam.degree());
                // Adding p beads does not change the answer.
                CHECK(orbit_min(mini, p, delta) == mini);
            }
        }
    }
}

TEST_CASE("ascii rendering") {
    MarkedAbacus m = marked_abacus(Partition::of({2, 1}), 5, 1, 7);
    CHECK(render_ascii(m) == "v . . . .\nooooo\n.o.o.\n");
    CHECK(render_ascii(abacus_of(Partition(), 5, 5)) == "ooooo\n");

    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        Partition lam = testoracles::random_partition(rng, 9);
        for (int p : {2, 5}) {
            int b = lam.degree() + static_cast<int>(rng() % 3);
            Abacus a = abacus_of(lam, p, b);
            CHECK(testoracles::parse_ascii_abacus(render_ascii(a), p) == a);
            int delta = 1 + static_cast<int>(rng() % (p - 1));
            MarkedAbacus ma = marked_abacus(lam, p, delta, b);
            CHECK(testoracles::parse_ascii_marked(render_ascii(ma), p, delta) == ma);
        }
    }
}
