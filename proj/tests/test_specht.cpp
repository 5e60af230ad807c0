#include "doctest.h"

#include <numeric>
#include <random>
#include <stdexcept>

#include "partblocks/specht.hpp"

using namespace partblocks;

namespace {

long long hook_length_dim(const Partition& shape) {
    int m = shape.degree();
    long long numer = 1;
    for (int i = 1; i <= m; ++i) numer *= i;
    long long denom = 1;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) {
            int arm = shape.part(r) - c;
            int leg = 0;
            for (int rr = r + 1; rr <= shape.length(); ++rr)
                if (shape.part(rr) >= c) ++leg;
            denom *= arm + leg + 1;
        }
    return numer / denom;
}

std::vector<int> random_perm(std::mt19937& rng, int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace

TEST_CASE("one-dimensional modules") {
    for (int m = 2; m <= 5; ++m) {
        SpechtModule triv(Partition::of({m}));
        CHECK(triv.dim() == 1);
        for (int i = 1; i < m; ++i) CHECK(triv.gen_matrix_int(i)[0][0] == 1);

        SpechtModule sign(Partition::of(std::vector<int>(m, 1)));
        CHECK(sign.dim() == 1);
        for (int i = 1; i < m; ++i) CHECK(sign.gen_matrix_int(i)[0][0] == -1);
    }
    SpechtModule empty{Partition()};
    CHECK(empty.dim() == 1);
    SpechtModule one{Partition::of({1})};
    CHECK(one.dim() == 1);
    CHECK(one.gram_int()[0][0] == 1);
    CHECK_THROWS_AS(SpechtModule(Partition::of({6})), std::invalid_argument);
}

TEST_CASE("dimensions match the hook length formula") {
    for (int m = 0; m <= 5; ++m)
        for (const Partition& shape : partitions_of(m)) {
            SpechtModule sp(shape);
            CHECK(sp.dim() == hook_length_dim(shape));
        }
}

TEST_CASE("standard module (2,1)") {
    SpechtModule sp(Partition::of({2, 1}));
    REQUIRE(sp.dim() == 2);
    Field Q = Field::rationals();
    Matrix s1 = sp.gen_matrix(1, Q);
    Matrix s2 = sp.gen_matrix(2, Q);
    CHECK(s1 * s1 == Matrix::identity(Q, 2));
    CHECK(s2 * s2 == Matrix::identity(Q, 2));
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
    CHECK_FALSE(s1 == s2);
}

TEST_CASE("Coxeter relations hold for every shape up to degree 5") {
    Field F5 = Field::prime(5);
    for (int m = 2; m <= 5; ++m)
        for (const Partition& shape : partitions_of(m)) {
            SpechtModule sp(shape);
            std::vector<Matrix> gens;
            for (int i = 1; i < m; ++i) gens.push_back(sp.gen_matrix(i, F5));
            Matrix id = Matrix::identity(F5, sp.dim());
            for (int i = 0; i < m - 1; ++i) {
                CHECK(gens[i] * gens[i] == id);
                for (int j = i + 1; j < m - 1; ++j) {
                    if (j == i + 1)
                        CHECK(gens[i] * gens[j] * gens[i] == gens[j] * gens[i] * gens[j]);
                    else
                        CHECK(gens[i] * gens[j] == gens[j] * gens[i]);
                }
            }
        }
}

TEST_CASE("permutation matrices form a homomorphism") {
    std::mt19937 rng(61);
    Field Q = Field::rationals();
    for (const Partition& shape : {Partition::of({2, 1}), Partition::of({3, 1}),
                                   Partition::of({2, 2}), Partition::of({2, 1, 1})}) {
        SpechtModule sp(shape);
        int m = sp.m();
        // Adjacent transpositions reproduce the generator matrices.
        for (int i = 1; i < m; ++i) {
            std::vector<int> adj(m);
            std::iota(adj.begin(), adj.end(), 0);
            std::swap(adj[i - 1], adj[i]);
            CHECK(sp.perm_matrix(adj, Q) == sp.gen_matrix(i, Q));
        }
        for (int trial = 0; trial < 25; ++trial) {
            auto a = random_perm(rng, m);
            auto b = random_perm(rng, m);
            std::vector<int> ab(m);
            for (int i = 0; i < m; ++i) ab[i] = a[b[i]]; // apply b, then a
            CHECK(sp.perm_matrix(ab, Q) == sp.perm_matrix(a, Q) * sp.perm_matrix(b, Q));
        }
    }
}

TEST_CASE("the bilinear form is invariant and nondegenerate over Q") {
    Field Q = Field::rationals();
    for (int m = 2; m <= 5; ++m)
        for (const Partition& shape : partitions_of(m)) {
            SpechtModule sp(shape);
            Matrix g = sp.gram(Q);
            CHECK(g == g.transposed());
            CHECK(g.rank() == sp.dim()); // Specht modules are simple over Q
            for (int i = 1; i < m; ++i) {
                Matrix x = sp.gen_matrix(i, Q);
                CHECK(x.transposed() * g * x == g);
            }
        }
}

TEST_CASE("specht_rep surfaces generators over a chosen field") {
    MatrixRep rep = specht_rep(Partition::of({2, 1}), Field::prime(3));
    CHECK(rep.dim == 2);
    REQUIRE(rep.generators.size() == 2);
    CHECK(rep.generators[0].first == "s_1");
    CHECK(rep.generators[1].first == "s_2");
}
