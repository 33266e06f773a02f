#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitcalc/derivative.hpp"
#include "orbitcalc/oracle.hpp"

using namespace orbitcalc;

TEST_CASE("rank of small matrices") {
    IntMatrix zero(3);
    CHECK(rank_exact(zero) == 0);

    IntMatrix e12(3);
    e12.at(0, 1) = 1;
    CHECK(rank_exact(e12) == 1);

    IntMatrix full(2);
    full.at(0, 0) = 1;
    full.at(0, 1) = 2;
    full.at(1, 0) = 3;
    full.at(1, 1) = 4;
    CHECK(rank_exact(full) == 2);

    IntMatrix dependent(2);
    dependent.at(0, 0) = 2;
    dependent.at(0, 1) = 4;
    dependent.at(1, 0) = 1;
    dependent.at(1, 1) = 2;
    CHECK(rank_exact(dependent) == 1);

    // classic 3x3 magic square has rank 3
    IntMatrix magic(3);
    const int entries[3][3] = {{2, 7, 6}, {9, 5, 1}, {4, 3, 8}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) magic.at(i, j) = entries[i][j];
    CHECK(rank_exact(magic) == 3);
}

TEST_CASE("rank survives large intermediate values") {
    // Entries around 10^6 force multi-word arithmetic inside Bareiss.
    IntMatrix m(4);
    const long long entries[4][4] = {{1000003, 999999, 123456, 7},
                                     {2, 1000033, 999983, 31},
                                     {17, 29, 1000037, 999979},
                                     {1000039, 3, 5, 1000081}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = entries[i][j];
    CHECK(rank_exact(m) == 4);

    // duplicate a row: rank drops
    for (int j = 0; j < 4; ++j) m.at(3, j) = m.at(0, j);
    CHECK(rank_exact(m) == 3);
}

TEST_CASE("jordan type of canonical matrices") {
    IntMatrix zero(4);
    CHECK(jordan_type(zero) == Partition{1, 1, 1, 1});

    const WhittakerSupport principal(5, {1, 2, 3, 4});
    CHECK(jordan_type(matrix_of_support(principal)) == Partition{5});

    IntMatrix e12(3);
    e12.at(0, 1) = 1;
    CHECK(jordan_type(e12) == Partition{2, 1});
}

TEST_CASE("non-nilpotent input is rejected") {
    IntMatrix id(2);
    id.at(0, 0) = 1;
    id.at(1, 1) = 1;
    CHECK_THROWS_AS(jordan_type(id), NotNilpotent);
    CHECK_THROWS_AS(nilpotence_order(id), NotNilpotent);

    // nilpotent but not upper triangular is fine
    IntMatrix skew(2);
    skew.at(0, 0) = 2;
    skew.at(0, 1) = -4;
    skew.at(1, 0) = 1;
    skew.at(1, 1) = -2;
    CHECK(nilpotence_order(skew) == 2);
    CHECK(jordan_type(skew) == Partition{2});
}

TEST_CASE("matrix of support shape") {
    const auto m = matrix_of_support(WhittakerSupport(3, {1}));
    CHECK(m.size() == 3);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.is_strictly_upper_triangular());
    CHECK(matrix_of_support(WhittakerSupport(4, {})).is_zero());
}

TEST_CASE("whittaker matrices realize their partition (n <= 9)") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            CHECK(jordan_type(matrix_of_support(whittaker_support(lambda))) == lambda);
}

TEST_CASE("jordan type depends only on the gap multiset (n <= 8)") {
    for (int n = 1; n <= 8; ++n) {
        // all 2^(n-1) supports, keyed by their sorted block sizes
        for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
            std::vector<int> support, blocks;
            int run = 1;
            for (int j = 1; j <= n - 1; ++j) {
                if (bits & (1u << (j - 1))) {
                    support.push_back(j);
                    ++run;
                } else {
                    blocks.push_back(run);
                    run = 1;
                }
            }
            blocks.push_back(run);
            const auto type = jordan_type(matrix_of_support(WhittakerSupport(n, support)));
            CHECK(type == Partition::from_unsorted(blocks));
        }
    }
}

TEST_CASE("rank and nilpotence order match the partition formulas (n <= 9)") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto m = matrix_of_support(whittaker_support(lambda));
            CHECK(rank_exact(m) == n - lambda.length());
            CHECK(nilpotence_order(m) == lambda.part(1));
        }
    const auto m = matrix_of_support(whittaker_support(Partition{7, 3, 1}));
    CHECK(rank_exact(m) == 8);
}
