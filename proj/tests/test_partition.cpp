#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "orbitcalc/partition.hpp"

using namespace orbitcalc;

namespace {

// Independent partition counter: p(n) via the pentagonal-number
// recurrence, kept free of the enumeration code it checks.
long long pentagonal_count(int n) {
    static std::map<int, long long> memo;
    if (n == 0) return 1;
    if (n < 0) return 0;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    long long sum = 0;
    for (int k = 1;; ++k) {
        const int g1 = k * (3 * k - 1) / 2;
        const int g2 = k * (3 * k + 1) / 2;
        if (g1 > n && g2 > n) break;
        const long long sign = (k % 2 == 0) ? -1 : 1;
        sum += sign * (pentagonal_count(n - g1) + pentagonal_count(n - g2));
    }
    memo[n] = sum;
    return sum;
}

}  // namespace

TEST_CASE("construction enforces shape") {
    CHECK(Partition{}.n() == 0);
    CHECK(Partition{7, 3, 1}.n() == 11);
    CHECK(Partition{7, 3, 1}.length() == 3);
    CHECK_THROWS_AS(Partition{3, 7}, InvalidPartition);
    CHECK_THROWS_AS(Partition{3, 0}, InvalidPartition);
    CHECK_THROWS_AS(Partition{-1}, InvalidPartition);
    CHECK(Partition::from_unsorted({0, 3, 1, 3}) == Partition{3, 3, 1});
}

TEST_CASE("transpose basics") {
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{5}) == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("transpose is an involution (exhaustive n <= 12)") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            CHECK(transpose(transpose(lambda)) == lambda);
}

TEST_CASE("dominance examples") {
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{3}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), UnequalWeight);
}

TEST_CASE("dominance is a partial order (exhaustive n <= 12)") {
    for (int n = 1; n <= 12; ++n) {
        const auto all = enumerate_partitions(n);
        const size_t count = all.size();
        std::vector<std::vector<char>> leq(count, std::vector<char>(count));
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j)
                leq[i][j] = dominance_leq(all[i], all[j]) ? 1 : 0;
        for (size_t i = 0; i < count; ++i) {
            CHECK(leq[i][i]);
            // bounds: all-ones <= lambda <= (n)
            CHECK(leq[count - 1][i]);
            CHECK(leq[i][0]);
        }
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j) {
                if (i != j) CHECK_FALSE(leq[i][j] && leq[j][i]);
                if (!leq[i][j]) continue;
                for (size_t k = 0; k < count; ++k)
                    if (leq[j][k]) CHECK(leq[i][k]);
            }
    }
}

TEST_CASE("transposition reverses dominance (exhaustive n <= 12)") {
    for (int n = 1; n <= 12; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(dominance_leq(a, b) == dominance_leq(transpose(b), transpose(a)));
    }
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(Partition{5, 5, 1}, 5) == 2);
    CHECK(multiplicity(Partition{5, 5, 1}, 2) == 0);
    CHECK(multiplicity(Partition{7, 2, 2}, 2) == 2);
}

TEST_CASE("insert_part basics") {
    CHECK(insert_part(Partition{5, 1}, 3) == Partition{5, 3, 1});
    CHECK(insert_part(Partition{}, 4) == Partition{4});
    CHECK(insert_part(Partition{3, 3}, 3) == Partition{3, 3, 3});
}

TEST_CASE("insert_part is order-independent") {
    const std::vector<int> values{4, 1, 4, 2, 7};
    Partition forward, backward;
    for (int v : values) forward = insert_part(forward, v);
    for (auto it = values.rbegin(); it != values.rend(); ++it)
        backward = insert_part(backward, *it);
    CHECK(forward == backward);
    CHECK(forward == Partition{7, 4, 4, 2, 1});
}

TEST_CASE("transpose of insertion adds 1 to the first k columns (n <= 10)") {
    for (int n = 0; n <= 10; ++n)
        for (int k = 1; k <= 10; ++k)
            for (const auto& mu : enumerate_partitions(n)) {
                std::vector<int> cols = transpose(mu).parts();
                cols.resize(std::max<size_t>(cols.size(), k), 0);
                for (int i = 0; i < k; ++i) ++cols[i];
                CHECK(transpose(insert_part(mu, k)) == Partition::from_unsorted(cols));
            }
}

TEST_CASE("prefix sums pad with zeros") {
    const Partition lambda{7, 3, 1};
    CHECK(prefix_sum(lambda, 2) == 10);
    CHECK(prefix_sum(lambda, 0) == 0);
    CHECK(prefix_sum(lambda, 5) == 11);
}

TEST_CASE("enumeration order and counts") {
    const auto four = enumerate_partitions(4);
    const std::vector<Partition> expected{
        {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(four == expected);
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(20).size() == 627);
    for (int n = 0; n <= 20; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(n).size()) ==
              pentagonal_count(n));
    // order is strictly decreasing lex
    for (size_t i = 1; i < four.size(); ++i) CHECK(four[i - 1] > four[i]);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_partitions(41), CapExceeded);
    CHECK_THROWS_AS(enumerate_partitions(11, 10), CapExceeded);
    CHECK_NOTHROW(enumerate_partitions(11, 11));
}

TEST_CASE("serialization") {
    CHECK(to_string(Partition{7, 3, 1}) == "7,3,1");
    CHECK(to_string(Partition{}) == "-");
    CHECK(parse_partition("7,3,1") == Partition{7, 3, 1});
    CHECK(parse_partition("-") == Partition{});
    for (int n = 0; n <= 9; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            CHECK(parse_partition(to_string(lambda)) == lambda);
    CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
    CHECK_THROWS_AS(parse_partition("1,3"), ParseError);
    CHECK_THROWS_AS(parse_partition("a"), ParseError);
    CHECK_THROWS_AS(parse_partition("3,0"), ParseError);
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    CHECK_THROWS_AS(parse_partition("3,"), ParseError);
}
