#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "orbitcalc/group.hpp"

using namespace orbitcalc;

namespace {

GroupKind gl(int d) { return {GroupFamily::GL, d}; }
GroupKind orth(int d) { return {GroupFamily::O, d}; }
GroupKind so(int d) { return {GroupFamily::SO, d}; }
GroupKind sp(int d) { return {GroupFamily::Sp, d}; }

// Straight re-statement of the parity rules, used as a second route.
bool parity_filter(GroupFamily family, const Partition& lambda) {
    if (family == GroupFamily::GL) return true;
    const int bad_parity = family == GroupFamily::Sp ? 1 : 0;
    for (int p : std::set<int>(lambda.parts().begin(), lambda.parts().end()))
        if (p % 2 == bad_parity && multiplicity(lambda, p) % 2 != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("group construction") {
    CHECK_THROWS_AS(sp(9), InvalidGroup);
    CHECK_THROWS_AS(orth(0), InvalidGroup);
    CHECK_NOTHROW(gl(0));
    CHECK(to_string(sp(10)) == "Sp10");
    CHECK(parse_group_family("sl") == GroupFamily::GL);
    CHECK(parse_group_family("SP") == GroupFamily::Sp);
    CHECK_THROWS_AS(parse_group_family("E8"), ParseError);
}

TEST_CASE("partition validity per group") {
    CHECK(is_valid_partition(orth(11), Partition{7, 3, 1}));
    CHECK(is_valid_partition(sp(10), Partition{6, 4}));
    CHECK(is_valid_partition(sp(10), Partition{5, 5}));
    CHECK_FALSE(is_valid_partition(orth(8), Partition{5, 2, 1}));
    CHECK_FALSE(is_valid_partition(sp(10), Partition{7, 3}));
    CHECK(is_valid_partition(gl(5), Partition{3, 2}));
    CHECK_THROWS_AS(is_valid_partition(orth(8), Partition{7, 3, 1}), UnequalWeight);
}

TEST_CASE("validity counts match an independent parity filter") {
    int valid_o = 0, valid_sp = 0;
    for (const auto& lambda : enumerate_partitions(8)) {
        if (parity_filter(GroupFamily::O, lambda)) ++valid_o;
        if (parity_filter(GroupFamily::Sp, lambda)) ++valid_sp;
        CHECK(is_valid_partition(orth(8), lambda) ==
              parity_filter(GroupFamily::O, lambda));
        CHECK(is_valid_partition(sp(8), lambda) ==
              parity_filter(GroupFamily::Sp, lambda));
    }
    CHECK(valid_o == 10);
    CHECK(valid_sp == 14);
}

TEST_CASE("very even partitions") {
    CHECK(is_very_even(Partition{4, 4}));
    CHECK_FALSE(is_very_even(Partition{5, 3}));
    for (int n = 1; n <= 20; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            if (is_very_even(lambda) && parity_filter(GroupFamily::O, lambda))
                CHECK(n % 4 == 0);
}

TEST_CASE("orbit construction and labels") {
    CHECK_NOTHROW(Orbit(orth(11), Partition{7, 3, 1}));
    CHECK_THROWS_AS(Orbit(orth(8), Partition{5, 2, 1}), InvalidPartition);
    CHECK_THROWS_AS(Orbit(so(4), Partition{2, 2}), InvalidPartition);  // label missing
    CHECK_NOTHROW(Orbit(so(4), Partition{2, 2}, VeryEvenLabel::I));
    CHECK_THROWS_AS(Orbit(orth(4), Partition{2, 2}, VeryEvenLabel::I), InvalidPartition);
    CHECK_THROWS_AS(Orbit(so(4), Partition{3, 1}, VeryEvenLabel::II), InvalidPartition);
    CHECK(to_string(Orbit(orth(11), Partition{7, 3, 1})) == "O11:7,3,1");
    CHECK(to_string(Orbit(so(4), Partition{2, 2}, VeryEvenLabel::I)) == "SO4:2,2:I");
}

TEST_CASE("orbit enumeration") {
    const auto o4 = orbits_of(orth(4));
    REQUIRE(o4.size() == 3);
    CHECK(o4[0].partition() == Partition{3, 1});
    CHECK(o4[1].partition() == Partition{2, 2});
    CHECK(o4[2].partition() == Partition{1, 1, 1, 1});

    const auto so4 = orbits_of(so(4));
    REQUIRE(so4.size() == 4);
    CHECK(so4[1] == Orbit(so(4), Partition{2, 2}, VeryEvenLabel::I));
    CHECK(so4[2] == Orbit(so(4), Partition{2, 2}, VeryEvenLabel::II));

    const auto sp2 = orbits_of(sp(2));
    REQUIRE(sp2.size() == 2);
    CHECK(sp2[0].partition() == Partition{2});
    CHECK(sp2[1].partition() == Partition{1, 1});

    CHECK_THROWS_AS(orbits_of(gl(41)), CapExceeded);
}

TEST_CASE("closure order") {
    CHECK(closure_leq(Orbit(orth(8), Partition{4, 4}), Orbit(orth(8), Partition{5, 3})));
    CHECK_FALSE(closure_leq(Orbit(orth(8), Partition{5, 3}), Orbit(orth(8), Partition{4, 4})));
    const Orbit one(so(4), Partition{2, 2}, VeryEvenLabel::I);
    const Orbit two(so(4), Partition{2, 2}, VeryEvenLabel::II);
    CHECK_FALSE(closure_leq(one, two));
    CHECK_FALSE(closure_leq(two, one));
    CHECK(closure_leq(one, one));
    CHECK_THROWS_AS(closure_leq(one, Orbit(orth(4), Partition{2, 2})), GroupMismatch);

    // label vs no label falls back to the O(d) partition order
    CHECK(closure_leq(Orbit(so(4), Partition{1, 1, 1, 1}), one));
    CHECK(closure_leq(one, Orbit(so(4), Partition{3, 1})));

    // distinct very-even partitions: deliberately undefined
    const Orbit big(so(8), Partition{4, 4}, VeryEvenLabel::I);
    const Orbit small(so(8), Partition{2, 2, 2, 2}, VeryEvenLabel::II);
    CHECK_THROWS_AS(closure_leq(small, big), LabelOrderUndefined);
}

TEST_CASE("principal partition") {
    CHECK(principal_partition(orth(8)) == Partition{7, 1});
    CHECK(principal_partition(sp(10)) == Partition{10});
    CHECK(principal_partition(orth(11)) == Partition{11});
    CHECK(principal_partition(so(6)) == Partition{5, 1});
    CHECK(principal_partition(gl(7)) == Partition{7});
}

TEST_CASE("principal orbit is the unique maximum, all-ones the minimum (d <= 16)") {
    for (int d = 1; d <= 16; ++d) {
        std::vector<GroupKind> groups{gl(d)};
        groups.push_back(orth(d));
        groups.push_back(so(d));
        if (d % 2 == 0) groups.push_back(sp(d));
        for (const auto& group : groups) {
            const auto orbits = orbits_of(group);
            const Partition top = principal_partition(group);
            const Partition bottom(std::vector<int>(d, 1));
            for (const auto& orbit : orbits) {
                // compare partitions directly (the O(d) reduction for SO)
                CHECK(dominance_leq(orbit.partition(), top));
                CHECK(dominance_leq(bottom, orbit.partition()));
                if (orbit.partition() == top) CHECK_FALSE(orbit.label().has_value());
            }
        }
    }
}

TEST_CASE("rank and depth formulas") {
    const Orbit orbit(orth(11), Partition{7, 3, 1});
    CHECK(rank(orbit) == 8);
    CHECK(depth(orbit) == 7);
    const Orbit zero(gl(4), Partition{1, 1, 1, 1});
    CHECK(rank(zero) == 0);
    CHECK(depth(zero) == 1);
    const Orbit empty(gl(0), Partition{});
    CHECK(rank(empty) == 0);
    CHECK(depth(empty) == 0);
}

TEST_CASE("orbit sets canonicalize to antichains") {
    const GroupKind g = gl(6);
    const Orbit a(g, Partition{3, 2, 1});
    const Orbit b(g, Partition{2, 2, 2});
    const Orbit c(g, Partition{1, 1, 1, 1, 1, 1});
    const OrbitSet set(g, {c, a, b, a});
    REQUIRE(set.maximal().size() == 2);
    CHECK(set.maximal()[0] == a);
    CHECK(set.maximal()[1] == b);
    // canonicalization is idempotent
    CHECK(OrbitSet(g, set.maximal()) == set);
    CHECK_THROWS_AS(OrbitSet(g, {Orbit(gl(5), Partition{5})}), GroupMismatch);

    // both labels survive as incomparable maxima
    const OrbitSet so_set(so(4), {Orbit(so(4), Partition{2, 2}, VeryEvenLabel::I),
                                  Orbit(so(4), Partition{2, 2}, VeryEvenLabel::II)});
    CHECK(so_set.maximal().size() == 2);
}
