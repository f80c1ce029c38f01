#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "nestrec/classifier.hpp"
#include "nestrec/errors.hpp"
#include "oracles.hpp"

using namespace nestrec;

namespace {

Relation random_relation(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<std::int64_t> mult(-3, 3);
    return {static_cast<RelationKind>(kind(rng)), mult(rng)};
}

bool in_S(std::int64_t j, std::int64_t x) { return x >= 0 && x < 2 * j; }

}  // namespace

TEST_CASE("apply_relation") {
    CHECK(apply_relation(2, {0, 2, 4, 6}, {RelationKind::B, -2}) == RecursionSpec{0, 2, 0, -2});
    CHECK(apply_relation(1, {0, 1, 1, 1}, {RelationKind::A, 0}) == RecursionSpec{0, 1, 1, 1});
    CHECK(apply_relation(2, {4, 2, 0, 2}, {RelationKind::C, 1}) == RecursionSpec{0, 2, 4, 2});
    CHECK(apply_relation(3, {0, 0, 0, 0}, {RelationKind::A, 2}) == RecursionSpec{6, 12, 0, 0});
    CHECK_THROWS_AS(apply_relation(1, {INT64_MAX, 0, 0, 0}, {RelationKind::A, 1}), OverflowError);

    std::mt19937_64 rng(31);
    for (std::int64_t j = 1; j <= 5; ++j)
        for (int t = 0; t < 300; ++t) {
            const auto s = oracle::random_spec(rng, j);
            const auto r = random_relation(rng);
            REQUIRE(apply_relation(j, apply_relation(j, s, r), r.inverse()) == s);
        }
}

TEST_CASE("relations preserve h and the conditions") {
    std::mt19937_64 rng(37);
    for (std::int64_t j = 1; j <= 5; ++j)
        for (int t = 0; t < 400; ++t) {
            const auto s = oracle::random_spec(rng, j);
            const auto r = random_relation(rng);
            const auto moved = apply_relation(j, s, r);
            for (std::int64_t n = 0; n < 4 * j; ++n) REQUIRE(h_value(j, moved, n) == h_value(j, s, n));
            REQUIRE(conditions_hold(j, moved) == conditions_hold(j, s));
        }
}

TEST_CASE("normalize") {
    for (std::int64_t j = 1; j <= 8; ++j)
        CHECK(normalize(j, {0, j, 2 * j, 3 * j}).spec == RecursionSpec{0, j, j, j});
    CHECK(normalize(2, {0, 2, 2, 2}).spec == RecursionSpec{0, 2, 2, 2});

    // a2 = 11 = 2*5 + 1: B(-5) -> <5,7:4,1>; s2 = 4 = 2*2 + 0: C(-2) -> <9,7:0,1>;
    // a1 = 7 = 2*3 + 1: A(-3) -> <6,1:0,1>.
    const auto c = normalize(1, {5, 7, 9, 11});
    CHECK(c.spec == RecursionSpec{6, 1, 0, 1});
    CHECK(c.trace == std::vector<Relation>{{RelationKind::B, -5}, {RelationKind::C, -2}, {RelationKind::A, -3}});

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> wide(-1000, 1000);
    for (std::int64_t j = 1; j <= 8; ++j)
        for (int t = 0; t < 300; ++t) {
            const RecursionSpec s{wide(rng), wide(rng), wide(rng), wide(rng)};
            const auto n = normalize(j, s);
            REQUIRE(in_S(j, n.spec.a1));
            REQUIRE(in_S(j, n.spec.s2));
            REQUIRE(in_S(j, n.spec.a2));
            REQUIRE(replay(j, s, n.trace) == n.spec);
            REQUIRE(normalize(j, n.spec).spec == n.spec);
            // Representative is shared by the whole class.
            const auto moved = apply_relation(j, s, random_relation(rng));
            REQUIRE(normalize(j, moved).spec == n.spec);
        }
}

TEST_CASE("conditions_hold") {
    const auto a = conditions_hold(3, {0, 3, 6, 9});
    CHECK(a.holds());
    CHECK(conditions_hold(3, {3, 9, 3, 3}).holds());
    const auto b = conditions_hold(2, {1, 2, 4, 6});
    CHECK_FALSE(b.holds());
    // 2(1+4) = 10 != 2+6, so (iii) fails as well as (i).
    CHECK(b == ConditionCheck{false, true, false});
    // Negative lags use the nonnegative residue.
    CHECK(conditions_hold(2, {0, -2, 0, 2}).lags_odd_multiple);
    CHECK_FALSE(conditions_hold(2, {0, -4, 0, 2}).lags_odd_multiple);
}

TEST_CASE("classify") {
    const auto a = classify(2, {0, 2, 4, 6});
    CHECK(a.conditions.holds());
    CHECK(a.satisfaction.satisfied);
    CHECK(a.canonical.spec == RecursionSpec{0, 2, 2, 2});

    const auto b = classify(1, {0, 1, 2, 3});
    CHECK(b.conditions.holds());
    CHECK(b.satisfaction.satisfied);

    const auto c = classify(2, {0, 2, 4, 8});
    CHECK_FALSE(c.conditions.balanced);
    CHECK_FALSE(c.conditions.holds());
    CHECK_FALSE(c.satisfaction.satisfied);
    bool oracle_nonzero = false;
    for (std::int64_t n = 0; n < 8; ++n) oracle_nonzero = oracle_nonzero || oracle::h(2, {0, 2, 4, 8}, n) != 0;
    CHECK(oracle_nonzero);
}

TEST_CASE("equivalent") {
    CHECK(equivalent(2, {0, 2, 4, 6}, {0, 2, 2, 2}));
    for (std::int64_t j = 1; j <= 4; ++j) CHECK(equivalent(j, {3, -1, 7, 2}, {3, -1, 7, 2}));
    // Normal forms <0,1:1,1> and <1,1:0,1> differ only in summand order.
    CHECK_FALSE(equivalent(1, {0, 1, 1, 1}, {1, 1, 0, 1}));
    CHECK(equivalent(1, {0, 1, 1, 1}, {1, 1, 0, 1}, true));
    CHECK(swap_normalized({1, 1, 0, 1}) == RecursionSpec{0, 1, 1, 1});
}

TEST_CASE("sweep") {
    SUBCASE("j=1 box") {
        ParameterBox box{{-4, 4}, {0, 5}, {-4, 4}, {0, 5}};
        const auto res = sweep(1, box);
        CHECK(res.total == 2916);
        CHECK(res.rows.size() == 2916);
        // Count from an independent enumeration of the same box.
        CHECK(res.satisfying.size() == 54);
        std::set<RecursionSpec> expected;
        for (std::int64_t i = 0; i < box.total(); ++i)
            if (oracle::conditions(1, box.spec_at(i))) expected.insert(box.spec_at(i));
        CHECK(std::set<RecursionSpec>(res.satisfying.begin(), res.satisfying.end()) == expected);
    }
    SUBCASE("j=2 box") {
        const auto res = sweep(2, {{-8, 8}, {0, 11}, {-8, 8}, {0, 11}}, Execution::Parallel, false);
        CHECK(res.total == 41616);
        CHECK(res.satisfying.size() == 54);
        CHECK(res.rows.empty());
    }
    SUBCASE("empty box") {
        const auto res = sweep(1, {{0, -1}, {0, 5}, {0, 3}, {0, 5}});
        CHECK(res.total == 0);
        CHECK(res.rows.empty());
        CHECK(res.satisfying.empty());
    }
    SUBCASE("box order") {
        const ParameterBox box{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
        const auto res = sweep(1, box, Execution::Serial);
        CHECK(res.rows.front().spec == RecursionSpec{0, 2, 4, 6});
        CHECK(res.rows[1].spec == RecursionSpec{0, 2, 4, 7});
        CHECK(res.rows.back().spec == RecursionSpec{1, 3, 5, 7});
    }
    SUBCASE("serial and parallel agree") {
        for (std::int64_t j = 1; j <= 3; ++j) {
            const auto box = ParameterBox::standard(j);
            const auto a = sweep(j, box, Execution::Serial, false);
            const auto b = sweep(j, box, Execution::Parallel, false);
            CHECK(a.satisfying == b.satisfying);
        }
    }
}

TEST_CASE("satisfying classes collapse to <0,j:j,j> up to summand order") {
    for (std::int64_t j = 1; j <= 4; ++j) {
        const auto res = sweep(j, ParameterBox::standard(j), Execution::Parallel, false);
        std::set<RecursionSpec> reps;
        for (const auto& s : res.satisfying) reps.insert(normalize(j, s).spec);
        CHECK(reps == std::set<RecursionSpec>{{0, j, j, j}, {j, j, 0, j}});
    }
}

TEST_CASE("h profile is a function of the canonical form") {
    const std::int64_t j = 2;
    const ParameterBox box{{-4, 4}, {0, 7}, {-4, 4}, {0, 7}};
    std::map<RecursionSpec, std::vector<std::int64_t>> seen;
    for (std::int64_t i = 0; i < box.total(); ++i) {
        const auto s = box.spec_at(i);
        std::vector<std::int64_t> profile;
        for (std::int64_t n = 0; n < 4 * j; ++n) profile.push_back(h_value(j, s, n));
        auto [it, fresh] = seen.emplace(normalize(j, s).spec, profile);
        if (!fresh) REQUIRE(it->second == profile);
    }
}

TEST_CASE("j=1: satisfied exactly by odd lags with 2(s1+s2) = a1+a2") {
    const auto res = sweep(1, ParameterBox::standard(1), Execution::Serial, false);
    for (const auto& s : res.satisfying) {
        REQUIRE(s.a1 % 2 != 0);
        REQUIRE(s.a2 % 2 != 0);
        REQUIRE(2 * (s.s1 + s.s2) == s.a1 + s.a2);
    }
    std::size_t expected = 0;
    const auto box = ParameterBox::standard(1);
    for (std::int64_t i = 0; i < box.total(); ++i) {
        const auto s = box.spec_at(i);
        if (s.a1 % 2 != 0 && s.a2 % 2 != 0 && 2 * (s.s1 + s.s2) == s.a1 + s.a2) ++expected;
    }
    CHECK(res.satisfying.size() == expected);
}

TEST_CASE("parse_range") {
    CHECK(parse_range("-4:4") == Range{-4, 4});
    CHECK(parse_range("3:2").empty());
    CHECK_THROWS_AS(parse_range("4"), ParseError);
    CHECK_THROWS_AS(parse_range("a:3"), ParseError);
    CHECK_THROWS_AS(parse_range("1:3x"), ParseError);
}
