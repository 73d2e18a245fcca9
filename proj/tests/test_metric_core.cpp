#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzhyper/budget.hpp"
#include "fuzzhyper/system.hpp"
#include "test_util.hpp"

using namespace fuzzhyper;

namespace {

SpacePtr two_point(const Rational& d) {
    return std::make_shared<FiniteMetricSpace>(
        std::vector<std::string>{"a", "b"},
        std::vector<std::vector<Rational>>{{Rational(0), d}, {d, Rational(0)}});
}

}  // namespace

TEST_CASE("construction rejects non-metrics") {
    using Rows = std::vector<std::vector<Rational>>;
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, Rows{{Rational(1), Rational(1)},
                                                       {Rational(1), Rational(0)}}),
                    DomainError);  // nonzero diagonal
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, Rows{{Rational(0), Rational(1)},
                                                       {Rational(2), Rational(0)}}),
                    DomainError);  // asymmetric
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, Rows{{Rational(0), Rational(0)},
                                                       {Rational(0), Rational(0)}}),
                    DomainError);  // pseudometric
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b", "c"},
                                      Rows{{Rational(0), Rational(1), Rational(5)},
                                           {Rational(1), Rational(0), Rational(1)},
                                           {Rational(5), Rational(1), Rational(0)}}),
                    DomainError);  // triangle 5 > 1 + 1
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "a"}, Rows{{Rational(0), Rational(1)},
                                                       {Rational(1), Rational(0)}}),
                    DomainError);  // duplicate label
}

TEST_CASE("hausdorff basics on the two-point space") {
    auto space = two_point(Rational(1));
    CHECK(hausdorff(*space, 0b01, 0b01) == Rational(0));
    CHECK(hausdorff(*space, 0b01, 0b11) == Rational(1));
    CHECK_THROWS_AS(hausdorff(*space, 0, 0b01), DomainError);
}

TEST_CASE("union bound: joining pairs never increases the distance") {
    auto space = two_point(Rational(1));
    // d_H({a} u {b}, {a} u {a}) <= max(d_H({a},{a}), d_H({b},{a})) = 1, with equality here.
    Rational joined = hausdorff(*space, 0b01 | 0b10, 0b01 | 0b01);
    Rational bound = rat_max(hausdorff(*space, 0b01, 0b01), hausdorff(*space, 0b10, 0b01));
    CHECK(joined == Rational(1));
    CHECK(joined <= bound);
}

TEST_CASE("union bound holds for all quadruples on a 4-point space") {
    testutil::Rng rng(7);
    auto space = testutil::random_space(rng, 4);
    const Mask full = space->full_mask();
    for (Mask a = 1; a <= full; ++a)
        for (Mask b = 1; b <= full; ++b)
            for (Mask c = 1; c <= full; ++c)
                for (Mask d = 1; d <= full; ++d) {
                    Rational lhs = hausdorff(*space, a | b, c | d);
                    Rational rhs = rat_max(hausdorff(*space, a, c), hausdorff(*space, b, d));
                    CHECK(lhs <= rhs);
                }
}

TEST_CASE("fattening") {
    auto space = two_point(Rational(1));
    CHECK(fatten(*space, 0b01, Rational(0)) == 0b01);
    CHECK(fatten(*space, 0b01, Rational(1)) == 0b11);
    CHECK(fatten(*space, 0b01, Rational(1, 2)) == 0b01);
    CHECK_THROWS_AS(fatten(*space, 0b01, Rational(-1)), DomainError);
    CHECK_THROWS_AS(fatten(*space, 0, Rational(1)), DomainError);
}

TEST_CASE("hausdorff <= eps iff mutual eps-fattening inclusion") {
    testutil::Rng rng(11);
    for (int round = 0; round < 20; ++round) {
        auto space = testutil::random_space(rng, 4);
        Mask a = testutil::random_nonempty_mask(rng, 4);
        Mask b = testutil::random_nonempty_mask(rng, 4);
        for (const Rational& eps : space->distance_values()) {
            bool by_distance = hausdorff(*space, a, b) <= eps;
            bool by_fattening = (a & ~fatten(*space, b, eps)) == 0 &&
                                (b & ~fatten(*space, a, eps)) == 0;
            CHECK(by_distance == by_fattening);
        }
    }
}

TEST_CASE("hausdorff is a metric on all subsets of spaces up to 5 points") {
    testutil::Rng rng(13);
    for (int n = 2; n <= 5; ++n) {
        auto space = testutil::random_space(rng, n);
        const Mask full = space->full_mask();
        std::vector<std::vector<Rational>> d(full + 1, std::vector<Rational>(full + 1));
        for (Mask a = 1; a <= full; ++a)
            for (Mask b = a; b <= full; ++b) {
                d[a][b] = hausdorff(*space, a, b);
                d[b][a] = d[a][b];
                if (a == b)
                    CHECK(d[a][b] == Rational(0));
                else
                    CHECK(d[a][b].sign() > 0);
            }
        for (Mask a = 1; a <= full; ++a)
            for (Mask b = 1; b <= full; ++b)
                for (Mask c = 1; c <= full; ++c) CHECK(d[a][c] <= d[a][b] + d[b][c]);
    }
}

TEST_CASE("product space: coordinatewise maximum") {
    auto space = two_point(Rational(1));
    auto p1 = product_space(space, 1);
    CHECK(p1->size() == 2);
    CHECK(p1->dist(0, 1) == space->dist(0, 1));

    auto p2 = product_space(space, 2);
    CHECK(p2->size() == 4);
    int aa = p2->index_of("(a,a)"), ba = p2->index_of("(b,a)"), ab = p2->index_of("(a,b)");
    CHECK(p2->dist(aa, ba) == Rational(1));  // max(1, 0)
    CHECK(p2->dist(ab, ba) == Rational(1));  // max(1, 1)
    CHECK_THROWS_AS(product_space(space, 0), DomainError);
}

TEST_CASE("product system iterates coordinatewise") {
    auto space = two_point(Rational(1));
    System swap(space, {1, 0});
    System prod = product_system(swap, 2);
    int ab = prod.space->index_of("(a,b)");
    int ba = prod.space->index_of("(b,a)");
    CHECK(prod.apply(ab) == ba);
    CHECK(prod.iterate(ab, 2) == ab);
}

TEST_CASE("subset helpers and labels") {
    auto space = two_point(Rational(3));
    CHECK(space->set_label(0b11) == "{a,b}");
    CHECK(space->full_mask() == 0b11);
    CHECK(space->diameter() == Rational(3));
    CHECK(space->distance_values() == std::vector<Rational>{Rational(3)});
    CHECK(space->index_of("b") == 1);
    CHECK_THROWS_AS(space->index_of("zz"), DomainError);
}
