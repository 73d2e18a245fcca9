#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzhyper/chains.hpp"
#include "fuzzhyper/instances.hpp"
#include "test_util.hpp"

using namespace fuzzhyper;
using testutil::Rng;

TEST_CASE("critical deltas and sweep representatives") {
    System identity = make_identity2();
    CHECK(critical_deltas(identity) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
    System constant = make_constant(3);
    auto criticals = critical_deltas(constant);
    CHECK(criticals.front() == Rational(0));
    auto sweep = sweep_deltas(identity);
    CHECK(sweep == std::vector<Rational>{Rational(1, 2), Rational(3, 2), Rational(2)});
    System singleton = make_constant(1);
    CHECK(critical_deltas(singleton) == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("graph edges follow the strict slack rule") {
    System swap = make_swap2();
    ChainGraph at_half = chain_graph(swap, Rational(1, 2));
    CHECK(at_half.succ[0] == std::vector<int>{1});  // a -> f(a) = b, slack 0
    CHECK(at_half.succ[1] == std::vector<int>{0});
    ChainGraph wide = chain_graph(swap, Rational(2));
    CHECK(wide.succ[0].size() == 2);
    CHECK_THROWS_AS(chain_graph(swap, Rational(0)), DomainError);
}

TEST_CASE("chain recurrence verdicts with witness cycles") {
    RecurrenceVerdict swap = chain_recurrent_at(make_swap2(), Rational(1, 2));
    CHECK(swap.recurrent);
    REQUIRE(swap.cycles[0].has_value());
    CHECK(swap.cycles[0]->points == std::vector<int>{0, 1, 0});

    RecurrenceVerdict collapsing = chain_recurrent_at(make_two_point(), Rational(1, 2));
    CHECK_FALSE(collapsing.recurrent);
    CHECK(collapsing.failing == std::vector<int>{1});  // b never returns: d(f(b), b) = 1

    RecurrenceVerdict wide = chain_recurrent_at(make_two_point(), Rational(3));
    CHECK(wide.recurrent);  // complete graph above the diameter
}

TEST_CASE("transitivity and mixing on the two-point systems") {
    CHECK(chain_transitive_at(make_swap2(), Rational(1, 2)).transitive);
    MixingVerdict swap_mix = chain_mixing_at(make_swap2(), Rational(1, 2));
    CHECK_FALSE(swap_mix.mixing);
    CHECK(swap_mix.period == 2);

    TransitivityVerdict identity = chain_transitive_at(make_identity2(), Rational(1, 2));
    CHECK_FALSE(identity.transitive);
    CHECK(identity.witness.has_value());

    // parity forbids odd-length returns at small delta
    CHECK_FALSE(find_chain(make_swap2(), 0, 0, Rational(1, 2), 3).has_value());
    auto even = find_chain(make_swap2(), 0, 0, Rational(1, 2), 2);
    REQUIRE(even.has_value());
    CHECK(even->points == std::vector<int>{0, 1, 0});
}

TEST_CASE("hyperspace of the swap map loses transitivity below delta 1") {
    HyperSystem hyper = hyper_extend(make_swap2());
    TransitivityVerdict below = chain_transitive_at(hyper.sys, Rational(1, 2));
    CHECK_FALSE(below.transitive);
    REQUIRE(below.witness.has_value());
    // the witness pair separates {a,b} from a singleton
    Mask from = hyper.sets[static_cast<size_t>(below.witness->first)];
    Mask to = hyper.sets[static_cast<size_t>(below.witness->second)];
    CHECK(((from == 0b11) != (to == 0b11)));
    TransitivityVerdict above = chain_transitive_at(hyper.sys, Rational(3, 2));
    CHECK(above.transitive);
}

TEST_CASE("find_chain on the 4-cycle") {
    System cycle = make_cycle(4);
    auto chain = find_chain(cycle, 0, 2, Rational(1, 2));
    REQUIRE(chain.has_value());
    CHECK(chain->points == std::vector<int>{0, 1, 2});
    CHECK(chain->length() == 2);
    for (const Rational& slack : chain->slacks) CHECK(slack == Rational(0));
    // self chain of length 1 exists iff the slack allows it
    CHECK(find_chain(make_identity2(), 0, 0, Rational(1, 2), 1).has_value());
    CHECK_FALSE(find_chain(make_identity2(), 0, 1, Rational(1, 2)).has_value());
}

TEST_CASE("mixing reduction agrees with the window oracle on random systems") {
    Rng rng(71);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int round = 0; round < 12; ++round) {
        auto space = testutil::random_space(rng, 4);
        std::vector<int> image(4);
        for (int& target : image) target = pick(rng);
        System sys(space, image);
        for (const Rational& delta : sweep_deltas(sys))
            CHECK(chain_mixing_at(sys, delta).mixing == chain_mixing_oracle(sys, delta));
    }
}

TEST_CASE("verdicts are monotone in delta") {
    Rng rng(73);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int round = 0; round < 10; ++round) {
        auto space = testutil::random_space(rng, 4);
        std::vector<int> image(4);
        for (int& target : image) target = pick(rng);
        System sys(space, image);
        bool was_transitive = false, was_mixing = false;
        for (const Rational& delta : sweep_deltas(sys)) {
            bool transitive = chain_transitive_at(sys, delta).transitive;
            bool mixing = chain_mixing_at(sys, delta).mixing;
            CHECK((!was_transitive || transitive));  // once true, stays true upward
            CHECK((!was_mixing || mixing));
            was_transitive = transitive;
            was_mixing = mixing;
        }
    }
}

TEST_CASE("coordinate bundles lift to set chains") {
    System swap = make_swap2();
    PointChain first = make_point_chain(swap, {0, 1, 0}, Rational(1, 2));
    PointChain second = make_point_chain(swap, {1, 0, 1}, Rational(1, 2));
    SetChain lifted = lift_chain_to_hyper(swap, {first, second});
    CHECK(lifted.sets == std::vector<Mask>{0b11, 0b11, 0b11});
    for (const Rational& slack : lifted.slacks) CHECK(slack < Rational(1, 2));

    SetChain solo = lift_chain_to_hyper(swap, {first});
    CHECK(solo.sets == std::vector<Mask>{0b01, 0b10, 0b01});

    PointChain longer = make_point_chain(swap, {0, 1, 0, 1}, Rational(1, 2));
    CHECK_THROWS_AS(lift_chain_to_hyper(swap, {first, longer}), DomainError);
}

TEST_CASE("random bundles always validate as set chains") {
    Rng rng(79);
    std::uniform_int_distribution<int> pick(0, 3);
    int built = 0;
    while (built < 100) {
        auto space = testutil::random_space(rng, 4);
        std::vector<int> image(4);
        for (int& target : image) target = pick(rng);
        System sys(space, image);
        Rational delta = sweep_deltas(sys)[sweep_deltas(sys).size() / 2];
        // three random walks through the chain graph, lifted coordinatewise
        ChainGraph graph = chain_graph(sys, delta);
        std::vector<PointChain> walks;
        for (int w = 0; w < 3; ++w) {
            std::vector<int> points{pick(rng)};
            for (int step = 0; step < 4; ++step) {
                const auto& succ = graph.succ[static_cast<size_t>(points.back())];
                std::uniform_int_distribution<size_t> next(0, succ.size() - 1);
                points.push_back(succ[next(rng)]);
            }
            walks.push_back(make_point_chain(sys, points, delta));
        }
        SetChain lifted = lift_chain_to_hyper(sys, walks);
        for (const Rational& slack : lifted.slacks) CHECK(slack < delta);
        ++built;
    }
}

TEST_CASE("level bundles lift to supremum chains and project back to supports") {
    System swap = make_swap2();
    StepFuzzySet u = StepFuzzySet::from_memberships(swap.space, {Rational(1), Rational(1, 2)});
    const Rational delta(1, 2);
    // constant-level chains: u has levels {a,b} at 1/2 and {a} at 1
    SetChain low = make_set_chain(swap, {0b11, 0b11, 0b11}, delta / Rational(2));
    SetChain high = make_set_chain(swap, {0b01, 0b10, 0b01}, delta / Rational(2));
    FuzzyChain lifted = lift_chain_to_fuzzy(swap, u, u, {low, high},
                                            {Rational(1, 2), Rational(1)}, delta);
    CHECK(lifted.points.size() == 3);
    CHECK(lifted.points.front() == u);
    CHECK(lifted.points.back() == u);
    for (const Rational& slack : lifted.slacks) CHECK(slack < delta);

    SetChain supports = project_fuzzy_chain_supports(swap, lifted);
    CHECK(supports.sets == std::vector<Mask>{0b11, 0b11, 0b11});

    // misaligned endpoints are rejected (a valid chain from the wrong level)
    SetChain wrong = make_set_chain(swap, {0b10, 0b01, 0b10}, delta / Rational(2));
    CHECK_THROWS_AS(
        lift_chain_to_fuzzy(swap, u, u, {low, wrong}, {Rational(1, 2), Rational(1)}, delta),
        DomainError);
}

TEST_CASE("constant chain: trivial lift and projection") {
    System identity = make_identity2();
    StepFuzzySet chik = StepFuzzySet::chi(identity.space, 0b01);
    SetChain constant = make_set_chain(identity, {0b01, 0b01, 0b01}, Rational(1, 4));
    FuzzyChain lifted =
        lift_chain_to_fuzzy(identity, chik, chik, {constant}, {Rational(1)}, Rational(1, 2));
    for (const Rational& slack : lifted.slacks) CHECK(slack == Rational(0));
    SetChain back = project_fuzzy_chain_supports(identity, lifted);
    CHECK(back.sets == constant.sets);
}

TEST_CASE("endograph chains reach any target over a surjective map") {
    System cycle = make_cycle(4);
    StepFuzzySet u = StepFuzzySet::chi(cycle.space, 0b0001);
    StepFuzzySet v = StepFuzzySet::chi(cycle.space, 0b0100);
    const Rational delta(1, 3);  // n_delta = 4, phase tolerance 1/4
    FuzzyChain chain = endograph_chain(cycle, u, v, delta, 8);
    CHECK(chain.points.size() == 9);
    CHECK(chain.points.front() == u);
    CHECK(chain.points.back() == v);
    for (const Rational& slack : chain.slacks) CHECK(slack <= Rational(1, 4));

    CHECK_THROWS_AS(endograph_chain(cycle, u, v, delta, 7), DomainError);   // n < 2 n_delta
    CHECK_THROWS_AS(endograph_chain(make_two_point(), StepFuzzySet::chi(make_two_point().space, 1),
                                    StepFuzzySet::chi(make_two_point().space, 1), delta, 8),
                    DomainError);  // not surjective

    // delta = 1: n_delta = 2, any n >= 4 works
    FuzzyChain easy = endograph_chain(cycle, u, v, Rational(1), 4);
    CHECK(easy.points.back() == v);
    // returning to the start
    FuzzyChain loop = endograph_chain(cycle, u, u, delta, 8);
    CHECK(loop.points.front() == u);
    CHECK(loop.points.back() == u);
}

TEST_CASE("non-surjective maps break endograph recurrence at small delta") {
    System collapsing = make_two_point();  // range misses b
    FuzzyGridSystem grid = fuzzy_grid(collapsing, 2, MetricKind::Endograph);
    int chib = grid.index_of(StepFuzzySet::chi(collapsing.space, 0b10));
    RecurrenceVerdict verdict = chain_recurrent_at(grid.sys, Rational(1, 4));
    CHECK_FALSE(verdict.recurrent);
    bool chib_fails = false;
    for (int failing : verdict.failing) chib_fails = chib_fails || failing == chib;
    CHECK(chib_fails);
}

TEST_CASE("chain profile rows carry the hyper counterexample") {
    ChainProfileOptions options;
    options.max_product_arity = 2;
    AnalysisReport report = chain_profile(make_swap2(), options);
    CHECK_FALSE(report.partial);
    bool base_transitive_everywhere = true;
    bool hyper_fails_below_one = false;
    for (const auto& row : report.checks) {
        if (row.name.starts_with("base"))
            base_transitive_everywhere =
                base_transitive_everywhere && row.witness.find("\"transitive\":true") != std::string::npos;
        if (row.name.starts_with("hyper @ delta=1/2"))
            hyper_fails_below_one = row.witness.find("\"transitive\":false") != std::string::npos;
    }
    CHECK(base_transitive_everywhere);
    CHECK(hyper_fails_below_one);
}

TEST_CASE("singleton profile is affirmative everywhere") {
    ChainProfileOptions options;
    options.max_product_arity = 1;
    options.include_hyper = false;
    AnalysisReport report = chain_profile(make_constant(1), options);
    for (const auto& row : report.checks) CHECK(row.passed);
}

TEST_CASE("constant map: only the fixed point returns at small delta") {
    System constant = make_constant(3);
    RecurrenceVerdict small = chain_recurrent_at(constant, Rational(1, 2));
    CHECK_FALSE(small.recurrent);
    CHECK(small.cycles[0].has_value());   // the fixed point p0 loops with slack 0
    CHECK(small.failing == std::vector<int>{1, 2});
    RecurrenceVerdict wide = chain_recurrent_at(constant, Rational(3));
    CHECK(wide.recurrent);
}
