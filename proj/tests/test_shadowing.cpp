#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzhyper/shadowing.hpp"
#include "fuzzhyper/instances.hpp"
#include "test_util.hpp"

using namespace fuzzhyper;
using testutil::Rng;

TEST_CASE("orbit tracking over the finite point set") {
    System identity = make_identity2();
    CHECK(is_eps_shadowed(identity, {0, 0, 0}, Rational(1, 4)) == 0);
    CHECK_FALSE(is_eps_shadowed(identity, {0, 1}, Rational(1, 2)).has_value());
    CHECK(is_eps_shadowed(identity, {0, 1}, Rational(3, 2)) == 0);
    CHECK_THROWS_AS(is_eps_shadowed(identity, {}, Rational(1)), DomainError);
    CHECK_THROWS_AS(is_eps_shadowed(identity, {0}, Rational(0)), DomainError);

    // an actual orbit is tracked by its own start for any eps
    System cycle = make_cycle(4);
    std::vector<int> orbit{1, 2, 3, 0, 1};
    CHECK(is_eps_shadowed(cycle, orbit, Rational(1, 8)) == 1);
}

TEST_CASE("tracker verdicts on the two-point systems") {
    System identity = make_identity2();
    CHECK(all_chains_shadowed(identity, Rational(1, 2), Rational(1, 2)).shadowed);
    ShadowingVerdict wide = all_chains_shadowed(identity, Rational(2), Rational(1, 2));
    CHECK_FALSE(wide.shadowed);
    REQUIRE(wide.counterexample.has_value());
    CHECK(wide.counterexample->points.size() == 2);  // one hop kills every tracker
    CHECK_FALSE(is_eps_shadowed(identity, wide.counterexample->points, Rational(1, 2)).has_value());

    System singleton = make_constant(1);
    CHECK(all_chains_shadowed(singleton, Rational(5), Rational(1, 8)).shadowed);
}

TEST_CASE("counterexample chains always revalidate") {
    Rng rng(83);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int round = 0; round < 15; ++round) {
        auto space = testutil::random_space(rng, 4);
        std::vector<int> image(4);
        for (int& target : image) target = pick(rng);
        System sys(space, image);
        for (const Rational& delta : sweep_deltas(sys))
            for (const Rational& d : space->distance_values()) {
                Rational eps = d / Rational(2);
                ShadowingVerdict verdict = all_chains_shadowed(sys, delta, eps);
                if (!verdict.shadowed) {
                    REQUIRE(verdict.counterexample.has_value());
                    CHECK_FALSE(
                        is_eps_shadowed(sys, verdict.counterexample->points, eps).has_value());
                }
            }
    }
}

TEST_CASE("tracker agrees with the brute-force oracle on random systems") {
    Rng rng(89);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int round = 0; round < 10; ++round) {
        auto space = testutil::random_space(rng, 4);
        std::vector<int> image(4);
        for (int& target : image) target = pick(rng);
        System sys(space, image);
        std::vector<Rational> eps_values;
        for (const Rational& d : space->distance_values())
            eps_values.push_back(d / Rational(2));
        for (const Rational& delta : sweep_deltas(sys))
            for (const Rational& eps : eps_values)
                CHECK(all_chains_shadowed(sys, delta, eps).shadowed ==
                      shadowing_oracle(sys, delta, eps, 64));
    }
}

TEST_CASE("verdict is monotone: smaller delta and larger eps only help") {
    Rng rng(97);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int round = 0; round < 8; ++round) {
        auto space = testutil::random_space(rng, 4);
        std::vector<int> image(4);
        for (int& target : image) target = pick(rng);
        System sys(space, image);
        auto deltas = sweep_deltas(sys);
        Rational eps = space->diameter() / Rational(3);
        bool first = true;
        bool previous = false;
        for (auto it = deltas.rbegin(); it != deltas.rend(); ++it) {
            bool now = all_chains_shadowed(sys, *it, eps).shadowed;
            if (!first) CHECK((!previous || now));  // passing at larger delta implies below
            previous = now;
            first = false;
        }
    }
}

TEST_CASE("contraction shadowing: delta = (1 - lambda) eps always passes") {
    System tail = make_triadic_tail(3);
    Rational lambda = *classify_contractive(tail);
    CHECK(lambda == Rational(1, 2));
    for (const Rational& eps : {Rational(1, 3), Rational(1, 9)}) {
        Rational delta = (Rational(1) - lambda) * eps;
        CHECK(all_chains_shadowed(tail, delta, eps).shadowed);
    }
}

TEST_CASE("contraction chains are tracked by their own start within (1-lambda^j) eps") {
    System tail = make_triadic_tail(3);
    const Rational lambda(1, 2);
    const Rational eps(1, 3);
    const Rational delta = (Rational(1) - lambda) * eps;
    ChainGraph graph = chain_graph(tail, delta);
    Rng rng(101);
    for (int round = 0; round < 100; ++round) {
        std::uniform_int_distribution<int> start(0, tail.size() - 1);
        std::vector<int> points{start(rng)};
        for (int step = 0; step < 6; ++step) {
            const auto& succ = graph.succ[static_cast<size_t>(points.back())];
            std::uniform_int_distribution<size_t> next(0, succ.size() - 1);
            points.push_back(succ[next(rng)]);
        }
        int x0 = points.front();
        for (size_t j = 0; j < points.size(); ++j) {
            Rational bound = (Rational(1) - pow(lambda, static_cast<unsigned>(j))) * eps;
            Rational actual = tail.space->dist(tail.iterate(x0, static_cast<int>(j)), points[j]);
            if (j == 0)
                CHECK(actual == bound);  // both are zero
            else
                CHECK(actual < bound);
        }
    }
}

TEST_CASE("finite shadowing profile returns the largest passing sweep value") {
    System identity = make_identity2();
    auto profile = finite_shadowing_profile(identity, Rational(1, 2));
    REQUIRE(profile.has_value());
    CHECK(*profile == Rational(1, 2));  // the sweep value at-or-below the diameter

    System tail = make_triadic_tail(3);
    auto tail_profile = finite_shadowing_profile(tail, Rational(1, 3));
    REQUIRE(tail_profile.has_value());
    CHECK(all_chains_shadowed(tail, *tail_profile, Rational(1, 3)).shadowed);

    System singleton = make_constant(1);
    auto single_profile = finite_shadowing_profile(singleton, Rational(1, 2));
    REQUIRE(single_profile.has_value());
    CHECK(*single_profile == sweep_deltas(singleton).back());
}

TEST_CASE("discrete drifting chain: links are exactly 1/k") {
    for (long long k : {8LL, 16LL}) {
        ExampleChain example = example_discrete_chain(k);
        CHECK(example.chain.points.size() == static_cast<size_t>(k / 2));
        for (const Rational& slack : example.chain.slacks) CHECK(slack == Rational(1, k));
        const SpacePtr& space = example.sys.space;
        CHECK(example.chain.points.front() ==
              StepFuzzySet::from_memberships(space, {Rational(1), Rational(1, 2)}));
        CHECK(example.chain.points.back() ==
              StepFuzzySet::from_memberships(space,
                                             {Rational(1), Rational(1) - Rational(1, k)}));
    }
    CHECK_THROWS_AS(example_discrete_chain(7), DomainError);
    CHECK_THROWS_AS(example_discrete_chain(6), DomainError);
}

TEST_CASE("connected drifting chain on the truncated dyadic line") {
    ExampleChain example = example_connected_chain(8);
    CHECK(example.sys.space->size() == 5);  // {0, 1, 2, 4, 8}
    CHECK(example.sys.space->label(4) == "8");
    for (const Rational& slack : example.chain.slacks) CHECK(slack == Rational(1, 8));
    // endograph links also sit exactly at 1/k, and images halve the support
    for (size_t j = 0; j + 1 < example.chain.points.size(); ++j) {
        StepFuzzySet image = zadeh_extend(example.sys, example.chain.points[j]);
        CHECK(d_end(image, example.chain.points[j + 1]) == Rational(1, 8));
        Mask expected = 0b1 | (example.chain.points[j].support() & ~Mask(0b1)) >> 1;
        CHECK(image.support() == expected);
    }
    const SpacePtr& space = example.sys.space;
    std::vector<Rational> last(static_cast<size_t>(space->size()), Rational(0));
    last[0] = Rational(1);
    last[1] = Rational(7, 8);
    CHECK(example.chain.points.back() == StepFuzzySet::from_memberships(space, last));
}

TEST_CASE("certificate rules out every tracking candidate when the drift is wide enough") {
    // k = 16: the chain drifts from 1/2 to 15/16, more than twice eps0 + h.
    ExampleChain example = example_discrete_chain(16);
    NonShadowingCertificate cert =
        certify_not_shadowed(example.sys, example.chain, Rational(1, 5), Rational(1, 64));
    CHECK(cert.certified);
    CHECK(cert.margin == Rational(1, 64));
    CHECK(cert.candidates_covered >= 129);  // every normal grid candidate, most twice
    // a fortiori at a smaller tolerance
    NonShadowingCertificate tighter =
        certify_not_shadowed(example.sys, example.chain, Rational(1, 100), Rational(1, 64));
    CHECK(tighter.certified);
}

TEST_CASE("certificate stays honest when a tracking candidate exists") {
    // k = 8 drifts only from 1/2 to 7/8: the midpoint candidate
    // chi{a} + 11/16 chi{b} tracks the whole chain within 3/16 < 1/5.
    ExampleChain example = example_discrete_chain(8);
    NonShadowingCertificate cert =
        certify_not_shadowed(example.sys, example.chain, Rational(1, 5), Rational(1, 64));
    CHECK_FALSE(cert.certified);
    REQUIRE(cert.survivor.has_value());
    REQUIRE(cert.survivor_deviation.has_value());
    // the descent refines the survivor into a genuine tracking candidate
    CHECK(cert.survivor_is_shadower);
    CHECK(*cert.survivor_deviation == Rational(3, 16));
    StepFuzzySet survivor = StepFuzzySet::from_memberships(example.sys.space, *cert.survivor);
    Rational worst(0);
    StepFuzzySet orbit = survivor;
    for (const auto& element : example.chain.points) {
        worst = rat_max(worst, d_end(orbit, element));
        orbit = zadeh_extend(example.sys, orbit);
    }
    CHECK(worst == *cert.survivor_deviation);

    // and the failure is genuine: the midpoint candidate strictly 1/5-tracks
    StepFuzzySet midpoint = StepFuzzySet::from_memberships(
        example.sys.space, {Rational(1), Rational(11, 16)});
    Rational midpoint_worst(0);
    for (const auto& element : example.chain.points)
        midpoint_worst = rat_max(midpoint_worst, d_end(midpoint, element));
    CHECK(midpoint_worst == Rational(3, 16));
    CHECK(midpoint_worst < Rational(1, 5));

    // the same drift is unsalvageable at the tolerance the construction
    // actually supports (below 1/4 - 1/k)
    NonShadowingCertificate tight =
        certify_not_shadowed(example.sys, example.chain, Rational(1, 10), Rational(1, 64));
    CHECK(tight.certified);
}

TEST_CASE("certificate on the connected chain mirrors the discrete one") {
    ExampleChain example = example_connected_chain(8);
    NonShadowingCertificate loose =
        certify_not_shadowed(example.sys, example.chain, Rational(1, 5), Rational(1, 64));
    CHECK_FALSE(loose.certified);  // same midpoint candidate survives
    NonShadowingCertificate tight =
        certify_not_shadowed(example.sys, example.chain, Rational(1, 10), Rational(1, 64));
    CHECK(tight.certified);
}

TEST_CASE("a constant chain is shadowed, so the certificate must give up") {
    System identity = make_identity2();
    StepFuzzySet u = StepFuzzySet::from_memberships(identity.space, {Rational(1), Rational(1, 2)});
    FuzzyChain constant =
        make_fuzzy_chain(identity, MetricKind::Endograph, {u, u, u}, Rational(1, 4));
    NonShadowingCertificate cert =
        certify_not_shadowed(identity, constant, Rational(1, 5), Rational(1, 64));
    CHECK_FALSE(cert.certified);
    REQUIRE(cert.survivor.has_value());
    CHECK(cert.survivor_is_shadower);
    // the descent walks down to u itself, which tracks the chain exactly
    CHECK(*cert.survivor_deviation == Rational(0));
    CHECK(StepFuzzySet::from_memberships(identity.space, *cert.survivor) == u);
}

TEST_CASE("equivalence harness: base, hyper and sup-grid profiles line up") {
    for (const System& sys : {make_identity2(), make_swap2(), make_two_point()}) {
        AnalysisReport report =
            shadowing_equivalence_harness(sys, {Rational(1, 2), Rational(3, 2)});
        CHECK(report.all_passed());
    }
    System constant = make_constant(3);
    AnalysisReport report = shadowing_equivalence_harness(constant, {Rational(1, 3)});
    CHECK(report.all_passed());
}

TEST_CASE("endograph harness certifies non-shadowing for surjective multi-point systems") {
    AnalysisReport identity_report = endograph_non_shadowing_harness(
        make_identity2(), Rational(1, 5), {Rational(1, 10), Rational(1, 20)});
    CHECK(identity_report.all_passed());
    AnalysisReport swap_report = endograph_non_shadowing_harness(
        make_swap2(), Rational(1, 5), {Rational(1, 10), Rational(1, 20)});
    CHECK(swap_report.all_passed());
    AnalysisReport singleton_report =
        endograph_non_shadowing_harness(make_constant(1), Rational(1, 5), {Rational(1, 10)});
    REQUIRE(singleton_report.checks.size() == 1);
    CHECK(singleton_report.checks.front().witness.find("hypothesis not met") !=
          std::string::npos);
}

TEST_CASE("drifting chain supports project to a constant subset chain") {
    ExampleChain example = example_discrete_chain(8);
    SetChain supports = project_fuzzy_chain_supports(example.sys, example.chain);
    for (Mask s : supports.sets) CHECK(s == 0b11);
    for (const Rational& slack : supports.slacks) CHECK(slack == Rational(0));
}
