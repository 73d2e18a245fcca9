#pragma once

#include <random>
#include <vector>

#include "fuzzhyper/fuzzy_metrics.hpp"
#include "fuzzhyper/system.hpp"

namespace testutil {

using namespace fuzzhyper;

using Rng = std::mt19937_64;

/// Random metric space: random positive rational weights on the complete
/// graph, repaired into a metric by exact shortest paths.
inline SpacePtr random_space(Rng& rng, int n) {
    std::uniform_int_distribution<int> num(1, 8);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<std::vector<Rational>> d(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational w(num(rng), den(rng));
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] = w;
            d[static_cast<size_t>(j)][static_cast<size_t>(i)] = w;
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) {
                    Rational via = d[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                                   d[static_cast<size_t>(k)][static_cast<size_t>(j)];
                    if ((k != i && k != j) && via < d[static_cast<size_t>(i)][static_cast<size_t>(j)])
                        d[static_cast<size_t>(i)][static_cast<size_t>(j)] = via;
                }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(d));
}

inline Mask random_nonempty_mask(Rng& rng, int n) {
    std::uniform_int_distribution<Mask> bits(1, (Mask(1) << n) - 1);
    return bits(rng);
}

/// Random normal step fuzzy set with up to `max_levels` breakpoints ending
/// at 1, denominators <= 8.
inline StepFuzzySet random_fuzzy(Rng& rng, const SpacePtr& space, int max_levels = 3) {
    const int n = space->size();
    std::uniform_int_distribution<int> count(1, max_levels);
    std::uniform_int_distribution<int> num(1, 7);
    std::uniform_int_distribution<int> den(2, 8);
    int levels = count(rng);
    std::vector<Rational> alphas{Rational(1)};
    while (static_cast<int>(alphas.size()) < levels) {
        Rational a(num(rng), den(rng));
        if (a.sign() > 0 && a < Rational(1)) alphas.push_back(a);
    }
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    Mask level = random_nonempty_mask(rng, n);
    std::vector<Mask> sets;
    for (size_t l = alphas.size(); l-- > 0;) {
        sets.push_back(level);
        // grow as alpha decreases
        level |= random_nonempty_mask(rng, n);
    }
    std::reverse(sets.begin(), sets.end());
    return StepFuzzySet::from_levels(space, std::move(alphas), std::move(sets));
}

/// All normal step sets with memberships in {0, 1/m, ..., 1}.
inline std::vector<StepFuzzySet> grid_fuzzy_sets(const SpacePtr& space, int m) {
    const int n = space->size();
    std::vector<StepFuzzySet> out;
    std::vector<int> digits(static_cast<size_t>(n), 0);
    while (true) {
        bool normal = false;
        for (int d : digits) normal = normal || d == m;
        if (normal) {
            std::vector<Rational> values;
            for (int d : digits) values.emplace_back(d, m);
            out.push_back(StepFuzzySet::from_memberships(space, values));
        }
        int pos = n - 1;
        while (pos >= 0 && digits[static_cast<size_t>(pos)] == m)
            digits[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++digits[static_cast<size_t>(pos)];
    }
    return out;
}

/// Brute-force endograph/sendograph oracle: discretize the vertical axis on
/// the grid {j/steps} and take the Hausdorff distance of the resulting point
/// clouds in the max product metric. Off from the exact value by at most
/// 1/steps.
inline Rational endo_oracle(const StepFuzzySet& u, const StepFuzzySet& v, long long steps,
                            bool sendograph) {
    const FiniteMetricSpace& space = *u.space();
    const int n = space.size();
    auto mu = u.memberships();
    auto mv = v.memberships();
    struct Point {
        int x;
        Rational alpha;
    };
    auto cloud = [&](const std::vector<Rational>& m, Mask support) {
        std::vector<Point> points;
        for (int x = 0; x < n; ++x) {
            if (sendograph && !mask_contains(support, x)) continue;
            for (long long j = 0; j <= steps; ++j) {
                Rational alpha(j, steps);
                if (alpha <= m[static_cast<size_t>(x)] || j == 0)
                    points.push_back({x, alpha});
            }
        }
        return points;
    };
    auto a = cloud(mu, u.support());
    auto b = cloud(mv, v.support());
    auto directed = [&](const std::vector<Point>& from, const std::vector<Point>& to) {
        Rational worst(0);
        for (const Point& p : from) {
            Rational best(-1);
            for (const Point& q : to) {
                Rational cost = rat_max(space.dist(p.x, q.x), (p.alpha - q.alpha).abs());
                if (best.sign() < 0 || cost < best) best = cost;
            }
            worst = rat_max(worst, best);
        }
        return worst;
    };
    return rat_max(directed(a, b), directed(b, a));
}

}  // namespace testutil
