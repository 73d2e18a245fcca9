#include "fuzzhyper/dynamics.hpp"

#include <algorithm>
#include <map>

#include "fuzzhyper/budget.hpp"
#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

std::optional<Rational> classify_contractive(const System& sys) {
    Rational lambda(0);
    const int n = sys.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            lambda = rat_max(lambda, sys.space->dist(sys.apply(x), sys.apply(y)) /
                                         sys.space->dist(x, y));
    if (lambda < Rational(1)) return lambda;
    return std::nullopt;
}

std::optional<Rational> classify_expansive(const System& sys) {
    std::optional<Rational> lambda;
    const int n = sys.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (sys.apply(x) == sys.apply(y)) return std::nullopt;  // collapsing pair
            Rational ratio = sys.space->dist(sys.apply(x), sys.apply(y)) / sys.space->dist(x, y);
            if (!lambda || ratio < *lambda) lambda = ratio;
        }
    if (lambda && *lambda > Rational(1)) return lambda;
    return std::nullopt;
}

ExpandingVerdict is_expanding(const System& sys, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("expanding check needs eps > 0");
    ExpandingVerdict verdict;
    const int n = sys.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const Rational& d = sys.space->dist(x, y);
            if (!(d < eps)) continue;
            Rational ratio = sys.space->dist(sys.apply(x), sys.apply(y)) / d;
            if (!verdict.min_ratio || ratio < *verdict.min_ratio) {
                verdict.min_ratio = ratio;
                if (!(ratio > Rational(1))) verdict.witness = {x, y};
            }
        }
    if (!verdict.min_ratio) {
        verdict.status = ExpandingStatus::Vacuous;
    } else {
        verdict.status = *verdict.min_ratio > Rational(1) ? ExpandingStatus::Expanding
                                                          : ExpandingStatus::NotExpanding;
        if (verdict.status == ExpandingStatus::Expanding) verdict.witness.reset();
    }
    return verdict;
}

PositiveExpansiveVerdict is_positively_expansive(const System& sys) {
    PositiveExpansiveVerdict verdict;
    const int n = sys.size();
    if (n == 1) {
        verdict.vacuous = true;
        return verdict;
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            // The pair orbit is eventually periodic; walk it until a repeat.
            std::vector<char> seen(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
            int a = x, b = y;
            Rational separation(0);
            while (!seen[static_cast<size_t>(a) * n + b]) {
                seen[static_cast<size_t>(a) * n + b] = 1;
                separation = rat_max(separation, sys.space->dist(a, b));
                a = sys.apply(a);
                b = sys.apply(b);
            }
            if (!verdict.delta_star || separation < *verdict.delta_star)
                verdict.delta_star = separation;
        }
    return verdict;
}

int HyperSystem::index_of(Mask m) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), m);
    if (it == sets.end() || *it != m) throw DomainError("subset not in hyperspace enumeration");
    return static_cast<int>(it - sets.begin());
}

HyperSystem hyper_extend(const System& base) {
    const int n = base.size();
    if (n > 20) throw ResourceError("hyperspace enumeration limited to 20 base points");
    const size_t count = (size_t(1) << n) - 1;
    if (count > enumeration_budget())
        throw ResourceError("hyperspace needs " + std::to_string(count) + " points, over budget " +
                            std::to_string(enumeration_budget()));

    std::vector<Mask> sets;
    sets.reserve(count);
    for (Mask m = 1; m <= count; ++m) sets.push_back(m);

    std::vector<std::string> labels;
    labels.reserve(count);
    for (Mask m : sets) labels.push_back(base.space->set_label(m));

    std::vector<std::vector<Rational>> dist(count, std::vector<Rational>(count));
    for (size_t i = 0; i < count; ++i)
        for (size_t j = i + 1; j < count; ++j) {
            Rational d = hausdorff(*base.space, sets[i], sets[j]);
            dist[i][j] = d;
            dist[j][i] = d;
        }
    auto space = std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(dist));

    std::vector<int> image(count);
    HyperSystem hyper;
    hyper.sets = std::move(sets);
    for (size_t i = 0; i < count; ++i)
        image[i] = static_cast<int>(base.image_mask(hyper.sets[i]) - 1);
    hyper.sys = System(std::move(space), std::move(image));
    return hyper;
}

int FuzzyGridSystem::index_of(const StepFuzzySet& u) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i] == u) return static_cast<int>(i);
    throw DomainError("fuzzy set not on the grid");
}

FuzzyGridSystem fuzzy_grid(const System& base, int resolution, MetricKind metric) {
    if (resolution < 1) throw DomainError("grid resolution must be >= 1");
    const int n = base.size();
    const int m = resolution;

    double estimate = 1.0;
    for (int i = 0; i < n; ++i) estimate *= (m + 1);
    if (estimate > static_cast<double>(enumeration_budget()) * 4)
        throw ResourceError("fuzzy grid enumeration over budget");

    // Memberships are multiples of 1/m; normal means some point sits at 1.
    FuzzyGridSystem grid;
    grid.resolution = m;
    grid.metric = metric;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> raw;
    std::vector<int> digits(static_cast<size_t>(n), 0);
    while (true) {
        if (std::find(digits.begin(), digits.end(), m) != digits.end()) {
            index[digits] = static_cast<int>(raw.size());
            raw.push_back(digits);
        }
        int pos = n - 1;
        while (pos >= 0 && digits[static_cast<size_t>(pos)] == m) digits[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++digits[static_cast<size_t>(pos)];
    }
    const size_t count = raw.size();
    if (count > enumeration_budget())
        throw ResourceError("fuzzy grid needs " + std::to_string(count) + " points, over budget " +
                            std::to_string(enumeration_budget()));

    grid.points.reserve(count);
    for (const auto& digit_vec : raw) {
        std::vector<Rational> values;
        values.reserve(static_cast<size_t>(n));
        for (int d : digit_vec) values.emplace_back(d, m);
        grid.points.push_back(StepFuzzySet::from_memberships(base.space, values));
    }

    std::vector<std::string> labels;
    labels.reserve(count);
    for (const auto& p : grid.points) labels.push_back(p.str());

    std::vector<std::vector<Rational>> dist(count, std::vector<Rational>(count));
    for (size_t i = 0; i < count; ++i)
        for (size_t j = i + 1; j < count; ++j) {
            Rational d = fuzzy_distance(metric, grid.points[i], grid.points[j]);
            dist[i][j] = d;
            dist[j][i] = d;
        }
    auto space = std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(dist));

    std::vector<int> image(count);
    for (size_t i = 0; i < count; ++i) {
        StepFuzzySet img = zadeh_extend(base, grid.points[i]);
        std::vector<int> key(static_cast<size_t>(n));
        auto values = img.memberships();
        for (int x = 0; x < n; ++x) key[static_cast<size_t>(x)] = (values[static_cast<size_t>(x)] * Rational(m)).num();
        image[i] = index.at(key);
    }
    grid.sys = System(std::move(space), std::move(image));
    return grid;
}

std::pair<StepFuzzySet, StepFuzzySet> contraexpansive_pair(const System& sys, int x, int y,
                                                           long long k) {
    if (x == y) throw DomainError("probe pair needs two distinct points");
    if (k <= 2) throw DomainError("probe pair needs k > 2");
    const SpacePtr& space = sys.space;
    StepFuzzySet chix = StepFuzzySet::chi(space, Mask(1) << x);
    StepFuzzySet chiy = StepFuzzySet::chi(space, Mask(1) << y);
    StepFuzzySet u = fuzzy_max(chix, fuzzy_scale(Rational(1, 2), chiy));
    StepFuzzySet uk = fuzzy_max(chix, fuzzy_scale(Rational(1, 2) - Rational(1, k), chiy));
    return {u, uk};
}

MonotonicityReport monotonicity_check(const System& sys, MetricKind metric, MonotoneMode mode,
                                      std::span<const std::pair<StepFuzzySet, StepFuzzySet>> pairs) {
    MonotonicityReport report;
    for (const auto& [u, v] : pairs) {
        Rational before = fuzzy_distance(metric, u, v);
        Rational after = fuzzy_distance(metric, zadeh_extend(sys, u), zadeh_extend(sys, v));
        bool fine = mode == MonotoneMode::Contractive ? after <= before : after >= before;
        ++report.checked;
        if (after != before) ++report.strict;
        if (!fine) {
            report.holds = false;
            if (!report.violation) report.violation = {u, v};
        }
    }
    return report;
}

bool has_dense_range(const System& sys) { return sys.is_surjective(); }

StepFuzzySet approx_preimage(const System& sys, const StepFuzzySet& v, const Rational& eps,
                             MetricKind metric) {
    if (eps.sign() <= 0) throw DomainError("approx_preimage needs eps > 0");
    if (!v.normal()) throw DomainError("approx_preimage target must be normal");
    if (!sys.is_surjective()) {
        Mask image = 0;
        for (int x = 0; x < sys.size(); ++x) image |= Mask(1) << sys.apply(x);
        Mask missing = sys.space->full_mask() & ~image;
        Mask witness_level = 0;
        for (Mask lvl : v.levels())
            if ((lvl & missing) != 0) witness_level = lvl;
        if (witness_level == 0) witness_level = Mask(1) << mask_least(missing);
        throw NoPreimage("map is not surjective; level " + sys.space->set_label(witness_level) +
                             " has no exact preimage",
                         sys.space->set_label(witness_level));
    }
    std::vector<int> inv = sys.inverse_permutation();
    std::vector<Mask> levels;
    levels.reserve(v.levels().size());
    for (Mask lvl : v.levels()) {
        Mask pre = 0;
        while (lvl != 0) {
            int z = mask_least(lvl);
            lvl &= lvl - 1;
            pre |= Mask(1) << inv[static_cast<size_t>(z)];
        }
        levels.push_back(pre);
    }
    StepFuzzySet w = StepFuzzySet::from_levels(v.space(), v.breakpoints(), std::move(levels));
    Rational achieved = fuzzy_distance(metric, zadeh_extend(sys, w), v);
    if (!(achieved < eps)) throw NoWitness("preimage distance not under eps");  // unreachable: exact
    return w;
}

bool is_topologically_mixing(const System& sys) {
    const int n = sys.size();
    for (int x = 0; x < n; ++x) {
        // Find the terminal cycle of the orbit of x.
        std::vector<char> seen(static_cast<size_t>(n), 0);
        int p = x;
        while (!seen[static_cast<size_t>(p)]) {
            seen[static_cast<size_t>(p)] = 1;
            p = sys.apply(p);
        }
        // f^k(x) = y for all large k forces the cycle to be the fixed point
        // y; that must hold for every target y simultaneously.
        if (sys.apply(p) != p) return false;
        for (int y = 0; y < n; ++y)
            if (y != p) return false;
    }
    return true;
}

}  // namespace fuzzhyper
