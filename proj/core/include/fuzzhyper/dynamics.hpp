#pragma once

#include <optional>
#include <span>
#include <utility>

#include "fuzzhyper/fuzzy_metrics.hpp"

namespace fuzzhyper {

/// Least lambda with d(f(x), f(y)) <= lambda d(x,y) everywhere, when < 1.
/// A singleton (or constant) system reports lambda = 0.
std::optional<Rational> classify_contractive(const System& sys);

/// Greatest lambda with d(f(x), f(y)) >= lambda d(x,y) everywhere, when > 1.
/// Collapsing pairs force nullopt; a singleton has no finite optimal constant
/// and also reports nullopt (it is vacuously expansive).
std::optional<Rational> classify_expansive(const System& sys);

enum class ExpandingStatus { Vacuous, Expanding, NotExpanding };

struct ExpandingVerdict {
    ExpandingStatus status = ExpandingStatus::Vacuous;
    std::optional<Rational> min_ratio;            // over pairs with 0 < d < eps
    std::optional<std::pair<int, int>> witness;   // violating pair when NotExpanding
};

/// Strict local expansion below scale eps; vacuous when no pair is that close.
ExpandingVerdict is_expanding(const System& sys, const Rational& eps);

struct PositiveExpansiveVerdict {
    bool vacuous = false;                 // singleton: no pairs to separate
    std::optional<Rational> delta_star;   // any delta < delta_star works
};

/// On a finite space the n = 0 term already separates distinct points, so the
/// verdict is always affirmative; the informative output is the optimal
/// threshold delta* = min over pairs of the orbit-maximal distance.
PositiveExpansiveVerdict is_positively_expansive(const System& sys);

/// All nonempty subsets with the Hausdorff metric and the induced set map.
struct HyperSystem {
    System sys;
    std::vector<Mask> sets;  // sets[i] is the subset behind point i
    int index_of(Mask m) const;
};

HyperSystem hyper_extend(const System& base);

/// All normal step sets with breakpoints in {1/m, ..., 1}, one of the four
/// metrics, and the induced image map. Closed under the image map.
struct FuzzyGridSystem {
    System sys;
    std::vector<StepFuzzySet> points;
    int resolution = 0;
    MetricKind metric = MetricKind::Endograph;
    int index_of(const StepFuzzySet& u) const;
};

FuzzyGridSystem fuzzy_grid(const System& base, int resolution, MetricKind metric);

/// The probe pair u = chi{x} + 1/2 chi{y}, u_k = chi{x} + (1/2 - 1/k) chi{y};
/// requires x != y and k > 2.
std::pair<StepFuzzySet, StepFuzzySet> contraexpansive_pair(const System& sys, int x, int y,
                                                           long long k);

enum class MonotoneMode { Contractive, Expansive };

struct MonotonicityReport {
    bool holds = true;
    int checked = 0;
    int strict = 0;  // pairs where the inequality is strict
    std::optional<std::pair<StepFuzzySet, StepFuzzySet>> violation;
};

/// Checks rho(f(u), f(v)) <= rho(u, v) (contractive mode) or >= (expansive
/// mode) for the induced image map, over the given sample pairs.
MonotonicityReport monotonicity_check(const System& sys, MetricKind metric, MonotoneMode mode,
                                      std::span<const std::pair<StepFuzzySet, StepFuzzySet>> pairs);

/// Dense range on a finite space means the image map is onto (a permutation).
bool has_dense_range(const System& sys);

/// Exact levelwise preimage of v under the induced image map; the image of
/// the result equals v, so every metric distance is 0 < eps. Throws
/// NoPreimage when the map is not surjective.
StepFuzzySet approx_preimage(const System& sys, const StepFuzzySet& v, const Rational& eps,
                             MetricKind metric);

/// Singletons are open in a finite space, so this reduces to every orbit
/// being eventually constant at every target point; only a one-point system
/// qualifies. Computed honestly from the orbits.
bool is_topologically_mixing(const System& sys);

}  // namespace fuzzhyper
