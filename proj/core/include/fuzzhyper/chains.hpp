#pragma once

#include <optional>

#include "fuzzhyper/dynamics.hpp"
#include "fuzzhyper/report.hpp"

namespace fuzzhyper {

/// Successor lists of the relation d(f(x), y) < delta. The edge x -> f(x) is
/// always present (slack 0), and the edge set only grows with delta.
struct ChainGraph {
    Rational delta;
    std::vector<std::vector<int>> succ;
};

ChainGraph chain_graph(const System& sys, const Rational& delta);

/// Sorted distinct slack values d(f(x), y), plus one value above the maximum.
/// Sweeping just above each value visits every distinct chain graph.
std::vector<Rational> critical_deltas(const System& sys);

/// Midpoints between consecutive critical values: tie-free representatives,
/// one per distinct chain graph.
std::vector<Rational> sweep_deltas(const System& sys);

/// Finite chain of system points with its per-link slacks, all < delta.
struct PointChain {
    Rational delta;
    std::vector<int> points;
    std::vector<Rational> slacks;

    int length() const { return static_cast<int>(slacks.size()); }
};

/// Computes the slacks and rejects any link with slack >= delta.
PointChain make_point_chain(const System& sys, std::vector<int> points, const Rational& delta);

struct RecurrenceVerdict {
    bool recurrent = false;
    std::vector<std::optional<PointChain>> cycles;  // per point, when on a cycle
    std::vector<int> failing;                       // points with no return chain
};

RecurrenceVerdict chain_recurrent_at(const System& sys, const Rational& delta);

struct TransitivityVerdict {
    bool transitive = false;
    std::optional<std::pair<int, int>> witness;  // unreachable pair on failure
};

TransitivityVerdict chain_transitive_at(const System& sys, const Rational& delta);

struct MixingVerdict {
    bool mixing = false;
    bool transitive = false;
    long long period = 0;  // gcd of cycle lengths when transitive
};

/// Strong connectivity plus aperiodicity. The reduction is validated against
/// chain_mixing_oracle below.
MixingVerdict chain_mixing_at(const System& sys, const Rational& delta);

/// Reference check by boolean matrix powers: mixing holds exactly when every
/// pair is reachable at every length in a window past the primitivity bound
/// (n-1)^2 + 1.
bool chain_mixing_oracle(const System& sys, const Rational& delta);

/// Shortest chain from x to y (length >= 1), or a chain of the exact given
/// length; nullopt when none exists.
std::optional<PointChain> find_chain(const System& sys, int x, int y, const Rational& delta,
                                     std::optional<int> length = std::nullopt);

/// Chain of subsets with Hausdorff slacks, all < delta.
struct SetChain {
    Rational delta;
    std::vector<Mask> sets;
    std::vector<Rational> slacks;

    int length() const { return static_cast<int>(slacks.size()); }
};

SetChain make_set_chain(const System& sys, std::vector<Mask> sets, const Rational& delta);

/// Coordinatewise bundle: K_j = { x_j^1, ..., x_j^N }. All chains must share
/// delta and length; the result is validated exactly.
SetChain lift_chain_to_hyper(const System& sys, const std::vector<PointChain>& chains);

/// Chain of fuzzy sets under one of the four metrics, slacks all < delta.
struct FuzzyChain {
    Rational delta;
    MetricKind metric = MetricKind::Sup;
    std::vector<StepFuzzySet> points;
    std::vector<Rational> slacks;

    int length() const { return static_cast<int>(slacks.size()); }
};

FuzzyChain make_fuzzy_chain(const System& sys, MetricKind metric,
                            std::vector<StepFuzzySet> points, const Rational& delta);

/// Stacks hyper chains at delta/2 (one per breakpoint, chain l running from
/// u.level(a_l) to v.level(a_l)) into a supremum-metric chain from u to v.
FuzzyChain lift_chain_to_fuzzy(const System& sys, const StepFuzzySet& u, const StepFuzzySet& v,
                               const std::vector<SetChain>& hyper_chains,
                               const std::vector<Rational>& breakpoints, const Rational& delta);

/// The support sequence of a sendograph-or-finer chain, revalidated as a
/// Hausdorff chain.
SetChain project_fuzzy_chain_supports(const System& sys, const FuzzyChain& chain);

/// Endograph chain from u to v of exact length n for any n >= 2*n_delta,
/// where n_delta = floor(1/delta) + 1. Three phases: fade u out along the
/// orbit of a core point, fade in an exact n-step preimage of v, then ride
/// its orbit. Requires a surjective map.
FuzzyChain endograph_chain(const System& sys, const StepFuzzySet& u, const StepFuzzySet& v,
                           const Rational& delta, int n);

struct ChainProfileOptions {
    int max_product_arity = 3;
    bool include_hyper = true;
    std::vector<std::pair<int, MetricKind>> fuzzy_grids;  // (resolution, metric)
};

/// Recurrence/transitivity/mixing verdicts per sweep delta for the base
/// system, its small products, its hyperspace and configured fuzzy grids.
/// Budget misses mark the report partial instead of failing.
AnalysisReport chain_profile(const System& sys, const ChainProfileOptions& options);

}  // namespace fuzzhyper
