#pragma once

#include "fuzzhyper/chains.hpp"

namespace fuzzhyper {

/// Some point whose orbit strictly eps-tracks the sequence, or nullopt;
/// exhaustive over the finite point set.
std::optional<int> is_eps_shadowed(const System& sys, const std::vector<int>& seq,
                                   const Rational& eps);

struct ShadowingVerdict {
    bool shadowed = false;
    std::optional<PointChain> counterexample;  // a chain no orbit tracks
    std::size_t states_explored = 0;
};

/// Tracker search over states (current chain point, surviving iterate set):
/// the verdict is affirmative exactly when no reachable state has an empty
/// survivor set. Survivor evolution is monotone, so only inclusion-minimal
/// survivor sets per chain point need expanding. Throws ResourceError past
/// the state budget.
ShadowingVerdict all_chains_shadowed(const System& sys, const Rational& delta,
                                     const Rational& eps);

/// Largest sweep delta at which every delta-chain is eps-shadowed, found by
/// bisection over the sweep values (valid by the delta-monotonicity of the
/// verdict); nullopt when even the smallest sweep value fails.
std::optional<Rational> finite_shadowing_profile(const System& sys, const Rational& eps);

/// Reference check: enumerate every delta-chain up to the given length and
/// test each with is_eps_shadowed.
bool shadowing_oracle(const System& sys, const Rational& delta, const Rational& eps,
                      int max_length);

/// Two-point discrete instance (identity map) with the drifting chain
/// u_j = chi{a} + (1/2 + j/k) chi{b}, j = 0..k/2-1; every link's Skorokhod
/// slack is exactly 1/k. Requires even k >= 8.
struct ExampleChain {
    System sys;
    FuzzyChain chain;  // metric = Skorokhod
};

ExampleChain example_discrete_chain(long long k);

/// Truncated dyadic line {0, 1, 2, ..., 2^n} with the halving map and the
/// drifting chain u_j = chi{0} + (1/2 + j/k) chi{2^(n-j)}; n = k/2 - 1.
ExampleChain example_connected_chain(long long k);

/// Axis-aligned block of candidate membership vectors, stored as closed
/// per-coordinate rational intervals, with the chain index that rules the
/// whole block out.
struct CandidateBox {
    std::vector<std::pair<Rational, Rational>> range;
    int violating_index = -1;
};

struct NonShadowingCertificate {
    bool certified = false;
    Rational eps0, grid_step, margin;
    long long candidates_covered = 0;
    std::vector<CandidateBox> boxes;
    std::optional<std::vector<Rational>> survivor;  // memberships of a candidate under margin
    std::optional<Rational> survivor_deviation;
    bool survivor_is_shadower = false;  // deviation strictly under eps0 itself
};

/// Certifies that no normal fuzzy set on the chain's space eps0-shadows the
/// chain: every candidate with memberships on the h-grid must deviate by at
/// least eps0 + h at some index. The h-margin plus the 1-Lipschitz dependence
/// of the endograph metric on memberships extends the verdict from the grid
/// to the whole continuum of candidates. Inconclusive when a grid candidate
/// stays under the margin.
NonShadowingCertificate certify_not_shadowed(const System& sys, const FuzzyChain& chain,
                                             const Rational& eps0, const Rational& grid_step);

/// Compares finite shadowing profiles of the base system, its hyperspace and
/// the m=2 supremum-metric grid at each eps; checks the grid-to-base
/// implication.
AnalysisReport shadowing_equivalence_harness(const System& sys,
                                             const std::vector<Rational>& eps_list);

/// For each delta builds an endograph chain between far-apart crisp sets and
/// attempts a non-shadowability certificate at eps0; inconclusive
/// certificates are reported as such, and a non-surjective or singleton
/// system reports its hypothesis as unmet.
AnalysisReport endograph_non_shadowing_harness(const System& sys, const Rational& eps0,
                                           const std::vector<Rational>& deltas);

}  // namespace fuzzhyper
