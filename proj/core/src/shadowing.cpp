#include "fuzzhyper/shadowing.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "fuzzhyper/budget.hpp"
#include "fuzzhyper/errors.hpp"
#include "fuzzhyper/instances.hpp"

namespace fuzzhyper {

std::optional<int> is_eps_shadowed(const System& sys, const std::vector<int>& seq,
                                   const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("shadowing needs eps > 0");
    if (seq.empty()) throw DomainError("shadowing needs a nonempty sequence");
    for (int x = 0; x < sys.size(); ++x) {
        int p = x;
        bool tracks = true;
        for (size_t j = 0; j < seq.size(); ++j) {
            if (!(sys.space->dist(p, seq[j]) < eps)) {
                tracks = false;
                break;
            }
            p = sys.apply(p);
        }
        if (tracks) return x;
    }
    return std::nullopt;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits(static_cast<size_t>((n + 63) / 64), 0); }
void bits_set(Bits& b, int i) { b[static_cast<size_t>(i) / 64] |= std::uint64_t(1) << (i % 64); }
bool bits_empty(const Bits& b) {
    for (std::uint64_t w : b)
        if (w) return false;
    return true;
}
bool bits_subset(const Bits& a, const Bits& b) {  // a subset of b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

struct BitsHash {
    size_t operator()(const std::pair<int, Bits>& key) const noexcept {
        size_t h = std::hash<int>{}(key.first);
        for (std::uint64_t w : key.second)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

ShadowingVerdict all_chains_shadowed(const System& sys, const Rational& delta,
                                     const Rational& eps) {
    if (delta.sign() <= 0 || eps.sign() <= 0) throw DomainError("need delta > 0 and eps > 0");
    const int n = sys.size();
    ChainGraph graph = chain_graph(sys, delta);
    std::vector<Bits> close(static_cast<size_t>(n), make_bits(n));  // close[y] = {v : d(v,y) < eps}
    for (int y = 0; y < n; ++y)
        for (int v = 0; v < n; ++v)
            if (sys.space->dist(v, y) < eps) bits_set(close[static_cast<size_t>(y)], v);

    struct State {
        int point;
        Bits survivors;
        int parent;  // index into states, -1 for roots
    };
    std::vector<State> states;
    std::unordered_map<std::pair<int, Bits>, int, BitsHash> seen;
    // Inclusion-minimal survivor sets per chain point; expanding supersets is
    // redundant because survivor evolution is monotone.
    std::vector<std::vector<Bits>> minimal(static_cast<size_t>(n));
    std::deque<int> queue;

    auto push_state = [&](int point, Bits survivors, int parent) {
        auto key = std::make_pair(point, survivors);
        if (seen.contains(key)) return;
        for (const Bits& kept : minimal[static_cast<size_t>(point)])
            if (bits_subset(kept, survivors)) return;
        std::erase_if(minimal[static_cast<size_t>(point)],
                      [&](const Bits& kept) { return bits_subset(survivors, kept); });
        minimal[static_cast<size_t>(point)].push_back(survivors);
        seen.emplace(std::move(key), static_cast<int>(states.size()));
        states.push_back({point, std::move(survivors), parent});
        queue.push_back(static_cast<int>(states.size()) - 1);
    };

    ShadowingVerdict verdict;
    for (int x0 = 0; x0 < n; ++x0) push_state(x0, close[static_cast<size_t>(x0)], -1);

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        if (states.size() > tracker_state_budget())
            throw ResourceError("tracker state budget exceeded (" +
                                std::to_string(states.size()) + " states)");
        const int x = states[static_cast<size_t>(id)].point;
        const Bits survivors = states[static_cast<size_t>(id)].survivors;  // copy: states grows
        for (int y : graph.succ[static_cast<size_t>(x)]) {
            Bits next = make_bits(n);
            for (int v = 0; v < n; ++v) {
                if (!(survivors[static_cast<size_t>(v) / 64] >> (v % 64) & 1)) continue;
                int fv = sys.apply(v);
                if (sys.space->dist(fv, y) < eps) bits_set(next, fv);
            }
            if (bits_empty(next)) {
                // Reconstruct the witness chain back through the parents.
                std::vector<int> points{y};
                for (int cur = id; cur != -1; cur = states[static_cast<size_t>(cur)].parent)
                    points.push_back(states[static_cast<size_t>(cur)].point);
                std::reverse(points.begin(), points.end());
                verdict.shadowed = false;
                verdict.counterexample = make_point_chain(sys, std::move(points), delta);
                verdict.states_explored = states.size();
                return verdict;
            }
            push_state(y, std::move(next), id);
        }
    }
    verdict.shadowed = true;
    verdict.states_explored = states.size();
    return verdict;
}

std::optional<Rational> finite_shadowing_profile(const System& sys, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("shadowing profile needs eps > 0");
    std::vector<Rational> sweep = sweep_deltas(sys);
    // The verdict is monotone: passing at delta passes below it. Bisect for
    // the largest passing sweep value.
    int lo = 0, hi = static_cast<int>(sweep.size()) - 1;
    if (all_chains_shadowed(sys, sweep[static_cast<size_t>(hi)], eps).shadowed)
        return sweep[static_cast<size_t>(hi)];
    if (!all_chains_shadowed(sys, sweep[0], eps).shadowed) return std::nullopt;
    // invariant: sweep[lo] passes, sweep[hi] fails
    while (hi - lo > 1) {
        int mid = (lo + hi) / 2;
        if (all_chains_shadowed(sys, sweep[static_cast<size_t>(mid)], eps).shadowed)
            lo = mid;
        else
            hi = mid;
    }
    return sweep[static_cast<size_t>(lo)];
}

bool shadowing_oracle(const System& sys, const Rational& delta, const Rational& eps,
                      int max_length) {
    if (delta.sign() <= 0 || eps.sign() <= 0) throw DomainError("need delta > 0 and eps > 0");
    const int n = sys.size();
    if (n > 20) throw ResourceError("oracle limited to 20 points");
    ChainGraph graph = chain_graph(sys, delta);
    std::vector<Mask> close(static_cast<size_t>(n), 0);
    for (int y = 0; y < n; ++y)
        for (int v = 0; v < n; ++v)
            if (sys.space->dist(v, y) < eps) close[static_cast<size_t>(y)] |= Mask(1) << v;

    // DFS over chain prefixes, carrying the surviving iterate set; a prefix
    // with an empty survivor set is a chain nobody eps-tracks. A chain that
    // revisits the same (point, survivors) configuration can be shortened by
    // cutting the loop, so only repeat-free traces are enumerated; that keeps
    // the search finite without missing any failing chain.
    struct Frame {
        int point;
        Mask survivors;
        int depth;
    };
    std::vector<std::pair<int, Mask>> trace;
    long long nodes = 0;
    for (int x0 = 0; x0 < n; ++x0) {
        std::vector<Frame> stack{{x0, close[static_cast<size_t>(x0)], 0}};
        trace.clear();
        while (!stack.empty()) {
            Frame frame = stack.back();
            stack.pop_back();
            if (++nodes > 100000000) throw ResourceError("oracle node budget exceeded");
            if (frame.survivors == 0) return false;
            if (frame.depth == max_length) continue;
            trace.resize(static_cast<size_t>(frame.depth));
            bool seen_before = false;
            for (const auto& [p, s] : trace)
                if (p == frame.point && s == frame.survivors) {
                    seen_before = true;
                    break;
                }
            if (seen_before) continue;
            trace.push_back({frame.point, frame.survivors});
            for (int y : graph.succ[static_cast<size_t>(frame.point)]) {
                Mask next = 0;
                Mask alive = frame.survivors;
                while (alive != 0) {
                    int v = mask_least(alive);
                    alive &= alive - 1;
                    int fv = sys.apply(v);
                    if (mask_contains(close[static_cast<size_t>(y)], fv)) next |= Mask(1) << fv;
                }
                stack.push_back({y, next, frame.depth + 1});
            }
        }
    }
    return true;
}

ExampleChain example_discrete_chain(long long k) {
    if (k < 8 || k % 2 != 0) throw DomainError("drifting chain needs even k >= 8");
    ExampleChain out;
    out.sys = make_identity2();
    const SpacePtr& space = out.sys.space;
    const long long n = k / 2 - 1;
    std::vector<StepFuzzySet> points;
    for (long long j = 0; j <= n; ++j) {
        std::vector<Rational> values{Rational(1), Rational(1, 2) + Rational(j, k)};
        points.push_back(StepFuzzySet::from_memberships(space, values));
    }
    out.chain = make_fuzzy_chain(out.sys, MetricKind::Skorokhod, std::move(points), Rational(2, k));
    return out;
}

ExampleChain example_connected_chain(long long k) {
    if (k < 8 || k % 2 != 0) throw DomainError("drifting chain needs even k >= 8");
    ExampleChain out;
    const long long n = k / 2 - 1;
    out.sys = make_dyadic_line(static_cast<int>(n));
    const SpacePtr& space = out.sys.space;
    // Points are labelled 0, 1, 2, ..., 2^n; index of 2^i is i + 1.
    std::vector<StepFuzzySet> points;
    for (long long j = 0; j <= n; ++j) {
        std::vector<Rational> values(static_cast<size_t>(space->size()), Rational(0));
        values[0] = Rational(1);
        values[static_cast<size_t>(n - j) + 1] = Rational(1, 2) + Rational(j, k);
        points.push_back(StepFuzzySet::from_memberships(space, values));
    }
    out.chain = make_fuzzy_chain(out.sys, MetricKind::Skorokhod, std::move(points), Rational(2, k));
    return out;
}

namespace {

// Endograph distance d_end(f^j(u), target) split into its two directed
// halves, evaluated on a membership vector. The forward half is
// nondecreasing and the backward half nonincreasing in every coordinate of
// u, which gives exact bounds over a box from its two corners.
struct DirectedEval {
    const System* sys;
    const StepFuzzySet* target;
    int iterations;

    std::vector<Rational> push_forward(std::vector<Rational> values) const {
        const int n = sys->size();
        for (int it = 0; it < iterations; ++it) {
            std::vector<Rational> next(static_cast<size_t>(n), Rational(0));
            for (int x = 0; x < n; ++x) {
                int fx = sys->apply(x);
                next[static_cast<size_t>(fx)] =
                    rat_max(next[static_cast<size_t>(fx)], values[static_cast<size_t>(x)]);
            }
            values = std::move(next);
        }
        return values;
    }

    Rational forward(const std::vector<Rational>& u_values) const {  // nondecreasing in u
        auto mu = push_forward(u_values);
        auto mv = target->memberships();
        return directed_half(mu, mv);
    }
    Rational backward(const std::vector<Rational>& u_values) const {  // nonincreasing in u
        auto mu = push_forward(u_values);
        auto mv = target->memberships();
        return directed_half(mv, mu);
    }

  private:
    Rational directed_half(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        const FiniteMetricSpace& space = *sys->space;
        Rational worst(0);
        for (int x = 0; x < space.size(); ++x) {
            std::optional<Rational> best;
            for (int y = 0; y < space.size(); ++y) {
                Rational cost = rat_max(space.dist(x, y),
                                        pos_part(a[static_cast<size_t>(x)] -
                                                 b[static_cast<size_t>(y)]));
                if (!best || cost < *best) best = cost;
            }
            worst = rat_max(worst, *best);
        }
        return worst;
    }
};

}  // namespace

NonShadowingCertificate certify_not_shadowed(const System& sys, const FuzzyChain& chain,
                                             const Rational& eps0, const Rational& grid_step) {
    if (eps0.sign() <= 0) throw DomainError("certificate needs eps0 > 0");
    if (grid_step.sign() <= 0 || grid_step > Rational(1) || grid_step.num() != 1)
        throw DomainError("grid step must be 1/h for a positive integer h");
    NonShadowingCertificate cert;
    cert.eps0 = eps0;
    cert.grid_step = grid_step;
    cert.margin = grid_step;
    const Rational threshold = eps0 + grid_step;
    const long long steps = grid_step.den();
    const int n = sys.size();

    std::vector<DirectedEval> evals;
    for (size_t j = 0; j < chain.points.size(); ++j)
        evals.push_back({&sys, &chain.points[j], static_cast<int>(j)});

    // Box search over grid membership vectors, one pass per choice of a
    // coordinate pinned at 1 (normality). Coordinates are integer multiples
    // of the grid step, stored as [lo, hi] integer intervals.
    struct IntBox {
        std::vector<std::pair<long long, long long>> range;
    };
    auto corner = [&](const IntBox& box, bool high) {
        std::vector<Rational> values;
        values.reserve(box.range.size());
        for (const auto& [lo, hi] : box.range) values.emplace_back(high ? hi : lo, steps);
        return values;
    };

    long long node_budget = static_cast<long long>(tracker_state_budget());
    for (int pinned = 0; pinned < n && !cert.survivor; ++pinned) {
        IntBox root;
        root.range.assign(static_cast<size_t>(n), {0, steps});
        root.range[static_cast<size_t>(pinned)] = {steps, steps};
        std::vector<IntBox> stack{root};
        while (!stack.empty() && !cert.survivor) {
            if (--node_budget < 0) throw ResourceError("certificate box budget exceeded");
            IntBox box = std::move(stack.back());
            stack.pop_back();
            // Lower bound of max(forward, backward) over the box, per index.
            int violating = -1;
            for (size_t j = 0; j < evals.size() && violating < 0; ++j) {
                Rational bound = rat_max(evals[j].forward(corner(box, false)),
                                         evals[j].backward(corner(box, true)));
                if (bound >= threshold) violating = static_cast<int>(j);
            }
            if (violating >= 0) {
                CandidateBox reported;
                long long covered = 1;
                for (const auto& [lo, hi] : box.range) {
                    reported.range.emplace_back(Rational(lo, steps), Rational(hi, steps));
                    covered *= (hi - lo + 1);
                }
                reported.violating_index = violating;
                cert.candidates_covered += covered;
                cert.boxes.push_back(std::move(reported));
                continue;
            }
            // Split the widest coordinate; a point box that no index rules
            // out is a surviving candidate.
            size_t widest = 0;
            long long width = 0;
            for (size_t c = 0; c < box.range.size(); ++c)
                if (box.range[c].second - box.range[c].first > width) {
                    width = box.range[c].second - box.range[c].first;
                    widest = c;
                }
            if (width == 0) {
                auto values = corner(box, false);
                auto deviation_of = [&](const std::vector<Rational>& candidate) {
                    Rational worst(0);
                    for (auto& eval : evals)
                        worst = rat_max(worst, rat_max(eval.forward(candidate),
                                                       eval.backward(candidate)));
                    return worst;
                };
                Rational deviation = deviation_of(values);
                // Greedy grid descent toward the strongest witness: coordinate
                // moves of one grid step, keeping normality.
                bool improved = true;
                while (improved && deviation.sign() > 0) {
                    improved = false;
                    for (size_t c = 0; c < values.size(); ++c) {
                        for (long long move : {-1LL, 1LL}) {
                            long long step = (values[c] * Rational(steps)).num() + move;
                            if (step < 0 || step > steps) continue;
                            std::vector<Rational> trial = values;
                            trial[c] = Rational(step, steps);
                            bool normal = false;
                            for (const Rational& t : trial) normal = normal || t == Rational(1);
                            if (!normal) continue;
                            Rational trial_dev = deviation_of(trial);
                            if (trial_dev < deviation) {
                                values = std::move(trial);
                                deviation = trial_dev;
                                improved = true;
                            }
                        }
                    }
                }
                cert.survivor = values;
                cert.survivor_deviation = deviation;
                cert.survivor_is_shadower = deviation < eps0;
                break;
            }
            long long mid = (box.range[widest].first + box.range[widest].second) / 2;
            IntBox lower = box, upper = box;
            lower.range[widest].second = mid;
            upper.range[widest].first = mid + 1;
            stack.push_back(std::move(lower));
            stack.push_back(std::move(upper));
        }
    }
    cert.certified = !cert.survivor.has_value();
    return cert;
}

AnalysisReport shadowing_equivalence_harness(const System& sys,
                                             const std::vector<Rational>& eps_list) {
    AnalysisReport report;
    report.suite = "shadowing-equivalence";
    report.instance = sys.space->set_label(sys.space->full_mask());
    std::optional<HyperSystem> hyper;
    std::optional<FuzzyGridSystem> grid;
    try {
        hyper = hyper_extend(sys);
        grid = fuzzy_grid(sys, 2, MetricKind::Sup);
    } catch (const ResourceError&) {
        report.partial = true;
    }
    for (const Rational& eps : eps_list) {
        auto base = finite_shadowing_profile(sys, eps);
        CheckResult row;
        row.name = "profiles agree @ eps=" + eps.str();
        std::string detail = "{\"base\":" + (base ? "\"" + base->str() + "\"" : "null");
        bool pass = true;
        if (hyper) {
            auto hyper_profile = finite_shadowing_profile(hyper->sys, eps);
            pass = pass && base.has_value() == hyper_profile.has_value();
            detail += ",\"hyper\":" + (hyper_profile ? "\"" + hyper_profile->str() + "\"" : "null");
        }
        if (grid) {
            auto grid_profile = finite_shadowing_profile(grid->sys, eps);
            // grid feasibility must push down to the base system
            pass = pass && (!grid_profile.has_value() || base.has_value());
            detail += ",\"fuzzy_sup_grid\":" +
                      (grid_profile ? "\"" + grid_profile->str() + "\"" : "null");
        }
        detail += "}";
        row.passed = pass;
        row.witness = detail;
        report.checks.push_back(std::move(row));
    }
    return report;
}

AnalysisReport endograph_non_shadowing_harness(const System& sys, const Rational& eps0,
                                           const std::vector<Rational>& deltas) {
    AnalysisReport report;
    report.suite = "endograph-non-shadowing";
    report.instance = sys.space->set_label(sys.space->full_mask());
    if (sys.size() < 2 || !sys.is_surjective()) {
        CheckResult row;
        row.name = "hypothesis";
        row.passed = true;
        row.witness = "{\"status\":\"hypothesis not met (needs a surjective map and >= 2 points)\"}";
        report.checks.push_back(std::move(row));
        return report;
    }
    // Far-apart crisp endpoints.
    int bx = 0, by = 1;
    for (int x = 0; x < sys.size(); ++x)
        for (int y = x + 1; y < sys.size(); ++y)
            if (sys.space->dist(x, y) > sys.space->dist(bx, by)) {
                bx = x;
                by = y;
            }
    StepFuzzySet u = StepFuzzySet::chi(sys.space, Mask(1) << bx);
    StepFuzzySet v = StepFuzzySet::chi(sys.space, Mask(1) << by);
    for (const Rational& delta : deltas) {
        CheckResult row;
        row.name = "delta=" + delta.str();
        const long long n_delta = delta.reciprocal().floor() + 1;
        FuzzyChain chain = endograph_chain(sys, u, v, delta, static_cast<int>(2 * n_delta));
        try {
            NonShadowingCertificate cert =
                certify_not_shadowed(sys, chain, eps0, Rational(1, 64));
            row.passed = cert.certified;
            row.witness = std::string("{\"certified\":") + (cert.certified ? "true" : "false") +
                          ",\"chain_length\":" + std::to_string(chain.length()) + "}";
        } catch (const ResourceError& e) {
            row.passed = false;
            row.witness = std::string("{\"status\":\"inconclusive: ") + e.what() + "\"}";
            report.partial = true;
        }
        report.checks.push_back(std::move(row));
    }
    return report;
}

}  // namespace fuzzhyper
