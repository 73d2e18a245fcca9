#include "fuzzhyper/chains.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "fuzzhyper/budget.hpp"
#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

namespace {

void require_positive_delta(const Rational& delta) {
    if (delta.sign() <= 0) throw DomainError("chain analysis needs delta > 0");
}

/// Strongly connected components by iterative Tarjan; returns component ids.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& succ, int& count) {
    const int n = static_cast<int>(succ.size());
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        comp(static_cast<size_t>(n), -1);
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    int next_index = 0;
    count = 0;

    struct Frame {
        int v;
        size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = 1;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            int v = frame.v;
            if (frame.child < succ[static_cast<size_t>(v)].size()) {
                int w = succ[static_cast<size_t>(v)][frame.child++];
                if (index[static_cast<size_t>(w)] == -1) {
                    index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(v)] =
                        std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
                }
            } else {
                if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = 0;
                        comp[static_cast<size_t>(w)] = count;
                        if (w == v) break;
                    }
                    ++count;
                }
                frames.pop_back();
                if (!frames.empty())
                    low[static_cast<size_t>(frames.back().v)] = std::min(
                        low[static_cast<size_t>(frames.back().v)], low[static_cast<size_t>(v)]);
            }
        }
    }
    return comp;
}

}  // namespace

ChainGraph chain_graph(const System& sys, const Rational& delta) {
    require_positive_delta(delta);
    ChainGraph graph;
    graph.delta = delta;
    const int n = sys.size();
    graph.succ.resize(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        int fx = sys.apply(x);
        for (int y = 0; y < n; ++y)
            if (sys.space->dist(fx, y) < delta) graph.succ[static_cast<size_t>(x)].push_back(y);
    }
    return graph;
}

std::vector<Rational> critical_deltas(const System& sys) {
    std::vector<Rational> values;
    const int n = sys.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) values.push_back(sys.space->dist(sys.apply(x), y));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    values.push_back(values.back() + Rational(1));
    return values;
}

std::vector<Rational> sweep_deltas(const System& sys) {
    std::vector<Rational> criticals = critical_deltas(sys);
    std::vector<Rational> mids;
    for (size_t i = 0; i + 1 < criticals.size(); ++i)
        mids.push_back((criticals[i] + criticals[i + 1]) / Rational(2));
    mids.push_back(criticals.back());
    return mids;
}

PointChain make_point_chain(const System& sys, std::vector<int> points, const Rational& delta) {
    require_positive_delta(delta);
    if (points.size() < 2) throw DomainError("a chain needs length >= 1");
    PointChain chain;
    chain.delta = delta;
    chain.points = std::move(points);
    for (size_t j = 0; j + 1 < chain.points.size(); ++j) {
        Rational slack = sys.space->dist(sys.apply(chain.points[j]), chain.points[j + 1]);
        if (!(slack < delta)) throw DomainError("chain link slack " + slack.str() + " >= delta");
        chain.slacks.push_back(std::move(slack));
    }
    return chain;
}

RecurrenceVerdict chain_recurrent_at(const System& sys, const Rational& delta) {
    require_positive_delta(delta);
    RecurrenceVerdict verdict;
    verdict.recurrent = true;
    verdict.cycles.resize(static_cast<size_t>(sys.size()));
    for (int x = 0; x < sys.size(); ++x) {
        auto cycle = find_chain(sys, x, x, delta);
        if (cycle) {
            verdict.cycles[static_cast<size_t>(x)] = std::move(cycle);
        } else {
            verdict.recurrent = false;
            verdict.failing.push_back(x);
        }
    }
    return verdict;
}

TransitivityVerdict chain_transitive_at(const System& sys, const Rational& delta) {
    ChainGraph graph = chain_graph(sys, delta);
    const int n = sys.size();
    TransitivityVerdict verdict;
    // Strong connectivity; every vertex has the out-edge x -> f(x), so paths
    // of length >= 1 exist between all pairs once the graph is strongly
    // connected.
    int count = 0;
    std::vector<int> comp = scc_ids(graph.succ, count);
    if (count == 1) {
        verdict.transitive = true;
        return verdict;
    }
    verdict.transitive = false;
    // Witness: a pair in different components with no path; pick any pair in
    // distinct components such that the second is unreachable.
    for (int x = 0; x < n && !verdict.witness; ++x) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::deque<int> queue{x};
        seen[static_cast<size_t>(x)] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : graph.succ[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
        for (int y = 0; y < n; ++y)
            if (!seen[static_cast<size_t>(y)]) {
                verdict.witness = {x, y};
                break;
            }
    }
    return verdict;
}

MixingVerdict chain_mixing_at(const System& sys, const Rational& delta) {
    MixingVerdict verdict;
    TransitivityVerdict transitivity = chain_transitive_at(sys, delta);
    verdict.transitive = transitivity.transitive;
    if (!verdict.transitive) return verdict;
    ChainGraph graph = chain_graph(sys, delta);
    const int n = sys.size();
    // Period of a strongly connected graph: gcd over edges of
    // level(u) + 1 - level(v) for any BFS levelling.
    std::vector<long long> level(static_cast<size_t>(n), -1);
    std::deque<int> queue{0};
    level[0] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : graph.succ[static_cast<size_t>(v)])
            if (level[static_cast<size_t>(w)] < 0) {
                level[static_cast<size_t>(w)] = level[static_cast<size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    long long g = 0;
    for (int v = 0; v < n; ++v)
        for (int w : graph.succ[static_cast<size_t>(v)])
            g = std::gcd(g, level[static_cast<size_t>(v)] + 1 - level[static_cast<size_t>(w)]);
    verdict.period = g == 0 ? 1 : std::llabs(g);
    verdict.mixing = verdict.period == 1;
    return verdict;
}

bool chain_mixing_oracle(const System& sys, const Rational& delta) {
    ChainGraph graph = chain_graph(sys, delta);
    const int n = sys.size();
    // A^t all-ones for some t is exactly primitivity (= strong connectivity
    // plus aperiodicity); for a primitive matrix it holds for every
    // t >= (n-1)^2 + 1, and for an imprimitive one for no t at all. Checking
    // a full window past the bound keeps the test shape "every length in
    // [n0, n0 + n^2] admits a chain".
    const int start = (n - 1) * (n - 1) + 1;
    const int window = n * n;
    std::vector<char> reach(static_cast<size_t>(n) * n, 0), next(reach.size(), 0);
    for (int i = 0; i < n; ++i) reach[static_cast<size_t>(i) * n + i] = 1;  // length 0
    for (int t = 1; t <= start + window; ++t) {
        std::fill(next.begin(), next.end(), 0);
        for (int x = 0; x < n; ++x)
            for (int mid = 0; mid < n; ++mid) {
                if (!reach[static_cast<size_t>(x) * n + mid]) continue;
                for (int y : graph.succ[static_cast<size_t>(mid)])
                    next[static_cast<size_t>(x) * n + y] = 1;
            }
        reach.swap(next);
        if (t >= start) {
            for (char r : reach)
                if (!r) return false;
        }
    }
    return true;
}

std::optional<PointChain> find_chain(const System& sys, int x, int y, const Rational& delta,
                                     std::optional<int> length) {
    ChainGraph graph = chain_graph(sys, delta);
    const int n = sys.size();
    if (length) {
        if (*length < 1) throw DomainError("chain length must be >= 1");
        // reachable-in-exactly-j table with predecessor reconstruction
        std::vector<std::vector<int>> pred(static_cast<size_t>(*length) + 1,
                                           std::vector<int>(static_cast<size_t>(n), -2));
        pred[0][static_cast<size_t>(x)] = -1;
        for (int j = 0; j < *length; ++j)
            for (int v = 0; v < n; ++v) {
                if (pred[static_cast<size_t>(j)][static_cast<size_t>(v)] == -2) continue;
                for (int w : graph.succ[static_cast<size_t>(v)])
                    if (pred[static_cast<size_t>(j) + 1][static_cast<size_t>(w)] == -2)
                        pred[static_cast<size_t>(j) + 1][static_cast<size_t>(w)] = v;
            }
        if (pred[static_cast<size_t>(*length)][static_cast<size_t>(y)] == -2) return std::nullopt;
        std::vector<int> points(static_cast<size_t>(*length) + 1);
        int cur = y;
        for (int j = *length; j >= 0; --j) {
            points[static_cast<size_t>(j)] = cur;
            cur = pred[static_cast<size_t>(j)][static_cast<size_t>(cur)];
        }
        return make_point_chain(sys, std::move(points), delta);
    }
    // BFS over at least one edge.
    std::vector<int> parent(static_cast<size_t>(n), -2);
    std::deque<int> queue;
    for (int w : graph.succ[static_cast<size_t>(x)])
        if (parent[static_cast<size_t>(w)] == -2) {
            parent[static_cast<size_t>(w)] = x;
            queue.push_back(w);
        }
    if (parent[static_cast<size_t>(y)] == -2) {
        bool found = false;
        while (!queue.empty() && !found) {
            int v = queue.front();
            queue.pop_front();
            for (int w : graph.succ[static_cast<size_t>(v)])
                if (parent[static_cast<size_t>(w)] == -2) {
                    parent[static_cast<size_t>(w)] = v;
                    if (w == y) {
                        found = true;
                        break;
                    }
                    queue.push_back(w);
                }
        }
        if (!found) return std::nullopt;
    }
    std::vector<int> reversed{y};
    int cur = y;
    while (cur != x || reversed.size() == 1) {
        cur = parent[static_cast<size_t>(cur)];
        reversed.push_back(cur);
        if (cur == x) break;
    }
    std::reverse(reversed.begin(), reversed.end());
    return make_point_chain(sys, std::move(reversed), delta);
}

SetChain make_set_chain(const System& sys, std::vector<Mask> sets, const Rational& delta) {
    require_positive_delta(delta);
    if (sets.size() < 2) throw DomainError("a set chain needs length >= 1");
    SetChain chain;
    chain.delta = delta;
    chain.sets = std::move(sets);
    for (size_t j = 0; j + 1 < chain.sets.size(); ++j) {
        Rational slack =
            hausdorff(*sys.space, sys.image_mask(chain.sets[j]), chain.sets[j + 1]);
        if (!(slack < delta)) throw DomainError("set chain slack " + slack.str() + " >= delta");
        chain.slacks.push_back(std::move(slack));
    }
    return chain;
}

SetChain lift_chain_to_hyper(const System& sys, const std::vector<PointChain>& chains) {
    if (chains.empty()) throw DomainError("lift needs at least one chain");
    const size_t len = chains.front().points.size();
    const Rational delta = chains.front().delta;
    for (const auto& chain : chains) {
        if (chain.points.size() != len) throw DomainError("lifted chains must share their length");
        if (chain.delta != delta) throw DomainError("lifted chains must share delta");
    }
    std::vector<Mask> sets(len, 0);
    for (const auto& chain : chains)
        for (size_t j = 0; j < len; ++j) sets[j] |= Mask(1) << chain.points[j];
    return make_set_chain(sys, std::move(sets), delta);
}

FuzzyChain make_fuzzy_chain(const System& sys, MetricKind metric,
                            std::vector<StepFuzzySet> points, const Rational& delta) {
    require_positive_delta(delta);
    if (points.size() < 2) throw DomainError("a fuzzy chain needs length >= 1");
    FuzzyChain chain;
    chain.delta = delta;
    chain.metric = metric;
    chain.points = std::move(points);
    for (size_t j = 0; j + 1 < chain.points.size(); ++j) {
        Rational slack =
            fuzzy_distance(metric, zadeh_extend(sys, chain.points[j]), chain.points[j + 1]);
        if (!(slack < delta)) throw DomainError("fuzzy chain slack " + slack.str() + " >= delta");
        chain.slacks.push_back(std::move(slack));
    }
    return chain;
}

FuzzyChain lift_chain_to_fuzzy(const System& sys, const StepFuzzySet& u, const StepFuzzySet& v,
                               const std::vector<SetChain>& hyper_chains,
                               const std::vector<Rational>& breakpoints, const Rational& delta) {
    require_positive_delta(delta);
    if (!u.normal() || !v.normal()) throw DomainError("lift endpoints must be normal");
    if (hyper_chains.size() != breakpoints.size())
        throw DomainError("one hyper chain per breakpoint required");
    if (hyper_chains.empty()) throw DomainError("lift needs at least one breakpoint");
    const Rational half = delta / Rational(2);
    const size_t len = hyper_chains.front().sets.size();
    for (size_t l = 0; l < hyper_chains.size(); ++l) {
        const SetChain& chain = hyper_chains[l];
        if (chain.sets.size() != len) throw DomainError("hyper chains must share their length");
        for (const Rational& slack : chain.slacks)
            if (!(slack < half)) throw DomainError("hyper chain slack must stay under delta/2");
        if (chain.sets.front() != u.level(breakpoints[l]) ||
            chain.sets.back() != v.level(breakpoints[l]))
            throw DomainError("hyper chain endpoints misaligned with the level partition");
    }
    std::vector<StepFuzzySet> points;
    points.reserve(len);
    points.push_back(u);
    for (size_t j = 1; j + 1 < len; ++j) {
        StepFuzzySet stacked = StepFuzzySet::zero(u.space());
        for (size_t l = 0; l < hyper_chains.size(); ++l)
            stacked = fuzzy_max(stacked, fuzzy_scale(breakpoints[l],
                                                     StepFuzzySet::chi(u.space(),
                                                                       hyper_chains[l].sets[j])));
        points.push_back(std::move(stacked));
    }
    points.push_back(v);
    return make_fuzzy_chain(sys, MetricKind::Sup, std::move(points), delta);
}

SetChain project_fuzzy_chain_supports(const System& sys, const FuzzyChain& chain) {
    std::vector<Mask> supports;
    supports.reserve(chain.points.size());
    for (const auto& point : chain.points) supports.push_back(point.support());
    return make_set_chain(sys, std::move(supports), chain.delta);
}

FuzzyChain endograph_chain(const System& sys, const StepFuzzySet& u, const StepFuzzySet& v,
                           const Rational& delta, int n) {
    require_positive_delta(delta);
    if (!u.normal() || !v.normal()) throw DomainError("endograph chain endpoints must be normal");
    if (!sys.is_surjective()) throw DomainError("endograph chain needs a surjective map");
    const long long n_delta = delta.reciprocal().floor() + 1;
    const Rational eps(1, n_delta);
    if (n < 2 * n_delta)
        throw DomainError("endograph chain needs length n >= " + std::to_string(2 * n_delta));

    // Exact n-step preimage of v (maps on finite spaces are onto iff
    // bijective, so preimages are exact and the chain ends at v itself).
    StepFuzzySet w = v;
    {
        std::vector<int> inverse = sys.inverse_permutation();
        System backwards(sys.space, inverse);
        for (int i = 0; i < n; ++i) w = zadeh_extend(backwards, w);
    }

    const int x0 = mask_least(u.core());
    std::vector<StepFuzzySet> points;
    points.reserve(static_cast<size_t>(n) + 1);
    StepFuzzySet fu = u, fw = w;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            fu = zadeh_extend(sys, fu);
            fw = zadeh_extend(sys, fw);
        }
        StepFuzzySet point;
        Mask xj = Mask(1) << sys.iterate(x0, j);
        if (j <= n_delta) {
            Rational fade = Rational(1) - Rational(j) * eps;
            point = fuzzy_max(StepFuzzySet::chi(sys.space, xj),
                              fuzzy_max(fuzzy_scale(fade, fu), fuzzy_scale(Rational(j) * eps, fw)));
        } else if (j <= 2 * n_delta) {
            Rational fade = Rational(1) - Rational(j - n_delta) * eps;
            point = fuzzy_max(fw, fuzzy_scale(fade, StepFuzzySet::chi(sys.space, xj)));
        } else {
            point = fw;
        }
        points.push_back(std::move(point));
    }
    points.back() = v;  // exact preimage makes this a no-op beyond canonical form
    return make_fuzzy_chain(sys, MetricKind::Endograph, std::move(points), delta);
}

namespace {

std::string chain_row_json(const Rational& delta, const RecurrenceVerdict& rec,
                           const TransitivityVerdict& trans, const MixingVerdict& mix,
                           const FiniteMetricSpace& space) {
    std::string witness = "null";
    if (!trans.transitive && trans.witness) {
        witness = "[\"" + space.label(trans.witness->first) + "\",\"" +
                  space.label(trans.witness->second) + "\"]";
    } else if (!rec.recurrent && !rec.failing.empty()) {
        witness = "\"" + space.label(rec.failing.front()) + "\"";
    }
    return std::string("{\"delta\":\"") + delta.str() + "\",\"recurrent\":" +
           (rec.recurrent ? "true" : "false") + ",\"transitive\":" +
           (trans.transitive ? "true" : "false") + ",\"mixing\":" +
           (mix.mixing ? "true" : "false") + ",\"witness\":" + witness + "}";
}

void profile_system(const System& sys, const std::string& tag, AnalysisReport& report) {
    for (const Rational& delta : sweep_deltas(sys)) {
        RecurrenceVerdict rec = chain_recurrent_at(sys, delta);
        TransitivityVerdict trans = chain_transitive_at(sys, delta);
        MixingVerdict mix = chain_mixing_at(sys, delta);
        CheckResult row;
        row.name = tag + " @ delta=" + delta.str();
        row.passed = rec.recurrent && trans.transitive && mix.mixing;
        row.witness = chain_row_json(delta, rec, trans, mix, *sys.space);
        report.checks.push_back(std::move(row));
    }
}

}  // namespace

AnalysisReport chain_profile(const System& sys, const ChainProfileOptions& options) {
    AnalysisReport report;
    report.suite = "chain-profile";
    report.instance = sys.space->set_label(sys.space->full_mask());
    profile_system(sys, "base", report);
    for (int arity = 2; arity <= options.max_product_arity; ++arity) {
        try {
            profile_system(product_system(sys, arity), "product^" + std::to_string(arity), report);
        } catch (const ResourceError&) {
            report.partial = true;
        }
    }
    if (options.include_hyper) {
        try {
            profile_system(hyper_extend(sys).sys, "hyper", report);
        } catch (const ResourceError&) {
            report.partial = true;
        }
    }
    for (const auto& [resolution, metric] : options.fuzzy_grids) {
        try {
            profile_system(fuzzy_grid(sys, resolution, metric).sys,
                           "fuzzy-grid[m=" + std::to_string(resolution) +
                               ", metric=" + metric_name(metric) + "]",
                           report);
        } catch (const ResourceError&) {
            report.partial = true;
        }
    }
    return report;
}

}  // namespace fuzzhyper
