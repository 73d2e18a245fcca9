#include "fuzzhyper/fuzzy_metrics.hpp"

#include <algorithm>
#include <optional>

#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

namespace {

void require_metric_args(const StepFuzzySet& u, const StepFuzzySet& v) {
    if (!u.normal() || !v.normal())
        throw DomainError("fuzzy metrics are defined on normal fuzzy sets only");
    if (!(u.space() == v.space() || *u.space() == *v.space()))
        throw DomainError("fuzzy metric arguments live on different spaces");
}

// Directed endograph quantity with x restricted to `from_range` and y to
// `to_range` (whole space for d_end, supports for d_send).
Rational directed_endo(const FiniteMetricSpace& space, const std::vector<Rational>& mu,
                       const std::vector<Rational>& mv, Mask from_range, Mask to_range) {
    Rational worst(0);
    for (int x = 0; x < space.size(); ++x) {
        if (!mask_contains(from_range, x)) continue;
        std::optional<Rational> best;
        for (int y = 0; y < space.size(); ++y) {
            if (!mask_contains(to_range, y)) continue;
            Rational cost = rat_max(space.dist(x, y),
                                    pos_part(mu[static_cast<size_t>(x)] - mv[static_cast<size_t>(y)]));
            if (!best || cost < *best) {
                best = cost;
                if (best->is_zero()) break;
            }
        }
        worst = rat_max(worst, *best);
    }
    return worst;
}

}  // namespace

std::string metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Sup: return "inf";
        case MetricKind::Skorokhod: return "skorokhod";
        case MetricKind::Sendograph: return "send";
        case MetricKind::Endograph: return "end";
    }
    return "?";
}

MetricKind metric_from_name(const std::string& name) {
    if (name == "inf" || name == "sup") return MetricKind::Sup;
    if (name == "skorokhod" || name == "0") return MetricKind::Skorokhod;
    if (name == "send" || name == "sendograph") return MetricKind::Sendograph;
    if (name == "end" || name == "endograph") return MetricKind::Endograph;
    throw ParseError("unknown metric '" + name + "' (want inf|skorokhod|send|end)");
}

Rational d_inf(const StepFuzzySet& u, const StepFuzzySet& v) {
    require_metric_args(u, v);
    std::vector<Rational> merged = u.breakpoints();
    merged.insert(merged.end(), v.breakpoints().begin(), v.breakpoints().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    Rational best(0);
    for (const Rational& alpha : merged)
        best = rat_max(best, hausdorff(*u.space(), u.level(alpha), v.level(alpha)));
    return best;
}

Rational d_end(const StepFuzzySet& u, const StepFuzzySet& v) {
    require_metric_args(u, v);
    const FiniteMetricSpace& space = *u.space();
    Mask all = space.full_mask();
    auto mu = u.memberships();
    auto mv = v.memberships();
    return rat_max(directed_endo(space, mu, mv, all, all),
                   directed_endo(space, mv, mu, all, all));
}

Rational d_send(const StepFuzzySet& u, const StepFuzzySet& v) {
    require_metric_args(u, v);
    const FiniteMetricSpace& space = *u.space();
    auto mu = u.memberships();
    auto mv = v.memberships();
    return rat_max(directed_endo(space, mu, mv, u.support(), v.support()),
                   directed_endo(space, mv, mu, v.support(), u.support()));
}

namespace {

// Alignment feasibility for a fixed tolerance eps. The u-breakpoints pin the
// slot boundaries; each v-breakpoint b_j may be moved anywhere within
// [b_j - eps, b_j + eps], either strictly inside a slot or exactly onto a
// boundary (a diagonal handoff). Every level pair swept on the way must be
// within eps in Hausdorff distance. Cells are 1-based: (i, j) means the pair
// (U_i, V_j) is current.
bool alignment_feasible(const std::vector<Rational>& a, const std::vector<Rational>& b,
                        const std::vector<std::vector<Rational>>& h, const Rational& eps) {
    const size_t m = a.size(), n = b.size();
    auto ok = [&](size_t i, size_t j) { return h[i - 1][j - 1] <= eps; };
    std::vector<std::vector<char>> reach(m + 1, std::vector<char>(n + 1, 0));
    if (!ok(1, 1)) return false;
    reach[1][1] = 1;
    for (size_t layer = 2; layer <= m + n; ++layer) {
        for (size_t i = 1; i <= m; ++i) {
            size_t j = layer - i;
            if (j < 1 || j > n || !reach[i][j]) continue;
            // Pass slot boundary a_i with no v-breakpoint there.
            if (i < m && ok(i + 1, j)) reach[i + 1][j] = 1;
            if (j < n) {
                const Rational& bj = b[j - 1];
                // Fire b_j strictly inside slot i: window must overlap the
                // open interior (a_{i-1}, a_i).
                Rational lo = bj - eps, hi = bj + eps;
                Rational slot_lo = i >= 2 ? a[i - 2] : Rational(0);
                if (ok(i, j + 1) && lo < a[i - 1] && hi > slot_lo) reach[i][j + 1] = 1;
                // Fire b_j exactly on boundary a_i (not the top boundary,
                // which is reserved for b_n = 1).
                if (i < m && ok(i + 1, j + 1) && (a[i - 1] - bj).abs() <= eps)
                    reach[i + 1][j + 1] = 1;
            }
        }
    }
    return reach[m][n];
}

}  // namespace

Rational d_skorokhod(const StepFuzzySet& u, const StepFuzzySet& v) {
    require_metric_args(u, v);
    const FiniteMetricSpace& space = *u.space();
    const auto& a = u.breakpoints();
    const auto& b = v.breakpoints();
    const size_t m = a.size(), n = b.size();

    std::vector<std::vector<Rational>> h(m, std::vector<Rational>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) h[i][j] = hausdorff(space, u.levels()[i], v.levels()[j]);

    // Feasibility can only flip at a level distance or at a breakpoint
    // difference, so the infimum is the left endpoint of the first feasible
    // gap between consecutive candidates (probed at midpoints, where no
    // boundary ties can occur).
    std::vector<Rational> candidates;
    candidates.push_back(Rational(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            candidates.push_back(h[i][j]);
            candidates.push_back((a[i] - b[j]).abs());
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    candidates.push_back(candidates.back() + Rational(1));

    for (size_t c = 0; c + 1 < candidates.size(); ++c) {
        Rational mid = (candidates[c] + candidates[c + 1]) / Rational(2);
        if (alignment_feasible(a, b, h, mid)) return candidates[c];
    }
    return candidates[candidates.size() - 2];  // unreachable: top candidate always feasible
}

Rational fuzzy_distance(MetricKind kind, const StepFuzzySet& u, const StepFuzzySet& v) {
    switch (kind) {
        case MetricKind::Sup: return d_inf(u, v);
        case MetricKind::Skorokhod: return d_skorokhod(u, v);
        case MetricKind::Sendograph: return d_send(u, v);
        case MetricKind::Endograph: return d_end(u, v);
    }
    throw DomainError("unknown metric kind");
}

StepFuzzySet perturb_in_ball(const StepFuzzySet& u, const Rational& eps, MetricKind kind) {
    if (!u.normal()) throw DomainError("perturbation needs a normal fuzzy set");
    if (eps.sign() <= 0) throw DomainError("perturbation needs eps > 0");
    const SpacePtr& space = u.space();
    const int n = space->size();
    auto verified = [&](const StepFuzzySet& v) {
        return !(v == u) && fuzzy_distance(kind, u, v) < eps;
    };

    if (kind == MetricKind::Endograph) {
        if (n == 1) throw NoWitness("endograph ball of a singleton space contains only u");
        Rational delta = rat_min(eps, Rational(1)) / Rational(2);
        Mask full = space->full_mask();
        if (u.core() != full) {
            // Bump: raise the least point outside the core by delta.
            int x = mask_least(full & ~u.core());
            Rational alpha = rat_min(u.membership(x) + delta, Rational(1));
            StepFuzzySet v =
                fuzzy_max(u, fuzzy_scale(alpha, StepFuzzySet::chi(space, Mask(1) << x)));
            if (verified(v)) return v;
        } else {
            // Notch: lower the least point of the (full) core by delta.
            int x = mask_least(u.core());
            auto values = u.memberships();
            values[static_cast<size_t>(x)] = Rational(1) - delta;
            StepFuzzySet v = StepFuzzySet::from_memberships(space, values);
            if (verified(v)) return v;
        }
        throw NoWitness("could not verify an endograph witness");
    }

    if (kind == MetricKind::Sup) {
        // Needs a core point with a distinct neighbour within eps: bump the
        // neighbour to 1 when it is outside the core, carve the core point
        // otherwise.
        for (int x = 0; x < n; ++x) {
            if (!mask_contains(u.core(), x)) continue;
            for (int y = 0; y < n; ++y) {
                if (y == x || !(space->dist(x, y) < eps)) continue;
                StepFuzzySet v =
                    mask_contains(u.core(), y)
                        ? StepFuzzySet::from_levels(
                              space, u.breakpoints(),
                              [&] {
                                  std::vector<Mask> lv = u.levels();
                                  for (Mask& mlevel : lv) mlevel &= ~(Mask(1) << x);
                                  return lv;
                              }())
                        : fuzzy_max(u, StepFuzzySet::chi(space, Mask(1) << y));
                if (verified(v)) return v;
            }
        }
        throw NoWitness("no core point has a distinct neighbour within eps");
    }
    throw DomainError("perturbation witnesses exist for the supremum and endograph metrics only");
}

}  // namespace fuzzhyper
