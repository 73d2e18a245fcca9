#include "fuzzhyper/fuzzy_set.hpp"

#include <algorithm>

#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

namespace {

void require_same_space(const StepFuzzySet& u, const StepFuzzySet& v) {
    if (u.space() == v.space()) return;
    if (u.space() && v.space() && *u.space() == *v.space()) return;
    throw DomainError("fuzzy sets live on different spaces");
}

}  // namespace

StepFuzzySet StepFuzzySet::from_levels(SpacePtr space, std::vector<Rational> breakpoints,
                                       std::vector<Mask> levels) {
    if (!space) throw DomainError("fuzzy set needs a space");
    if (breakpoints.size() != levels.size()) throw DomainError("breakpoint/level count mismatch");
    for (size_t l = 0; l < breakpoints.size(); ++l) {
        if (breakpoints[l].sign() <= 0 || breakpoints[l] > Rational(1))
            throw DomainError("breakpoints must lie in (0,1]");
        if (l > 0 && !(breakpoints[l - 1] < breakpoints[l]))
            throw DomainError("breakpoints must be strictly increasing");
        if (l > 0 && (levels[l] & ~levels[l - 1]) != 0)
            throw DomainError("levels must be nested nonincreasing");
    }
    // Drop empty top levels, then merge runs of equal levels keeping the
    // highest breakpoint of each run.
    while (!levels.empty() && levels.back() == 0) {
        levels.pop_back();
        breakpoints.pop_back();
    }
    std::vector<Rational> bp;
    std::vector<Mask> lv;
    for (size_t l = 0; l < levels.size(); ++l) {
        if (!lv.empty() && lv.back() == levels[l]) {
            bp.back() = breakpoints[l];
        } else {
            bp.push_back(breakpoints[l]);
            lv.push_back(levels[l]);
        }
    }
    StepFuzzySet u;
    u.space_ = std::move(space);
    u.breakpoints_ = std::move(bp);
    u.levels_ = std::move(lv);
    return u;
}

StepFuzzySet StepFuzzySet::from_memberships(SpacePtr space, const std::vector<Rational>& values) {
    if (!space) throw DomainError("fuzzy set needs a space");
    if (values.size() != static_cast<size_t>(space->size()))
        throw DomainError("membership vector size mismatch");
    std::vector<Rational> distinct;
    for (const Rational& v : values) {
        if (v.sign() < 0 || v > Rational(1)) throw DomainError("memberships must lie in [0,1]");
        if (v.sign() > 0) distinct.push_back(v);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<Mask> levels;
    for (const Rational& alpha : distinct) {
        Mask m = 0;
        for (size_t x = 0; x < values.size(); ++x)
            if (values[x] >= alpha) m |= Mask(1) << x;
        levels.push_back(m);
    }
    return from_levels(std::move(space), std::move(distinct), std::move(levels));
}

StepFuzzySet StepFuzzySet::chi(SpacePtr space, Mask set) {
    if (set == 0) throw DomainError("characteristic function of the empty set is not normal");
    return from_levels(std::move(space), {Rational(1)}, {set});
}

StepFuzzySet StepFuzzySet::zero(SpacePtr space) {
    if (!space) throw DomainError("fuzzy set needs a space");
    StepFuzzySet u;
    u.space_ = std::move(space);
    return u;
}

Mask StepFuzzySet::level(const Rational& alpha) const {
    if (alpha.sign() < 0 || alpha > Rational(1)) throw DomainError("level needs alpha in [0,1]");
    if (levels_.empty()) return 0;
    if (alpha.is_zero()) return levels_.front();
    for (size_t l = 0; l < breakpoints_.size(); ++l)
        if (breakpoints_[l] >= alpha) return levels_[l];
    return 0;
}

Mask StepFuzzySet::core() const {
    return normal() ? levels_.back() : 0;
}

Rational StepFuzzySet::membership(int point) const {
    for (size_t l = levels_.size(); l-- > 0;)
        if (mask_contains(levels_[l], point)) return breakpoints_[l];
    return Rational(0);
}

std::vector<Rational> StepFuzzySet::memberships() const {
    std::vector<Rational> values(static_cast<size_t>(space_->size()), Rational(0));
    for (size_t l = 0; l < levels_.size(); ++l) {
        Mask m = levels_[l];
        while (m != 0) {
            int x = mask_least(m);
            m &= m - 1;
            values[static_cast<size_t>(x)] = breakpoints_[l];
        }
    }
    return values;
}

bool StepFuzzySet::operator==(const StepFuzzySet& other) const {
    if (!space_ || !other.space_) return space_ == other.space_;
    if (!(space_ == other.space_ || *space_ == *other.space_)) return false;
    return breakpoints_ == other.breakpoints_ && levels_ == other.levels_;
}

std::string StepFuzzySet::str() const {
    auto values = memberships();
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].str();
    }
    out += "]";
    return out;
}

StepFuzzySet fuzzy_scale(const Rational& beta, const StepFuzzySet& u) {
    if (beta.sign() < 0 || beta > Rational(1)) throw DomainError("scale factor must be in [0,1]");
    if (beta.is_zero() || u.is_zero()) return StepFuzzySet::zero(u.space());
    std::vector<Rational> bp;
    bp.reserve(u.breakpoints().size());
    for (const Rational& a : u.breakpoints()) bp.push_back(a * beta);
    return StepFuzzySet::from_levels(u.space(), std::move(bp), u.levels());
}

StepFuzzySet fuzzy_max(const StepFuzzySet& u, const StepFuzzySet& v) {
    require_same_space(u, v);
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    std::vector<Rational> merged = u.breakpoints();
    merged.insert(merged.end(), v.breakpoints().begin(), v.breakpoints().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<Mask> levels;
    levels.reserve(merged.size());
    for (const Rational& alpha : merged) levels.push_back(u.level(alpha) | v.level(alpha));
    return StepFuzzySet::from_levels(u.space(), std::move(merged), std::move(levels));
}

StepFuzzySet zadeh_extend(const System& f, const StepFuzzySet& u) {
    if (!(f.space == u.space() || *f.space == *u.space()))
        throw DomainError("map and fuzzy set live on different spaces");
    if (u.is_zero()) return u;
    std::vector<Mask> levels;
    levels.reserve(u.levels().size());
    for (Mask m : u.levels()) levels.push_back(f.image_mask(m));
    return StepFuzzySet::from_levels(u.space(), u.breakpoints(), std::move(levels));
}

Reparam::Reparam(std::vector<std::pair<Rational, Rational>> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw DomainError("reparametrization needs at least two knots");
    if (knots_.front() != std::pair{Rational(0), Rational(0)} ||
        knots_.back() != std::pair{Rational(1), Rational(1)})
        throw DomainError("reparametrization must fix 0 and 1");
    for (size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i - 1].first < knots_[i].first && knots_[i - 1].second < knots_[i].second))
            throw DomainError("reparametrization knots must be strictly increasing");
}

Reparam Reparam::identity() {
    return Reparam({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

Rational Reparam::apply(const Rational& alpha) const {
    if (alpha.sign() < 0 || alpha > Rational(1))
        throw DomainError("reparametrization argument must be in [0,1]");
    for (size_t i = 1; i < knots_.size(); ++i) {
        if (alpha <= knots_[i].first) {
            const auto& [x0, y0] = knots_[i - 1];
            const auto& [x1, y1] = knots_[i];
            return y0 + (alpha - x0) * (y1 - y0) / (x1 - x0);
        }
    }
    return Rational(1);
}

Rational Reparam::sup_deviation() const {
    Rational best(0);
    for (const auto& [x, y] : knots_) best = rat_max(best, (y - x).abs());
    return best;
}

Reparam make_xi_k(long long k) {
    if (k <= 2) throw DomainError("xi_k needs k > 2");
    return Reparam({{Rational(0), Rational(0)},
                    {Rational(1, 2) - Rational(1, k), Rational(1, 2)},
                    {Rational(1), Rational(1)}});
}

StepFuzzySet reparam_apply(const Reparam& xi, const StepFuzzySet& v) {
    if (v.is_zero()) return v;
    std::vector<Rational> bp;
    bp.reserve(v.breakpoints().size());
    for (const Rational& a : v.breakpoints()) bp.push_back(xi.apply(a));
    return StepFuzzySet::from_levels(v.space(), std::move(bp), v.levels());
}

std::vector<Rational> canonical_partition(const StepFuzzySet& u, const Rational& eps) {
    if (!u.normal()) throw DomainError("canonical partition needs a normal fuzzy set");
    if (eps.sign() <= 0) throw DomainError("canonical partition needs eps > 0");
    std::vector<Rational> out;
    out.push_back(Rational(0));
    for (const Rational& a : u.breakpoints()) out.push_back(a);
    return out;
}

StepFuzzySet path_sample(const StepFuzzySet& u, const StepFuzzySet& v, const Rational& t) {
    require_same_space(u, v);
    if (!u.normal() || !v.normal()) throw DomainError("path endpoints must be normal");
    if (t.sign() < 0 || t > Rational(1)) throw DomainError("path parameter must be in [0,1]");
    const SpacePtr& space = u.space();
    Mask x = Mask(1) << mask_least(u.core());
    Mask y = Mask(1) << mask_least(v.core());
    StepFuzzySet chix = StepFuzzySet::chi(space, x);
    StepFuzzySet chiy = StepFuzzySet::chi(space, y);

    long long seg = (t * Rational(4)).floor();
    if (seg > 3) seg = 3;
    Rational tau = t * Rational(4) - Rational(seg);
    switch (seg) {
        case 0:
            return fuzzy_max(chix, fuzzy_scale(Rational(1) - tau, u));
        case 1:
            return fuzzy_max(chix, fuzzy_scale(tau, chiy));
        case 2:
            return fuzzy_max(chiy, fuzzy_scale(Rational(1) - tau, chix));
        default:
            return fuzzy_max(chiy, fuzzy_scale(tau, v));
    }
}

}  // namespace fuzzhyper
