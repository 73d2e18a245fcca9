#pragma once

#include <utility>
#include <vector>

#include "fuzzhyper/system.hpp"

namespace fuzzhyper {

/// Step fuzzy set over a finite metric space: finitely many breakpoints
/// 0 < a_1 < ... < a_N <= 1 with nested level sets L_1 >= L_2 >= ... >= L_N.
/// Pointwise value: u(x) = max{ a_l : x in L_l }, 0 when x is in no level.
///
/// Canonical form keeps the highest breakpoint of every run of equal levels,
/// so structural equality is pointwise equality. The set is normal exactly
/// when a_N = 1; subnormal values only appear as intermediates inside
/// constructions (and the all-zero set, which has no levels at all).
class StepFuzzySet {
  public:
    StepFuzzySet() = default;

    static StepFuzzySet from_levels(SpacePtr space, std::vector<Rational> breakpoints,
                                    std::vector<Mask> levels);
    static StepFuzzySet from_memberships(SpacePtr space, const std::vector<Rational>& values);
    static StepFuzzySet chi(SpacePtr space, Mask set);
    static StepFuzzySet zero(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Mask>& levels() const { return levels_; }

    bool is_zero() const { return levels_.empty(); }
    bool normal() const { return !levels_.empty() && breakpoints_.back() == Rational(1); }

    /// u_alpha for alpha in [0,1]; alpha = 0 yields the support (closure is
    /// the identity on finite spaces). Empty above the top breakpoint.
    Mask level(const Rational& alpha) const;
    Mask support() const { return levels_.empty() ? 0 : levels_.front(); }
    Mask core() const;  // the 1-level (empty when subnormal)

    Rational membership(int point) const;
    std::vector<Rational> memberships() const;

    bool operator==(const StepFuzzySet& other) const;

    /// "[1,1/2,0]": memberships aligned with the space's label order.
    std::string str() const;

  private:
    SpacePtr space_;
    std::vector<Rational> breakpoints_;  // ascending, in (0,1]
    std::vector<Mask> levels_;           // nested nonincreasing, all nonempty
};

/// beta * u pointwise; beta in [0,1]. Subnormal for beta < 1, zero for beta = 0.
StepFuzzySet fuzzy_scale(const Rational& beta, const StepFuzzySet& u);

/// Pointwise maximum; normal iff either argument is.
StepFuzzySet fuzzy_max(const StepFuzzySet& u, const StepFuzzySet& v);

/// Image fuzzy set: levels map forward through f, breakpoints unchanged.
StepFuzzySet zadeh_extend(const System& f, const StepFuzzySet& u);

/// Strictly increasing piecewise-linear bijection of [0,1] with rational
/// knots and fixed endpoints.
class Reparam {
  public:
    explicit Reparam(std::vector<std::pair<Rational, Rational>> knots);
    static Reparam identity();

    Rational apply(const Rational& alpha) const;
    /// sup |xi(a) - a|; attained at a knot for piecewise-linear maps.
    Rational sup_deviation() const;

    const std::vector<std::pair<Rational, Rational>>& knots() const { return knots_; }

  private:
    std::vector<std::pair<Rational, Rational>> knots_;
};

/// Two-piece map fixing 0 and 1 with knot (1/2 - 1/k, 1/2); requires k > 2.
Reparam make_xi_k(long long k);

/// xi o v: breakpoints a_l become xi(a_l), levels unchanged.
StepFuzzySet reparam_apply(const Reparam& xi, const StepFuzzySet& v);

/// Partition 0 = a_0 < ... < a_N = 1 whose open-closed strata have constant
/// levels; for step sets the native breakpoints already do it exactly.
std::vector<Rational> canonical_partition(const StepFuzzySet& u, const Rational& eps);

/// Point at parameter t of the four-segment path from u to v through
/// chi{x}, chi{x,y}, chi{y} with x, y the least-label core points.
StepFuzzySet path_sample(const StepFuzzySet& u, const StepFuzzySet& v, const Rational& t);

}  // namespace fuzzhyper
