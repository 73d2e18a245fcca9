#pragma once

#include <string>

#include "fuzzhyper/fuzzy_set.hpp"

namespace fuzzhyper {

enum class MetricKind { Sup, Skorokhod, Sendograph, Endograph };

std::string metric_name(MetricKind kind);
MetricKind metric_from_name(const std::string& name);  // "inf|skorokhod|send|end"

/// sup over alpha of the Hausdorff distance between levels; exact via the
/// merged breakpoints. Both arguments must be normal.
Rational d_inf(const StepFuzzySet& u, const StepFuzzySet& v);

/// Hausdorff distance between endographs under max(d, |alpha-beta|); on a
/// finite space this reduces to
///   max over x of min over y of max(d(x,y), pos(u(x)-v(y)))
/// in both directions. Always <= 1.
Rational d_end(const StepFuzzySet& u, const StepFuzzySet& v);

/// Same as d_end but with both point ranges restricted to the supports; not
/// capped at 1.
Rational d_send(const StepFuzzySet& u, const StepFuzzySet& v);

/// Least eps admitting a reparametrization xi with sup|xi - id| <= eps and
/// d_inf(u, xi o v) <= eps. For step sets the optimum sits in the finite set
/// {0} u {level Hausdorff distances} u {breakpoint differences}; feasibility
/// at a given eps is a monotone alignment check over the merged breakpoints.
Rational d_skorokhod(const StepFuzzySet& u, const StepFuzzySet& v);

Rational fuzzy_distance(MetricKind kind, const StepFuzzySet& u, const StepFuzzySet& v);

/// Some witness v != u with metric(u, v) < eps, built from a small bump or a
/// notch and verified exactly before returning. Only the supremum and
/// endograph variants exist; throws NoWitness when the space admits none
/// (endograph: singleton space; supremum: no core point has a distinct
/// neighbour within eps).
StepFuzzySet perturb_in_ball(const StepFuzzySet& u, const Rational& eps, MetricKind kind);

}  // namespace fuzzhyper
