#pragma once

#include <string>
#include <vector>

#include "fuzzhyper/system.hpp"

namespace fuzzhyper {

/// Two-point discrete space {a, b}, d = 1, with the collapsing map b -> a.
System make_two_point();
/// Two-point discrete space with the swap map.
System make_swap2();
/// Two-point discrete space with the identity map.
System make_identity2();
/// Rotation a0 -> a1 -> ... -> a0 on n points with the cycle path metric.
System make_cycle(int n);
/// {0, 1, 2, ..., 2^n} with |x - y| and the halving map (1 maps to 0).
System make_dyadic_line(int n);
/// {1, 1/3, ..., 3^-(m-1), 0} with |x - y| and the right shift; a contraction
/// with factor 1/2.
System make_triadic_tail(int m);
/// n points on a line, everything mapped to the first point.
System make_constant(int n);

/// Parses "name" or "name:param", e.g. "cycle:4", "triadic_tail:3".
System instance_by_name(const std::string& descriptor);
std::vector<std::string> instance_names();

}  // namespace fuzzhyper
