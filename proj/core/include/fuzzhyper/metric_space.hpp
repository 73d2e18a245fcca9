#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fuzzhyper/rational.hpp"

namespace fuzzhyper {

/// Subset of a space's points, one bit per point index. Spaces that support
/// subset operations are capped at 64 points; derived spaces (hyperspaces,
/// fuzzy grids) can be larger but are never used as subset carriers.
using Mask = std::uint64_t;

inline int mask_size(Mask m) { return std::popcount(m); }
inline bool mask_contains(Mask m, int i) { return (m >> i) & 1u; }
inline int mask_least(Mask m) { return std::countr_zero(m); }

/// Finite metric space: ordered labels plus an exact rational distance matrix.
/// The constructor rejects anything that is not a genuine metric (zero
/// diagonal, symmetry, strict positivity off the diagonal, triangle
/// inequality).
class FiniteMetricSpace {
  public:
    FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Rational& dist(int i, int j) const { return dist_[static_cast<size_t>(i) * n_ + j]; }

    int index_of(const std::string& label) const;  // throws DomainError when absent
    std::optional<int> find(const std::string& label) const;

    bool operator==(const FiniteMetricSpace& other) const;

    Mask full_mask() const;
    std::string set_label(Mask m) const;  // "{a,b}"

    /// Largest pairwise distance (0 on a singleton).
    Rational diameter() const;

    /// Sorted distinct pairwise distances, without 0.
    std::vector<Rational> distance_values() const;

  private:
    std::vector<std::string> labels_;
    std::vector<Rational> dist_;  // row-major n x n
    size_t n_ = 0;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

/// Nonempty compact subset of a space; on finite spaces every nonempty
/// subset qualifies.
struct CompactSet {
    SpacePtr space;
    Mask bits = 0;
};

/// Hausdorff distance between two nonempty subsets of the same space.
Rational hausdorff(const FiniteMetricSpace& space, Mask a, Mask b);

/// {x : d(x, Y) <= eps}; eps must be >= 0 and Y nonempty.
Mask fatten(const FiniteMetricSpace& space, Mask y, const Rational& eps);

/// N-fold product with the coordinatewise maximum metric. Point (x1,..,xN)
/// gets index sum x_l * size^(N-l) and label "(x1,..,xN)".
SpacePtr product_space(const SpacePtr& base, int arity);

/// Decode a product-space index into base-space coordinates.
std::vector<int> product_decode(int index, int base_size, int arity);
int product_encode(const std::vector<int>& coords, int base_size);

}  // namespace fuzzhyper
