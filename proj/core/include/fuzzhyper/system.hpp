#pragma once

#include <vector>

#include "fuzzhyper/metric_space.hpp"

namespace fuzzhyper {

/// Self-map on a finite metric space: image[i] is the index of f(point i).
/// Continuity is automatic on finite spaces.
struct System {
    SpacePtr space;
    std::vector<int> image;

    System() = default;
    System(SpacePtr s, std::vector<int> img);

    int size() const { return space->size(); }
    int apply(int x) const { return image[static_cast<size_t>(x)]; }
    int iterate(int x, int times) const;

    Mask image_mask(Mask m) const;

    /// On a finite space dense range, surjectivity and bijectivity coincide.
    bool is_surjective() const;

    /// Inverse permutation; throws DomainError when not surjective.
    std::vector<int> inverse_permutation() const;
};

/// N-fold product system with the coordinatewise maximum metric.
System product_system(const System& sys, int arity);

}  // namespace fuzzhyper
