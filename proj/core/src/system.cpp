#include "fuzzhyper/system.hpp"

#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

System::System(SpacePtr s, std::vector<int> img) : space(std::move(s)), image(std::move(img)) {
    if (!space) throw DomainError("system needs a space");
    if (image.size() != static_cast<size_t>(space->size()))
        throw DomainError("system image size mismatch");
    for (int target : image)
        if (target < 0 || target >= space->size())
            throw DomainError("system image index out of range");
}

int System::iterate(int x, int times) const {
    for (int i = 0; i < times; ++i) x = apply(x);
    return x;
}

Mask System::image_mask(Mask m) const {
    Mask out = 0;
    while (m != 0) {
        int x = mask_least(m);
        m &= m - 1;
        out |= Mask(1) << apply(x);
    }
    return out;
}

bool System::is_surjective() const {
    std::vector<char> hit(image.size(), 0);
    for (int target : image) hit[static_cast<size_t>(target)] = 1;
    for (char h : hit)
        if (!h) return false;
    return true;
}

std::vector<int> System::inverse_permutation() const {
    if (!is_surjective()) throw DomainError("map is not surjective");
    std::vector<int> inv(image.size());
    for (int x = 0; x < size(); ++x) inv[static_cast<size_t>(apply(x))] = x;
    return inv;
}

System product_system(const System& sys, int arity) {
    SpacePtr prod = product_space(sys.space, arity);
    const int n = sys.size();
    std::vector<int> image(static_cast<size_t>(prod->size()));
    for (int idx = 0; idx < prod->size(); ++idx) {
        auto coords = product_decode(idx, n, arity);
        for (int& c : coords) c = sys.apply(c);
        image[static_cast<size_t>(idx)] = product_encode(coords, n);
    }
    return System(std::move(prod), std::move(image));
}

}  // namespace fuzzhyper
