#include "fuzzhyper/metric_space.hpp"

#include <algorithm>

#include "fuzzhyper/budget.hpp"
#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

namespace {

// a + b >= c without normalizing intermediates. Operands in this codebase
// keep numerators/denominators far below 2^40, so the 128-bit products are
// safe; the guard falls back to exact arithmetic otherwise.
bool sum_ge(const Rational& a, const Rational& b, const Rational& c) {
    constexpr long long kFastLimit = 1LL << 40;
    auto small = [](const Rational& r) {
        return std::abs(r.num()) < kFastLimit && r.den() < kFastLimit;
    };
    if (small(a) && small(b) && small(c)) {
        __int128 lhs = (__int128(a.num()) * b.den() + __int128(b.num()) * a.den());
        // (a+b) vs c  <=>  lhs * c.den  vs  c.num * a.den * b.den, all positive dens.
        __int128 ad_bd = __int128(a.den()) * b.den();
        bool lhs_big = false;
        // lhs and ad_bd < 2^81; multiplying by < 2^40 stays within int128.
        __int128 left = lhs * c.den();
        __int128 right = __int128(c.num()) * ad_bd;
        lhs_big = left >= right;
        return lhs_big;
    }
    return a + b >= c;
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<Rational>> dist)
    : labels_(std::move(labels)), n_(labels_.size()) {
    if (labels_.empty()) throw DomainError("metric space needs at least one point");
    if (dist.size() != n_) throw DomainError("distance matrix row count mismatch");
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j)
            if (labels_[i] == labels_[j])
                throw DomainError("duplicate label '" + labels_[i] + "'");

    dist_.resize(n_ * n_);
    for (size_t i = 0; i < n_; ++i) {
        if (dist[i].size() != n_) throw DomainError("distance matrix column count mismatch");
        for (size_t j = 0; j < n_; ++j) dist_[i * n_ + j] = dist[i][j];
    }

    for (size_t i = 0; i < n_; ++i) {
        if (!dist_[i * n_ + i].is_zero())
            throw DomainError("nonzero distance on the diagonal at '" + labels_[i] + "'");
        for (size_t j = 0; j < n_; ++j) {
            if (dist_[i * n_ + j] != dist_[j * n_ + i])
                throw DomainError("asymmetric distances between '" + labels_[i] + "' and '" +
                                  labels_[j] + "'");
            if (i != j && dist_[i * n_ + j].sign() <= 0)
                throw DomainError("non-positive distance between distinct points '" + labels_[i] +
                                  "' and '" + labels_[j] + "'");
        }
    }
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            for (size_t k = 0; k < n_; ++k)
                if (!sum_ge(dist_[i * n_ + k], dist_[k * n_ + j], dist_[i * n_ + j]))
                    throw DomainError("triangle inequality fails on ('" + labels_[i] + "','" +
                                      labels_[j] + "','" + labels_[k] + "')");
}

int FiniteMetricSpace::index_of(const std::string& label) const {
    auto found = find(label);
    if (!found) throw DomainError("unknown label '" + label + "'");
    return *found;
}

std::optional<int> FiniteMetricSpace::find(const std::string& label) const {
    for (size_t i = 0; i < n_; ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

bool FiniteMetricSpace::operator==(const FiniteMetricSpace& other) const {
    return labels_ == other.labels_ && dist_ == other.dist_;
}

Mask FiniteMetricSpace::full_mask() const {
    if (n_ > 64) throw ResourceError("subset operations limited to 64 points");
    return n_ == 64 ? ~Mask(0) : ((Mask(1) << n_) - 1);
}

std::string FiniteMetricSpace::set_label(Mask m) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        if (!mask_contains(m, i)) continue;
        if (!first) out += ",";
        out += labels_[static_cast<size_t>(i)];
        first = false;
    }
    out += "}";
    return out;
}

Rational FiniteMetricSpace::diameter() const {
    Rational best(0);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j) best = rat_max(best, dist_[i * n_ + j]);
    return best;
}

std::vector<Rational> FiniteMetricSpace::distance_values() const {
    std::vector<Rational> values;
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j) values.push_back(dist_[i * n_ + j]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

Rational hausdorff(const FiniteMetricSpace& space, Mask a, Mask b) {
    if (a == 0 || b == 0) throw DomainError("hausdorff distance needs nonempty sets");
    const int n = space.size();
    auto directed = [&](Mask from, Mask to) {
        Rational worst(0);
        for (int x = 0; x < n; ++x) {
            if (!mask_contains(from, x)) continue;
            std::optional<Rational> nearest;
            for (int y = 0; y < n; ++y) {
                if (!mask_contains(to, y)) continue;
                const Rational& d = space.dist(x, y);
                if (!nearest || d < *nearest) nearest = d;
            }
            worst = rat_max(worst, *nearest);
        }
        return worst;
    };
    return rat_max(directed(a, b), directed(b, a));
}

Mask fatten(const FiniteMetricSpace& space, Mask y, const Rational& eps) {
    if (y == 0) throw DomainError("fatten needs a nonempty set");
    if (eps.sign() < 0) throw DomainError("fatten needs eps >= 0");
    Mask out = 0;
    for (int x = 0; x < space.size(); ++x) {
        for (int p = 0; p < space.size(); ++p) {
            if (!mask_contains(y, p)) continue;
            if (space.dist(x, p) <= eps) {
                out |= (Mask(1) << x);
                break;
            }
        }
    }
    return out;
}

std::vector<int> product_decode(int index, int base_size, int arity) {
    std::vector<int> coords(static_cast<size_t>(arity));
    for (int l = arity - 1; l >= 0; --l) {
        coords[static_cast<size_t>(l)] = index % base_size;
        index /= base_size;
    }
    return coords;
}

int product_encode(const std::vector<int>& coords, int base_size) {
    int index = 0;
    for (int c : coords) index = index * base_size + c;
    return index;
}

SpacePtr product_space(const SpacePtr& base, int arity) {
    if (arity < 1) throw DomainError("product arity must be >= 1");
    const int n = base->size();
    long long count = 1;
    for (int l = 0; l < arity; ++l) {
        count *= n;
        if (count > static_cast<long long>(enumeration_budget()))
            throw ResourceError("product space would have " + std::to_string(count) +
                                "+ points, over budget " + std::to_string(enumeration_budget()));
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(count));
    for (int idx = 0; idx < count; ++idx) {
        auto coords = product_decode(idx, n, arity);
        std::string label = "(";
        for (size_t l = 0; l < coords.size(); ++l) {
            if (l) label += ",";
            label += base->label(coords[l]);
        }
        label += ")";
        labels.push_back(std::move(label));
    }
    std::vector<std::vector<Rational>> dist(static_cast<size_t>(count),
                                            std::vector<Rational>(static_cast<size_t>(count)));
    for (int i = 0; i < count; ++i) {
        auto ci = product_decode(i, n, arity);
        for (int j = i; j < count; ++j) {
            auto cj = product_decode(j, n, arity);
            Rational d(0);
            for (int l = 0; l < arity; ++l) d = rat_max(d, base->dist(ci[l], cj[l]));
            dist[static_cast<size_t>(i)][static_cast<size_t>(j)] = d;
            dist[static_cast<size_t>(j)][static_cast<size_t>(i)] = d;
        }
    }
    return std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(dist));
}

}  // namespace fuzzhyper
