#include "fuzzhyper/instances.hpp"

#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

namespace {

SpacePtr discrete_two_point() {
    return std::make_shared<FiniteMetricSpace>(
        std::vector<std::string>{"a", "b"},
        std::vector<std::vector<Rational>>{{Rational(0), Rational(1)},
                                           {Rational(1), Rational(0)}});
}

SpacePtr line_space(std::vector<std::string> labels, std::vector<Rational> coords) {
    const size_t n = coords.size();
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) dist[i][j] = (coords[i] - coords[j]).abs();
    return std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(dist));
}

}  // namespace

System make_two_point() { return System(discrete_two_point(), {0, 0}); }

System make_swap2() { return System(discrete_two_point(), {1, 0}); }

System make_identity2() { return System(discrete_two_point(), {0, 1}); }

System make_cycle(int n) {
    if (n < 2) throw DomainError("cycle needs n >= 2");
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> dist(static_cast<size_t>(n),
                                            std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int around = std::abs(i - j);
            dist[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rational(std::min(around, n - around));
        }
    auto space = std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(dist));
    std::vector<int> image(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = (i + 1) % n;
    return System(std::move(space), std::move(image));
}

System make_dyadic_line(int n) {
    if (n < 1) throw DomainError("dyadic line needs n >= 1");
    if (n > 40) throw DomainError("dyadic line limited to n <= 40");
    std::vector<std::string> labels{"0"};
    std::vector<Rational> coords{Rational(0)};
    long long power = 1;
    for (int i = 0; i <= n; ++i) {
        labels.push_back(std::to_string(power));
        coords.push_back(Rational(power));
        power *= 2;
    }
    auto space = line_space(std::move(labels), std::move(coords));
    // halving: 0 -> 0, 1 -> 0, 2^i -> 2^(i-1)
    std::vector<int> image{0, 0};
    for (int i = 1; i <= n; ++i) image.push_back(i);  // index of 2^i is i+1, of 2^(i-1) is i
    return System(std::move(space), std::move(image));
}

System make_triadic_tail(int m) {
    if (m < 1) throw DomainError("triadic tail needs m >= 1");
    if (m > 30) throw DomainError("triadic tail limited to m <= 30");
    std::vector<std::string> labels;
    std::vector<Rational> coords;
    long long power = 1;
    for (int i = 0; i < m; ++i) {
        labels.push_back(i == 0 ? "1" : "1/" + std::to_string(power));
        coords.emplace_back(1, power);
        power *= 3;
    }
    labels.push_back("0");
    coords.emplace_back(0);
    auto space = line_space(std::move(labels), std::move(coords));
    std::vector<int> image;
    for (int i = 0; i < m; ++i) image.push_back(i + 1);  // shift toward 0
    image.push_back(m);                                  // 0 is fixed
    return System(std::move(space), std::move(image));
}

System make_constant(int n) {
    if (n < 1) throw DomainError("constant instance needs n >= 1");
    std::vector<std::string> labels;
    std::vector<Rational> coords;
    for (int i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
        coords.emplace_back(i);
    }
    auto space = line_space(std::move(labels), std::move(coords));
    return System(std::move(space), std::vector<int>(static_cast<size_t>(n), 0));
}

System instance_by_name(const std::string& descriptor) {
    std::string name = descriptor;
    int param = -1;
    if (size_t colon = descriptor.find(':'); colon != std::string::npos) {
        name = descriptor.substr(0, colon);
        try {
            param = std::stoi(descriptor.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("bad instance parameter in '" + descriptor + "'");
        }
    }
    auto need_param = [&](int fallback) { return param >= 0 ? param : fallback; };
    if (name == "two_point") return make_two_point();
    if (name == "swap2") return make_swap2();
    if (name == "identity2") return make_identity2();
    if (name == "cycle") return make_cycle(need_param(4));
    if (name == "dyadic_line") return make_dyadic_line(need_param(3));
    if (name == "triadic_tail") return make_triadic_tail(need_param(3));
    if (name == "constant") return make_constant(need_param(3));
    throw ParseError("unknown instance '" + descriptor + "'");
}

std::vector<std::string> instance_names() {
    return {"two_point",      "swap2",           "identity2", "cycle:<n>",
            "dyadic_line:<n>", "triadic_tail:<m>", "constant:<n>"};
}

}  // namespace fuzzhyper
