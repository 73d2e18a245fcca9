#include "fuzzhyper/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace fuzzhyper {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 umag(i128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long checked_ll(i128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw ArithmeticOverflow("rational out of 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace

Rational Rational::make(i128 n, i128 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    u128 g = gcd128(umag(n), u128(d));
    n /= i128(g);
    d /= i128(g);
    Rational r;
    r.num_ = checked_ll(n);
    r.den_ = checked_ll(d);
    return r;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DomainError("reciprocal of zero");
    return make(den_, num_);
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ < 0 && num_ % den_ != 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string s = text.substr(begin, end - begin);
    if (s.empty()) throw ParseError("empty rational literal");

    auto parse_ll = [](const std::string& t) -> long long {
        if (t.empty()) throw ParseError("empty integer in rational literal");
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw ParseError("sign without digits in rational literal");
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw ParseError("invalid rational literal: '" + t + "'");
        errno = 0;
        char* endp = nullptr;
        long long v = std::strtoll(t.c_str(), &endp, 10);
        if (errno != 0 || endp != t.c_str() + t.size())
            throw ParseError("integer out of range: '" + t + "'");
        return v;
    };

    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = parse_ll(s.substr(0, slash));
        long long d = parse_ll(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator: '" + s + "'");
        return Rational(n, d);
    }
    size_t dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty() || frac.size() > 18) throw ParseError("unsupported decimal: '" + s + "'");
        bool negative = !head.empty() && head[0] == '-';
        long long whole = head.empty() || head == "-" || head == "+" ? 0 : parse_ll(head);
        long long scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        long long fpart = parse_ll(frac);
        if (fpart < 0) throw ParseError("invalid decimal: '" + s + "'");
        Rational mag = Rational(std::abs(whole)) + Rational(fpart, scale);
        return negative || whole < 0 ? -mag : mag;
    }
    return Rational(parse_ll(s));
}

Rational pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return result;
}

}  // namespace fuzzhyper
