#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

/// Exact rational number on 64-bit numerator/denominator, always reduced,
/// denominator > 0. Intermediates run in 128 bits; anything that would not
/// reduce back into 64 bits throws ArithmeticOverflow.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) { *this = make(n, d); }

    static Rational make(__int128 n, __int128 d);

    /// Accepts "p/q", plain integers, and exact decimals such as "0.25".
    static Rational parse(const std::string& text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
    }

    /// Largest integer <= value.
    long long floor() const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  private:
    using i128 = __int128;
    long long num_ = 0;
    long long den_ = 1;
};

Rational pow(const Rational& base, unsigned exp);

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// max(t, 0), the vertical positive part used by the endograph formulas.
inline Rational pos_part(const Rational& t) { return t.sign() > 0 ? t : Rational(0); }

}  // namespace fuzzhyper

template <>
struct std::hash<fuzzhyper::Rational> {
    size_t operator()(const fuzzhyper::Rational& r) const noexcept {
        size_t h = std::hash<long long>{}(r.num());
        return h ^ (std::hash<long long>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
