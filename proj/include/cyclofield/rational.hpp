#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclofield {

/// Exact rational number on 64-bit integers, always reduced with positive
/// denominator. Large enough for the constants this project computes
/// (divisor sums over d <= a few hundred); overflow in intermediate products
/// is avoided by reducing before multiplying.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den, b.den);
        return Rational(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        const std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        const std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace cyclofield
