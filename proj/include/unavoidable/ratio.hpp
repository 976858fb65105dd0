#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace unav {

// Exact nonnegative rational. Threshold comparisons like "deg >= eps*n/4"
// are done by cross-multiplication in 128-bit, never in floating point.
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio() = default;
    Ratio(long long n, long long d) : num(n), den(d) {
        if (d <= 0 || n < 0) throw std::invalid_argument("ratio: need num >= 0, den > 0");
        normalize();
    }

    void normalize() {
        long long g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return double(num) / double(den); }

    // this <=> a/b
    bool less_than(long long a, long long b) const {
        return (__int128)num * b < (__int128)a * den;
    }
    bool leq(long long a, long long b) const {
        return (__int128)num * b <= (__int128)a * den;
    }

    friend bool operator==(const Ratio& x, const Ratio& y) {
        return (__int128)x.num * y.den == (__int128)y.num * x.den;
    }
    friend bool operator<(const Ratio& x, const Ratio& y) {
        return (__int128)x.num * y.den < (__int128)y.num * x.den;
    }
    friend bool operator<=(const Ratio& x, const Ratio& y) {
        return (__int128)x.num * y.den <= (__int128)y.num * x.den;
    }

    // Accepts "a/b" or a plain decimal like "0.25".
    static Ratio parse(const std::string& s);

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Ratio Ratio::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long a = std::stoll(s.substr(0, slash));
        long long b = std::stoll(s.substr(slash + 1));
        return Ratio(a, b);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Ratio(std::stoll(s), 1);
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.size() > 15) throw std::invalid_argument("ratio: too many decimal digits");
    long long den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    long long num = (head.empty() ? 0 : std::stoll(head)) * den +
                    (tail.empty() ? 0 : std::stoll(tail));
    return Ratio(num, den);
}

} // namespace unav
