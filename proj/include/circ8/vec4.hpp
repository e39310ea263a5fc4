#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace circ8 {

/// A point of Z^4.  All coordinate arithmetic in this library is exact
/// 64-bit integer arithmetic; there is no floating point anywhere.
struct Vec4 {
    std::array<std::int64_t, 4> c{0, 0, 0, 0};

    constexpr Vec4() = default;
    constexpr Vec4(std::int64_t c1, std::int64_t c2, std::int64_t c3, std::int64_t c4)
        : c{c1, c2, c3, c4} {}

    constexpr std::int64_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    constexpr std::int64_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    friend constexpr Vec4 operator+(const Vec4& a, const Vec4& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend constexpr Vec4 operator-(const Vec4& a, const Vec4& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    friend constexpr Vec4 operator-(const Vec4& a) {
        return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]};
    }
    friend constexpr bool operator==(const Vec4& a, const Vec4& b) { return a.c == b.c; }
};

constexpr std::int64_t l1_norm(const Vec4& x) {
    std::int64_t s = 0;
    for (auto v : x.c) s += v < 0 ? -v : v;
    return s;
}

/// y lies between x and z: every coordinate of y is in the closed interval
/// spanned by the corresponding coordinates of x and z.  When true, the l1
/// distances are additive through y.
constexpr bool lies_between(const Vec4& x, const Vec4& y, const Vec4& z) {
    for (int i = 0; i < 4; ++i) {
        const auto lo = x[i] < z[i] ? x[i] : z[i];
        const auto hi = x[i] < z[i] ? z[i] : x[i];
        if (y[i] < lo || y[i] > hi) return false;
    }
    return true;
}

std::string to_string(const Vec4& x);

}  // namespace circ8
