#pragma once

#include <array>
#include <cstdint>

#include "circ8/vec4.hpp"

namespace circ8 {

enum class Parity { Even, Odd };

constexpr Parity parity_of(std::int64_t k) {
    return k % 2 == 0 ? Parity::Even : Parity::Odd;
}

/// a = k/2 for even k, (k+1)/2 for odd k.  Rejects k < 2.
std::int64_t half_param(std::int64_t k);

/// Order of the degree-8 construction:
///   (k^4 + 2k^3 + 6k^2 + 4k) / 2      for even k
///   (k^4 + 2k^3 + 6k^2 + 6k + 1) / 2  for odd k
/// Divisibility is exact; rejects k < 2 and k > kMaxDiameter.
std::int64_t order_formula(std::int64_t k);

/// 64-bit ceiling for k.  order_formula(k) ~ k^4/2 stays well inside
/// int64 up to here; exhaustive verification is infeasible far earlier.
inline constexpr std::int64_t kMaxDiameter = 10000;

/// Number of points of Z^4 at l1 distance <= k from the origin:
/// sum over i of 2^i * C(4,i) * C(k,i).
std::int64_t ball_size(std::int64_t k);

/// Exact integer determinant of a 4x4 matrix by cofactor expansion.
std::int64_t det4(const std::array<Vec4, 4>& rows);

/// Parity-resolved bundle: the four generating vectors v1..v4 of the
/// lattice L_k, the derived orthant representatives v5..v8, and the group
/// order n = |Z^4 : L_k|.
///
/// Construction cross-checks the derived vectors against their defining
/// integer combinations of v1..v4 and |det(v1..v4)| against the order
/// formula; a mismatch throws.
struct LatticeSystem {
    std::int64_t k = 0;
    std::int64_t a = 0;
    Parity parity = Parity::Even;
    std::array<Vec4, 4> basis{};    // v1..v4
    std::array<Vec4, 4> derived{};  // v5..v8
    std::int64_t order = 0;

    /// v_i for i in 1..8.
    const Vec4& vector(int i) const {
        return i <= 4 ? basis[static_cast<std::size_t>(i - 1)]
                      : derived[static_cast<std::size_t>(i - 5)];
    }
    /// Signed representative: m in {+-1..+-8} selects +-v_|m|.
    Vec4 signed_vector(int m) const {
        const Vec4& v = vector(m < 0 ? -m : m);
        return m < 0 ? -v : v;
    }
    /// The sixteen +-v_i carry distinct sign patterns with no zero
    /// coordinate only once a >= 2 (even) / a >= 3 (odd); below that the
    /// orthant case tables do not apply and callers fall back to BFS.
    bool has_orthant_frame() const {
        return parity == Parity::Even ? a >= 2 : a >= 3;
    }
};

LatticeSystem build_system(std::int64_t k);

}  // namespace circ8
