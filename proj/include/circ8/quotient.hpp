#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "circ8/lattice.hpp"

namespace circ8 {

/// The connection set of the quotient Z_n: s1 = 1 plus the three images of
/// e2, e3, e4 under the isomorphism Z^4/L_k -> Z_n, reduced into 1..n-1.
struct GeneratorSet {
    std::int64_t n = 0;
    std::array<std::int64_t, 4> s{};  // s[0] = 1
};

/// Parity-correct generator set for diameter k; all formula divisions are
/// checked exact (a failure would mean a transcription bug and throws).
GeneratorSet generator_set(std::int64_t k);

/// One verified identity  sum_i coeff_i * v_i = expected,  where expected
/// has the shape (c, 0.., -1 in one slot, ..0).  The three identities
/// express e2, e3, e4 as multiples c of e1 modulo the lattice.
struct ComboIdentity {
    std::array<std::int64_t, 4> coeff{};
    Vec4 expected;
};

/// The three parity-correct combination identities, each verified by exact
/// expansion against the basis of `sys` (throws on mismatch).
std::array<ComboIdentity, 3> combo_identities(const LatticeSystem& sys);

/// Image of x under Z^4 -> Z_n, e_i |-> s_i.  Lattice members map to 0.
std::int64_t project(const Vec4& x, const GeneratorSet& gens);
std::int64_t project(const Vec4& x, const LatticeSystem& sys);

struct CyclicReport {
    bool is_cyclic = false;
    std::int64_t order = 0;
    std::string failure;  // names the first failing condition
};

/// Confirms Z^4/L_k is cyclic of order n, generated by e1: (a) |det| = n,
/// (b) the combination identities express e2, e3, e4 as multiples of e1.
CyclicReport verify_cyclic(const LatticeSystem& sys);

}  // namespace circ8
