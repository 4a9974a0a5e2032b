#pragma once

#include "moncoh/hmod.hpp"
#include "moncoh/zlinalg.hpp"

#include <cstdint>
#include <memory>

namespace moncoh {

struct BruteForceResult {
    std::uint64_t cochain_count = 0;
    std::uint64_t cocycle_count = 0;
    std::uint64_t coboundary_count = 0;
    AbGroupInvariants invariants;
};

inline constexpr std::uint64_t brute_force_cap = std::uint64_t{1} << 20;

// H^n(M, r; A) by listing every cochain in degrees n - 1 and n and evaluating
// the explicit coboundary formulas pointwise. The group structure is read off
// from the sizes of the p^k-torsion subgroups, without any matrix reduction.
// Every A(x) must be finite with a diagonal presentation; both cochain groups
// must have at most brute_force_cap elements (std::length_error otherwise).
BruteForceResult brute_force_cohomology(std::shared_ptr<const Monoid> monoid, int r, int n, const HModule& a);

}  // namespace moncoh
