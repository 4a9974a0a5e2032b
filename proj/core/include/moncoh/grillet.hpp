#pragma once

#include "moncoh/hmod.hpp"
#include "moncoh/truncated.hpp"
#include "moncoh/zlinalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace moncoh {

// Symmetric n-cochains (1 <= n <= 4): normalized f : M^n -> A(x1...xn) subject
// to the symmetry identities of that degree. The ambient group is the level-1
// cochain group C^n(M,1;A); the subgroup is {v : constraints * v = 0 mod
// constraint_relations}.
struct SymmetricCochainLattice {
    int degree = 0;
    CochainShape shape;
    CochainGroup ambient;
    IntMatrix constraints;
    IntMatrix constraint_relations;
    Lattice lattice;  // in the free cover, contains the ambient relations

    bool contains(std::span<const Integer> v) const;
    AbGroupInvariants invariants() const;
};

SymmetricCochainLattice symmetric_cochains(std::shared_ptr<const Monoid> monoid, const HModule& a, int n);

// delta^n : C^n -> C^{n+1} on the ambient function groups, n in {1, 2, 3}.
ExplicitCoboundary grillet_formula(std::shared_ptr<const Monoid> monoid, int n);
IntMatrix grillet_coboundary(std::shared_ptr<const Monoid> monoid, const HModule& a, int n);

// H^n_G for n in {1, 2, 3}.
AbGroupInvariants grillet_cohomology(std::shared_ptr<const Monoid> monoid, const HModule& a, int n);

struct InclusionReport {
    // i_n : C^n_G -> C^{n+2}(M,3;A) on free covers, n = 1..4 (index n - 1).
    std::vector<IntMatrix> maps;
    bool commutes = true;
    // First failing square and the target entry where it fails.
    std::optional<std::string> failure;
    // i_1, i_2 identify cocycles and coboundaries, so H^1_G and H^2_G map isomorphically.
    bool degree1_isomorphism = false;
    bool degree2_isomorphism = false;
    // A symmetric 3-cocycle whose image bounds is itself a coboundary.
    bool degree3_injective = false;

    bool ok() const { return commutes && degree1_isomorphism && degree2_isomorphism && degree3_injective; }
};

InclusionReport inclusion_chainmap(std::shared_ptr<const Monoid> monoid, const HModule& a);

struct EleobResult {
    bool easc1 = false;  // f(x,y,z) + f(z,y,x) = 0 and the cyclic sum vanishes
    bool easc2 = false;  // f(x,y,z) - f(y,x,z) + f(y,z,x) = 0
    bool easc3 = false;  // f(x,y,z) - f(x,z,y) + f(z,x,y) = 0
    bool agree() const { return easc1 == easc2 && easc2 == easc3; }
};

// Evaluates the three condition sets on a normalized 3-cochain given as its
// coordinate vector in C^3(M,1;A).
EleobResult eleob_equivalent(std::shared_ptr<const Monoid> monoid, const HModule& a, std::span<const Integer> f);

}  // namespace moncoh
