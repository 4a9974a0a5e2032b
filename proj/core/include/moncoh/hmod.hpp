#pragma once

#include "moncoh/monoid.hpp"
#include "moncoh/zlinalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace moncoh {

// Finitely generated abelian group Z^k / colspan(relations).
class FGAbelianGroup {
public:
    FGAbelianGroup() : FGAbelianGroup(0, IntMatrix(0, 0)) {}
    FGAbelianGroup(std::size_t generators, IntMatrix relations);

    static FGAbelianGroup from_invariants(const AbGroupInvariants& inv);
    static FGAbelianGroup free(std::size_t rank);
    static FGAbelianGroup cyclic(long n);  // Z/n, n >= 1 (Z/1 is trivial)

    std::size_t generators() const { return k_; }
    const IntMatrix& relations() const { return relations_; }
    const AbGroupInvariants& invariants() const { return invariants_; }

    bool is_zero(std::span<const Integer> v) const;
    bool equal(std::span<const Integer> a, std::span<const Integer> b) const;
    // Column j of m lies in the relation lattice for every j.
    bool columns_are_zero(const IntMatrix& m) const;
    // Orders (0 = infinite) when relations only scale individual generators.
    std::optional<std::vector<Integer>> diagonal_orders() const;
    bool is_finite() const { return invariants_.free_rank == 0; }

private:
    std::size_t k_;
    IntMatrix relations_;
    Lattice lattice_;
    AbGroupInvariants invariants_;
};

// Module over the monoid: a group A(x) per element and maps y_*: A(x) -> A(xy).
class HModule {
public:
    static HModule constant(std::shared_ptr<const Monoid> monoid, FGAbelianGroup group);
    // groups[x] for every x; actions keyed by (x, y) give y_*: A(x) -> A(xy). Missing
    // pairs with y = e default to the identity.
    static HModule tabular(std::shared_ptr<const FiniteCommutativeMonoid> monoid, std::vector<FGAbelianGroup> groups,
                           std::map<std::pair<Element, Element>, IntMatrix> actions);
    // Finitely many sample points of a module over an infinite monoid.
    static HModule sampled(std::shared_ptr<const Monoid> monoid, std::map<Element, FGAbelianGroup> groups,
                           std::map<std::pair<Element, Element>, IntMatrix> actions);

    const Monoid& monoid() const { return *monoid_; }
    std::shared_ptr<const Monoid> monoid_ptr() const { return monoid_; }
    bool is_constant() const { return constant_.has_value(); }

    const FGAbelianGroup& group(Element x) const;
    // y_*: A(x) -> A(xy)
    IntMatrix action(Element x, Element y) const;
    bool has_group(Element x) const;

private:
    std::shared_ptr<const Monoid> monoid_;
    std::optional<FGAbelianGroup> constant_;
    std::map<Element, FGAbelianGroup> groups_;
    std::map<std::pair<Element, Element>, IntMatrix> actions_;
};

struct ModuleViolation {
    std::string law;
    std::vector<Element> witness;
    std::string message;
};

// First failure of well-definedness, e_* = id or y_* z_* = (yz)_*; finite monoids only.
std::optional<ModuleViolation> validate_module(const HModule& a);

// Linear combination of translated generators u_*s with integer coefficients.
template <class Key>
class Combination {
public:
    using Term = std::pair<Element, Key>;

    void add(Element u, const Key& key, const Integer& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(Term{u, key}, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    void add(const Combination& other, const Integer& c = 1) {
        for (const auto& [t, x] : other.terms_) add(t.first, t.second, c * x);
    }
    Combination& operator+=(const Combination& other) {
        add(other);
        return *this;
    }
    Combination& operator-=(const Combination& other) {
        add(other, Integer(-1));
        return *this;
    }
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    bool operator==(const Combination&) const = default;

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Term, Integer>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Integer coefficient(Element u, const Key& key) const {
        auto it = terms_.find(Term{u, key});
        return it == terms_.end() ? Integer(0) : it->second;
    }

private:
    std::map<Term, Integer> terms_;
};

struct FreeGenerator {
    std::string id;
    Element projection;
};

// Basis of a free module ZS over the monoid.
class FreeBasis {
public:
    FreeBasis() = default;
    explicit FreeBasis(std::vector<FreeGenerator> generators);
    std::size_t size() const { return gens_.size(); }
    const FreeGenerator& operator[](std::size_t i) const { return gens_[i]; }
    std::optional<std::size_t> index_of(const std::string& id) const;
    auto begin() const { return gens_.begin(); }
    auto end() const { return gens_.end(); }

private:
    std::vector<FreeGenerator> gens_;
    std::map<std::string, std::size_t> index_;
};

using FreeElement = Combination<std::size_t>;

// Hom(ZS, A) = direct sum over s of A(pi s), as a free cover with relations.
class CochainGroup {
public:
    CochainGroup() = default;
    CochainGroup(const FreeBasis& basis, const HModule& a);
    // Direct sum of arbitrary groups (used by explicit cochain descriptions).
    explicit CochainGroup(std::vector<FGAbelianGroup> summands);

    std::size_t summands() const { return groups_.size(); }
    const FGAbelianGroup& summand(std::size_t i) const { return groups_[i]; }
    std::size_t offset(std::size_t i) const { return offsets_[i]; }
    std::size_t dimension() const { return offsets_.back(); }
    IntMatrix relations() const;
    AbGroupInvariants invariants() const;
    bool is_zero(std::span<const Integer> v) const;

private:
    std::vector<FGAbelianGroup> groups_;
    std::vector<std::size_t> offsets_{0};
};

CochainGroup hom_realization(const FreeBasis& basis, const HModule& a);

// d sends target generators to FreeElements over source; the result is the
// matrix of f -> f o d from Hom(source, A) to Hom(target, A).
IntMatrix dualize(const std::vector<FreeElement>& d, const FreeBasis& source, const FreeBasis& target,
                  const HModule& a);

}  // namespace moncoh
