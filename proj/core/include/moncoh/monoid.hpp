#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace moncoh {

using Element = std::int64_t;

// Commutative monoid with elements encoded as integers.
class Monoid {
public:
    virtual ~Monoid() = default;
    virtual Element identity() const = 0;
    virtual Element multiply(Element x, Element y) const = 0;
    virtual bool contains(Element x) const = 0;
    // Number of elements, or nullopt for an infinite monoid.
    virtual std::optional<std::size_t> size() const = 0;
    virtual std::string name() const = 0;

    bool is_finite() const { return size().has_value(); }
    // All elements in increasing order; throws for infinite monoids.
    std::vector<Element> elements() const;
    std::vector<Element> nonunit_elements() const;
};

class MonoidLawError : public std::invalid_argument {
public:
    MonoidLawError(std::string law, std::vector<Element> witness, const std::string& what)
        : std::invalid_argument(what), law_(std::move(law)), witness_(std::move(witness)) {}
    const std::string& law() const { return law_; }
    const std::vector<Element>& witness() const { return witness_; }

private:
    std::string law_;
    std::vector<Element> witness_;
};

class FiniteCommutativeMonoid final : public Monoid {
public:
    // Validates closure, identity, commutativity and associativity; throws
    // MonoidLawError carrying the first violated law and a witness.
    FiniteCommutativeMonoid(std::vector<std::vector<Element>> table, Element identity, std::string name = {});

    Element identity() const override { return identity_; }
    Element multiply(Element x, Element y) const override;
    bool contains(Element x) const override { return x >= 0 && x < static_cast<Element>(n_); }
    std::optional<std::size_t> size() const override { return n_; }
    std::string name() const override { return name_; }

    const std::vector<std::vector<Element>>& table() const { return table_; }
    // Set when the monoid was built by make_cyclic.
    std::optional<std::pair<int, int>> cyclic_parameters() const { return cyclic_; }

private:
    friend std::shared_ptr<const FiniteCommutativeMonoid> make_cyclic(int m, int q);
    std::size_t n_;
    Element identity_;
    std::vector<std::vector<Element>> table_;
    std::string name_;
    std::optional<std::pair<int, int>> cyclic_;
};

// The first violated monoid law, if any.
struct LawViolation {
    std::string law;
    std::vector<Element> witness;
    std::string message;
};
std::optional<LawViolation> find_law_violation(const std::vector<std::vector<Element>>& table, Element identity);

// The cyclic monoid C_{m,q}: elements 0..m+q-1 with x + y reduced by wp.
std::shared_ptr<const FiniteCommutativeMonoid> make_cyclic(int m, int q);

// The infinite cyclic monoid (natural numbers under addition).
class InfiniteCyclicMonoid final : public Monoid {
public:
    Element identity() const override { return 0; }
    Element multiply(Element x, Element y) const override;
    bool contains(Element x) const override { return x >= 0; }
    std::optional<std::size_t> size() const override { return std::nullopt; }
    std::string name() const override { return "C(inf)"; }
};

std::shared_ptr<const InfiniteCyclicMonoid> make_infinite_cyclic();

// Reduction x -> wp(x) in C_{m,q}, for x >= 0.
Element cyclic_reduce(int m, int q, Element x);
// Carry s(x,y) = ((x+y) - (x (+) y)) / q.
Element cyclic_carry(int m, int q, Element x, Element y);

}  // namespace moncoh
