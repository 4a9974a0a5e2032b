#pragma once

#include "moncoh/hmod.hpp"
#include "moncoh/monoid.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace moncoh {

// Values indexed by argument tuples; missing tuples mean zero.
using ValueTable = std::map<std::vector<Element>, std::vector<Integer>>;

// The morphism tensor A(x) x A(y) -> A(xy), a_x (x) a_y = left a_x + right a_y.
struct TensorBlock {
    IntMatrix left;
    IntMatrix right;
};

// A strictly unitary, totally disconnected symmetric monoidal abelian groupoid:
// objects are monoid elements, the vertex group at x is A(x), the unit
// constraints are identities.
class SMAGroupoid {
public:
    SMAGroupoid(std::shared_ptr<const FiniteCommutativeMonoid> objects, std::vector<FGAbelianGroup> vertex_groups,
                std::map<std::pair<Element, Element>, TensorBlock> tensor, ValueTable associator, ValueTable symmetry);

    const FiniteCommutativeMonoid& objects() const { return *objects_; }
    std::shared_ptr<const FiniteCommutativeMonoid> objects_ptr() const { return objects_; }
    Element unit() const { return objects_->identity(); }
    const FGAbelianGroup& vertex_group(Element x) const { return groups_.at(static_cast<std::size_t>(x)); }
    const TensorBlock& tensor_block(Element x, Element y) const;

    std::vector<Integer> tensor(Element x, Element y, std::span<const Integer> ax, std::span<const Integer> ay) const;
    // 0_x (x) b for b in A(y), and b (x) 0_y for b in A(x).
    std::vector<Integer> whisker_left(Element x, Element y, std::span<const Integer> b) const;
    std::vector<Integer> whisker_right(Element x, Element y, std::span<const Integer> b) const;

    std::vector<Integer> associator(Element x, Element y, Element z) const;
    std::vector<Integer> symmetry(Element x, Element y) const;
    std::vector<Integer> zero(Element x) const;

    const ValueTable& associator_table() const { return assoc_; }
    const ValueTable& symmetry_table() const { return sym_; }

private:
    std::shared_ptr<const FiniteCommutativeMonoid> objects_;
    std::vector<FGAbelianGroup> groups_;
    std::map<std::pair<Element, Element>, TensorBlock> tensor_;
    ValueTable assoc_;
    ValueTable sym_;
};

// A x_{g,mu} M: associator g, symmetry mu, tensor a_x (x) a_y = y_* a_x + x_* a_y.
// Tables must be normalized and valued in the right groups; the cocycle
// condition is not required.
SMAGroupoid crossed_product(const HModule& a, const ValueTable& g, const ValueTable& mu);

struct CoherenceReport {
    struct Item {
        std::string name;
        bool passed = true;
        std::size_t checked = 0;
        std::optional<std::vector<Element>> witness;
    };
    std::vector<Item> items;  // four axioms, then the derived unit identities

    bool coherent() const;       // the axioms
    bool derived_hold() const;   // the identities that must follow from them
    const Item& item(const std::string& name) const;
};

// Exhaustive evaluation over all object tuples.
CoherenceReport check_coherence(const SMAGroupoid& g);

// True iff the level-3 coboundary of (g, mu) vanishes.
bool cocycle_check(const HModule& a, const ValueTable& g, const ValueTable& mu);

struct Triple {
    std::shared_ptr<const FiniteCommutativeMonoid> monoid;
    HModule module;
    ValueTable g;
    ValueTable mu;
};

// Reads (M, A, g, mu) back from a groupoid, with y_* a = 0_y (x) a. Throws if the
// result is not a module or (g, mu) is not a cocycle.
Triple extract_triple(const SMAGroupoid& g);

// Symmetric monoidal functor data between crossed products: a monoid
// isomorphism i (as a table), group isomorphisms psi_x : A(x) -> A'(ix), and
// phi_{x,y} = f(x,y) in A'(i(xy)); phi_0 = 0.
struct MonoidalFunctorData {
    std::vector<Element> i;
    std::vector<IntMatrix> psi;
    ValueTable f;
};

// Validates that i is a monoid isomorphism and psi a natural family of
// isomorphisms; throws std::invalid_argument naming a witness otherwise.
MonoidalFunctorData build_monoidal_iso(const SMAGroupoid& source, const SMAGroupoid& target, std::vector<Element> i,
                                       std::vector<IntMatrix> psi, ValueTable f);

struct IsoCheck {
    bool passed = true;
    std::optional<std::string> failure;
};

// The functor coherence conditions (associator, units, symmetry), exhaustively.
IsoCheck verify_monoidal_iso(const SMAGroupoid& source, const SMAGroupoid& target, const MonoidalFunctorData& data);

struct FiveCochain {
    ValueTable g;
    ValueTable mu;
};

// Every normalized pair (g, mu); coefficient groups must be finite with a
// diagonal presentation and the count at most `cap`.
std::vector<FiveCochain> enumerate_five_cochains(const HModule& a, std::size_t cap = 1u << 16);
// Every normalized f(x,y).
std::vector<ValueTable> enumerate_four_cochains(const HModule& a, std::size_t cap = 1u << 16);

struct Classification {
    std::size_t candidates = 0;
    std::size_t cocycles = 0;
    std::size_t classes = 0;
    std::vector<std::size_t> class_of;  // per cocycle, in enumeration order
};

// Groups the crossed products of all cocycles into isomorphism classes, using
// functors with i = id, psi = id (and, with search_automorphisms, every monoid
// automorphism i for which psi = id is natural).
Classification classify_crossed_products(const HModule& a, bool search_automorphisms = false);

// Automorphisms of a finite commutative monoid as element tables.
std::vector<std::vector<Element>> monoid_automorphisms(const FiniteCommutativeMonoid& m);

}  // namespace moncoh
