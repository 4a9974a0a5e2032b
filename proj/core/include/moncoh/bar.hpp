#pragma once

#include "moncoh/hmod.hpp"
#include "moncoh/monoid.hpp"

#include <compare>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace moncoh {

// Cell of an iterated bar construction in flattened separator form
//   [a1 |^k1 a2 |^k2 ... am],  1 <= k_i <= level.
// Splitting at the separators equal to `level` recovers the nested letters,
// which are cells one level down. Level-0 words hold a single atom, i.e. a
// generator of the underlying DGA (a monoid element for ZM).
struct BarWord {
    int level = 0;
    std::vector<Element> letters;
    std::vector<int> seps;

    bool empty() const { return letters.empty(); }
    auto operator<=>(const BarWord&) const = default;
    bool operator==(const BarWord&) const = default;

    static BarWord atom(Element a) { return BarWord{0, {a}, {}}; }
};

using Chain = Combination<BarWord>;

// Free-based commutative DGA over a monoid. Cells are BarWords.
class FreeBasedDGA {
public:
    virtual ~FreeBasedDGA() = default;

    virtual int level() const = 0;
    // Hard truncation: cells above this degree are never built or queried.
    virtual int max_degree() const = 0;
    virtual std::shared_ptr<const Monoid> monoid_ptr() const = 0;
    const Monoid& monoid() const { return *monoid_ptr(); }

    virtual int degree(const BarWord& w) const = 0;
    virtual Element projection(const BarWord& w) const = 0;
    // Generators of the given degree in increasing BarWord order (finite monoids).
    virtual std::vector<BarWord> basis(int degree) const = 0;
    virtual Chain differential(const BarWord& w) const = 0;
    virtual Chain product(const BarWord& a, const BarWord& b) const = 0;
    virtual BarWord unit() const = 0;
    virtual Integer augmentation(const BarWord& w) const = 0;
    virtual std::string render(const BarWord& w) const = 0;

    bool is_unit(const BarWord& w) const { return w == unit(); }

    Chain differential(const Chain& c) const;
    Chain product(const Chain& a, const Chain& b) const;
};

// Level-0 DGA given by a list of graded atoms.
class BaseDGA : public FreeBasedDGA {
public:
    int level() const override { return 0; }

    virtual int atom_degree(Element a) const = 0;
    virtual Element atom_projection(Element a) const = 0;
    virtual std::string atom_name(Element a) const = 0;
    virtual Chain atom_differential(Element a) const = 0;
    virtual Chain atom_product(Element a, Element b) const = 0;
    virtual Element unit_atom() const = 0;
    virtual Integer atom_augmentation(Element a) const = 0;
    virtual std::vector<Element> atoms(int degree) const = 0;

    int degree(const BarWord& w) const override;
    Element projection(const BarWord& w) const override;
    std::vector<BarWord> basis(int degree) const override;
    Chain differential(const BarWord& w) const override;
    Chain product(const BarWord& a, const BarWord& b) const override;
    BarWord unit() const override { return BarWord::atom(unit_atom()); }
    Integer augmentation(const BarWord& w) const override;
    std::string render(const BarWord& w) const override;

    using FreeBasedDGA::differential;
    using FreeBasedDGA::product;

    // The atom of a level-0 cell.
    Element single_atom(const BarWord& w) const;
};

// ZM: one degree-0 generator g_x per element, g_x g_y = g_{xy}, unit g_e.
class ZmDGA final : public BaseDGA {
public:
    explicit ZmDGA(std::shared_ptr<const Monoid> monoid) : monoid_(std::move(monoid)) {}

    int max_degree() const override { return std::numeric_limits<int>::max() / 4; }
    std::shared_ptr<const Monoid> monoid_ptr() const override { return monoid_; }

    int atom_degree(Element) const override { return 0; }
    Element atom_projection(Element a) const override { return a; }
    std::string atom_name(Element a) const override { return std::to_string(a); }
    Chain atom_differential(Element) const override { return {}; }
    Chain atom_product(Element a, Element b) const override;
    Element unit_atom() const override { return monoid_->identity(); }
    Integer atom_augmentation(Element) const override { return 1; }
    std::vector<Element> atoms(int degree) const override;

private:
    std::shared_ptr<const Monoid> monoid_;
};

std::shared_ptr<const ZmDGA> zm_dga(std::shared_ptr<const Monoid> monoid);

// ZM viewed as a module: A(x) = Z{(u,v) : uv = x}, y_*(u,v) = (yu, v).
HModule zm_module(std::shared_ptr<const FiniteCommutativeMonoid> monoid);

// Reduced bar construction B(D) with the tensor/product differential and the
// shuffle product.
class BarDGA final : public FreeBasedDGA {
public:
    BarDGA(std::shared_ptr<const FreeBasedDGA> inner, int max_degree);

    int level() const override { return inner_->level() + 1; }
    int max_degree() const override { return max_degree_; }
    std::shared_ptr<const Monoid> monoid_ptr() const override { return inner_->monoid_ptr(); }

    int degree(const BarWord& w) const override;
    Element projection(const BarWord& w) const override;
    std::vector<BarWord> basis(int degree) const override;
    Chain differential(const BarWord& w) const override;
    Chain product(const BarWord& a, const BarWord& b) const override;
    BarWord unit() const override { return BarWord{level(), {}, {}}; }
    Integer augmentation(const BarWord& w) const override { return w.empty() ? 1 : 0; }
    std::string render(const BarWord& w) const override;

    using FreeBasedDGA::differential;
    using FreeBasedDGA::product;

    const FreeBasedDGA& inner() const { return *inner_; }
    const BaseDGA& base() const { return *base_; }

    // Letters of w as cells one level down.
    std::vector<BarWord> split(const BarWord& w) const;
    BarWord join(const std::vector<BarWord>& pieces) const;

private:
    void check(const BarWord& w) const;

    std::shared_ptr<const FreeBasedDGA> inner_;
    const BaseDGA* base_;
    int max_degree_;

    mutable std::mutex mutex_;
    mutable std::map<BarWord, Chain> differential_cache_;
    mutable std::map<int, std::vector<BarWord>> basis_cache_;
};

std::shared_ptr<const BarDGA> bar(std::shared_ptr<const FreeBasedDGA> dga, int max_degree);

// B^r(ZM) truncated at max_degree.
std::shared_ptr<const BarDGA> iterated_bar(std::shared_ptr<const Monoid> monoid, int r, int max_degree);

// Flattened word for ZM-based cells: letters are monoid elements.
BarWord make_word(int level, std::vector<Element> letters, std::vector<int> seps);

// Closed formulas for the level-1 differential and the low-degree level-2/3 cells
// [x||y], [x||y|z], [x|y||z], [x|||y]. Throws for any other shape.
Chain explicit_low_degree_differential(const Monoid& monoid, const BarWord& w);

struct DgaViolation {
    std::string law;
    std::vector<BarWord> cells;
    std::string message;
};

// Checks dd = 0, projection compatibility, unit, graded commutativity,
// associativity, Leibniz rule and augmentation on all basis cells up to max_degree.
std::optional<DgaViolation> validate_dga(const FreeBasedDGA& dga, int max_degree);

}  // namespace moncoh
