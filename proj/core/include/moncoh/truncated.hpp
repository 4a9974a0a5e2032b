#pragma once

#include "moncoh/bar.hpp"
#include "moncoh/hmod.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace moncoh {

// A family of normalized functions M^arity -> A, e.g. g or mu. Its values sit on
// the generic cells with separator pattern `seps`.
struct CochainComponent {
    std::string name;
    int arity = 0;
    std::vector<int> seps;
};

// Normalized cochains of one degree, given as a list of components. Entries are
// (component, tuple of non-identity elements), in component order and then
// lexicographic tuple order.
class CochainShape {
public:
    struct Entry {
        std::size_t component;
        std::vector<Element> tuple;
    };

    CochainShape() = default;
    CochainShape(std::shared_ptr<const Monoid> monoid, int level, int degree, std::vector<CochainComponent> components);

    const Monoid& monoid() const { return *monoid_; }
    int level() const { return level_; }
    int degree() const { return degree_; }
    const std::vector<CochainComponent>& components() const { return components_; }
    std::size_t component_index(const std::string& name) const;
    const std::vector<Entry>& entries() const { return entries_; }
    std::optional<std::size_t> find(std::size_t component, const std::vector<Element>& tuple) const;

    Element projection(const Entry& e) const;
    // The generic cell carrying this entry's value.
    BarWord cell(const Entry& e) const;
    CochainGroup group(const HModule& a) const;

private:
    std::shared_ptr<const Monoid> monoid_;
    int level_ = 1;
    int degree_ = 0;
    std::vector<CochainComponent> components_;
    std::vector<Entry> entries_;
    std::map<std::pair<std::size_t, std::vector<Element>>, std::size_t> index_;
};

// Standard components of C^n(M, r; A) in the truncated description:
// level 1: f of arity n; level r >= 2: f (arity 1, 2) in degrees r, r+1, (g, mu)
// in degree r+2 and (h, gamma, delta[, xi]) in degree r+3.
CochainShape standard_shape(std::shared_ptr<const Monoid> monoid, int r, int n);

// One summand c * u_*(component)(tuple) of a coboundary value.
struct FormulaTerm {
    long coeff;
    Element u;
    std::size_t component;
    std::vector<Element> tuple;
};

struct ExplicitCoboundary {
    CochainShape source;
    CochainShape target;
    // Terms of the value at a target entry; tuples containing the identity are
    // allowed and contribute zero.
    std::function<std::vector<FormulaTerm>(const CochainShape::Entry&)> terms;
};

// The explicit coboundary C^n(M,r;A) -> C^{n+1}(M,r;A): Leech formula for r = 1,
// the closed formulas of the truncated complex for r >= 2 (n + 1 <= r + 3).
ExplicitCoboundary explicit_coboundary(std::shared_ptr<const Monoid> monoid, int r, int n);

// Matrix of an explicit coboundary on free covers.
IntMatrix realize(const ExplicitCoboundary& d, const HModule& a);

// Evaluate terms on a cochain given as per-entry coordinate vectors.
std::vector<Integer> evaluate_terms(const std::vector<FormulaTerm>& terms, const CochainShape& source,
                                    const std::vector<std::vector<Integer>>& values, Element target_projection,
                                    const HModule& a);

struct TruncatedCoboundaries {
    // level 2: d3 : C^3 -> C^4, d4 : C^4 -> C^5; level 3: d3, d4, d5.
    std::map<int, IntMatrix> level2;
    std::map<int, IntMatrix> level3;
};

TruncatedCoboundaries truncated_coboundaries(std::shared_ptr<const Monoid> monoid, const HModule& a);

// Permutation matrix P with P * v_generic = v_shape on free covers, matching each
// generic basis cell to the entry of the shape carrying it.
IntMatrix shape_to_generic(const CochainShape& shape, const std::vector<BarWord>& cells, const HModule& a);

}  // namespace moncoh
