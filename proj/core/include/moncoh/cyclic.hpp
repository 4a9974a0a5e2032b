#pragma once

#include "moncoh/bar.hpp"
#include "moncoh/hmod.hpp"
#include "moncoh/zlinalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace moncoh {

// The small model R of B(ZC) for C = C_{m,q} or C = N. Atom a is the unique
// generator of degree a: v_k for a = 2k, w_k for a = 2k + 1. Over N only v_0
// and w_0 exist and the differential vanishes.
class SmallResolution final : public BaseDGA {
public:
    // `monoid` is a cyclic monoid from make_cyclic or an InfiniteCyclicMonoid.
    SmallResolution(std::shared_ptr<const Monoid> monoid, int max_degree);

    bool infinite() const { return !cyclic_; }
    int index() const;
    int period() const;

    int max_degree() const override { return max_degree_; }
    std::shared_ptr<const Monoid> monoid_ptr() const override { return monoid_; }

    int atom_degree(Element a) const override { return static_cast<int>(a); }
    Element atom_projection(Element a) const override;
    std::string atom_name(Element a) const override;
    Chain atom_differential(Element a) const override;
    Chain atom_product(Element a, Element b) const override;
    Element unit_atom() const override { return 0; }
    Integer atom_augmentation(Element a) const override { return a == 0 ? 1 : 0; }
    std::vector<Element> atoms(int degree) const override;

    // The auxiliary product: v_k . v_l = v_{k+l}, v_k . w_l = w_{k+l}, w . w = 0.
    // It ignores the differential and is not part of the DGA structure.
    Chain bullet(const Chain& a, const Chain& b) const;

    static BarWord v(int k) { return BarWord::atom(2 * k); }
    static BarWord w(int k) { return BarWord::atom(2 * k + 1); }

private:
    std::shared_ptr<const Monoid> monoid_;
    std::optional<std::pair<int, int>> cyclic_;
    int max_degree_;
};

std::shared_ptr<const SmallResolution> small_resolution(int m, int q, int max_degree);
std::shared_ptr<const SmallResolution> small_resolution_inf(int max_degree);
std::shared_ptr<const SmallResolution> small_resolution(std::shared_ptr<const Monoid> monoid, int max_degree);

// The contraction f : B(ZC) -> R, g : R -> B(ZC), Phi : B(ZC) -> B(ZC) of
// degree +1. Chains of B(ZC) are level-1 words over the monoid elements.
class CyclicContraction {
public:
    explicit CyclicContraction(std::shared_ptr<const SmallResolution> r);

    const SmallResolution& resolution() const { return *r_; }
    std::shared_ptr<const SmallResolution> resolution_ptr() const { return r_; }
    const Monoid& monoid() const { return r_->monoid(); }

    Chain f(const BarWord& cell) const;
    Chain f(const Chain& c) const;
    Chain g(const BarWord& generator) const;
    Chain g(const Chain& c) const;
    Chain phi(const BarWord& cell) const;
    Chain phi(const Chain& c) const;

    // The closed formula for gf[x|y] (finite case, x + y >= m + q).
    Chain gf_closed_formula(Element x, Element y) const;

private:
    Chain concat(const Chain& a, const Chain& b) const;
    Chain letter(Element x) const;

    std::shared_ptr<const SmallResolution> r_;
    int m_ = 0, q_ = 0;
};

struct ContractionCheck {
    std::string identity;
    bool passed = true;
    std::size_t checked = 0;
    std::optional<std::string> witness;
};

struct ContractionReport {
    std::vector<ContractionCheck> checks;
    // Cells [x|y] where gf differs from the closed formula (informational).
    std::vector<std::string> closed_formula_mismatches;

    bool passed() const;
    const ContractionCheck& check(const std::string& identity) const;
};

// Checks fg = id, d Phi + Phi d = gf - id, Phi g = 0, f Phi = 0, Phi Phi = 0,
// that f and g are chain maps and that both preserve products, on every basis
// cell up to max_degree (products: total degree <= max_degree).
ContractionReport verify_contraction(int m, int q, int max_degree);
// Over N with cell entries <= entry_bound.
ContractionReport verify_contraction_inf(int max_degree, int entry_bound);

// H^{2k+1}(C,1;A), H^{2k+2}(C,1;A) from the map A(wp(km+1)) -> A(wp(km+m)).
std::pair<AbGroupInvariants, AbGroupInvariants> leech_groups_cyclic(int m, int q, int k, const HModule& a);

struct CyclicLevel2Groups {
    AbGroupInvariants h2, h3, h4;
};

// The four lowest nonzero terms of Hom(B^{level-1}(R), A) (degrees level .. level+3),
// in the coordinates A(1), A(m), A(m+1) x A(wp 2), A(wp 2m) x A(m+1) x A(m+1);
// level 3 appends A(wp 2) to the last one.
struct SmallComplex {
    std::vector<IntMatrix> relations;     // four terms
    std::vector<IntMatrix> coboundaries;  // three maps between them
};
SmallComplex small_cochain_complex(int m, int q, int level, const HModule& a);

CyclicLevel2Groups level2_groups_cyclic(int m, int q, const HModule& a);
// H^5(C,3;A).
AbGroupInvariants level3_top(int m, int q, const HModule& a);

// Hom(Z/(2q,q^2), G) for r = 2 and Hom(Z/(2,q), G) for r >= 3.
AbGroupInvariants closed_form_top(long q, const FGAbelianGroup& g, int r = 2);

// H^n(N, r; A) through Hom(B^{r-1}(R), A); `a` must hold A(k) at every
// projection reached (0..n/2 + 1).
AbGroupInvariants infinite_cyclic_groups(int r, int n, const HModule& a);

}  // namespace moncoh
