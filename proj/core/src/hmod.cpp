#include "moncoh/hmod.hpp"

#include <sstream>

namespace moncoh {

FGAbelianGroup::FGAbelianGroup(std::size_t generators, IntMatrix relations)
    : k_(generators), relations_(std::move(relations)) {
    if (relations_.rows() != k_) {
        if (relations_.rows() == 0 && relations_.cols() == 0)
            relations_ = IntMatrix(k_, 0);
        else
            throw std::invalid_argument("FGAbelianGroup: relation matrix must have one row per generator");
    }
    lattice_ = Lattice::from_columns(relations_);
    invariants_ = cokernel_invariants(relations_);
}

FGAbelianGroup FGAbelianGroup::from_invariants(const AbGroupInvariants& inv) {
    const std::size_t k = inv.free_rank + inv.torsion.size();
    IntMatrix rel(k, inv.torsion.size());
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
        if (inv.torsion[i] < 2) throw std::invalid_argument("FGAbelianGroup: torsion orders must be >= 2");
        rel(inv.free_rank + i, i) = inv.torsion[i];
    }
    return FGAbelianGroup(k, std::move(rel));
}

FGAbelianGroup FGAbelianGroup::free(std::size_t rank) { return FGAbelianGroup(rank, IntMatrix(rank, 0)); }

FGAbelianGroup FGAbelianGroup::cyclic(long n) {
    if (n < 1) throw std::invalid_argument("FGAbelianGroup::cyclic: order must be positive");
    if (n == 1) return FGAbelianGroup(0, IntMatrix(0, 0));
    return FGAbelianGroup(1, IntMatrix(1, 1, {n}));
}

bool FGAbelianGroup::is_zero(std::span<const Integer> v) const {
    if (v.size() != k_) throw std::invalid_argument("FGAbelianGroup: element has the wrong length");
    return lattice_.contains(v);
}

bool FGAbelianGroup::equal(std::span<const Integer> a, std::span<const Integer> b) const {
    if (a.size() != k_ || b.size() != k_) throw std::invalid_argument("FGAbelianGroup: element has the wrong length");
    std::vector<Integer> d(k_);
    for (std::size_t i = 0; i < k_; ++i) d[i] = a[i] - b[i];
    return is_zero(d);
}

bool FGAbelianGroup::columns_are_zero(const IntMatrix& m) const {
    if (m.rows() != k_) throw std::invalid_argument("FGAbelianGroup: matrix has the wrong number of rows");
    for (const auto& c : sparse_columns(m))
        if (!lattice_.contains(c)) return false;
    return true;
}

std::optional<std::vector<Integer>> FGAbelianGroup::diagonal_orders() const {
    std::vector<Integer> orders(k_, 0);
    for (const auto& col : sparse_columns(relations_)) {
        if (col.empty()) continue;
        if (col.size() != 1) return std::nullopt;
        auto [i, x] = col.front();
        orders[i] = sgn(orders[i]) == 0 ? Integer(abs(x)) : Integer(gcd(orders[i], x));
    }
    return orders;
}

HModule HModule::constant(std::shared_ptr<const Monoid> monoid, FGAbelianGroup group) {
    HModule a;
    a.monoid_ = std::move(monoid);
    a.constant_ = std::move(group);
    return a;
}

HModule HModule::tabular(std::shared_ptr<const FiniteCommutativeMonoid> monoid, std::vector<FGAbelianGroup> groups,
                         std::map<std::pair<Element, Element>, IntMatrix> actions) {
    const std::size_t n = *monoid->size();
    if (groups.size() != n) throw std::invalid_argument("HModule: need one group per monoid element");
    std::map<Element, FGAbelianGroup> g;
    for (std::size_t x = 0; x < n; ++x) g.emplace(static_cast<Element>(x), std::move(groups[x]));
    HModule a = sampled(monoid, std::move(g), std::move(actions));
    for (Element x = 0; x < static_cast<Element>(n); ++x)
        for (Element y = 0; y < static_cast<Element>(n); ++y)
            if (!a.actions_.count({x, y}))
                throw std::invalid_argument("HModule: missing action of " + std::to_string(y) + " on A(" +
                                            std::to_string(x) + ")");
    return a;
}

HModule HModule::sampled(std::shared_ptr<const Monoid> monoid, std::map<Element, FGAbelianGroup> groups,
                         std::map<std::pair<Element, Element>, IntMatrix> actions) {
    HModule a;
    a.monoid_ = std::move(monoid);
    a.groups_ = std::move(groups);
    a.actions_ = std::move(actions);
    const Element e = a.monoid_->identity();
    for (const auto& [x, g] : a.groups_) {
        if (!a.monoid_->contains(x)) throw std::invalid_argument("HModule: group at a non-element");
        a.actions_.try_emplace({x, e}, IntMatrix::identity(g.generators()));
    }
    for (const auto& [xy, m] : a.actions_) {
        const auto [x, y] = xy;
        auto src = a.groups_.find(x);
        auto dst = a.groups_.find(a.monoid_->multiply(x, y));
        if (src == a.groups_.end() || dst == a.groups_.end())
            throw std::invalid_argument("HModule: action between unsampled points");
        if (m.cols() != src->second.generators() || m.rows() != dst->second.generators())
            throw std::invalid_argument("HModule: action matrix of " + std::to_string(y) + " on A(" +
                                        std::to_string(x) + ") has the wrong shape");
    }
    return a;
}

bool HModule::has_group(Element x) const { return constant_ ? monoid_->contains(x) : groups_.count(x) > 0; }

const FGAbelianGroup& HModule::group(Element x) const {
    if (constant_) return *constant_;
    auto it = groups_.find(x);
    if (it == groups_.end()) throw std::out_of_range("HModule: no group at element " + std::to_string(x));
    return it->second;
}

IntMatrix HModule::action(Element x, Element y) const {
    if (constant_) return IntMatrix::identity(constant_->generators());
    auto it = actions_.find({x, y});
    if (it == actions_.end())
        throw std::out_of_range("HModule: no action of " + std::to_string(y) + " on A(" + std::to_string(x) + ")");
    return it->second;
}

std::optional<ModuleViolation> validate_module(const HModule& a) {
    const Monoid& m = a.monoid();
    const auto elems = m.elements();
    const Element e = m.identity();
    for (Element x : elems) {
        const auto& gx = a.group(x);
        if (!gx.columns_are_zero(a.action(x, e) - IntMatrix::identity(gx.generators())))
            return ModuleViolation{"unit", {x}, "e_* is not the identity on A(" + std::to_string(x) + ")"};
        for (Element y : elems) {
            const Element xy = m.multiply(x, y);
            if (!a.group(xy).columns_are_zero(a.action(x, y) * gx.relations()))
                return ModuleViolation{"well-defined", {x, y},
                                       "action of " + std::to_string(y) + " on A(" + std::to_string(x) +
                                           ") does not preserve relations"};
        }
    }
    for (Element x : elems)
        for (Element y : elems)
            for (Element z : elems) {
                const Element xz = m.multiply(x, z);
                const IntMatrix lhs = a.action(xz, y) * a.action(x, z);
                const IntMatrix rhs = a.action(x, m.multiply(y, z));
                if (!a.group(m.multiply(xz, y)).columns_are_zero(lhs - rhs)) {
                    std::ostringstream os;
                    os << "y_* z_* != (yz)_* on A(" << x << ") for y=" << y << ", z=" << z;
                    return ModuleViolation{"functoriality", {x, y, z}, os.str()};
                }
            }
    return std::nullopt;
}

FreeBasis::FreeBasis(std::vector<FreeGenerator> generators) : gens_(std::move(generators)) {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (!index_.emplace(gens_[i].id, i).second)
            throw std::invalid_argument("FreeBasis: duplicate generator " + gens_[i].id);
}

std::optional<std::size_t> FreeBasis::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

CochainGroup::CochainGroup(const FreeBasis& basis, const HModule& a) {
    for (const auto& g : basis) {
        groups_.push_back(a.group(g.projection));
        offsets_.push_back(offsets_.back() + groups_.back().generators());
    }
}

CochainGroup::CochainGroup(std::vector<FGAbelianGroup> summands) : groups_(std::move(summands)) {
    for (const auto& g : groups_) offsets_.push_back(offsets_.back() + g.generators());
}

IntMatrix CochainGroup::relations() const {
    std::size_t cols = 0;
    for (const auto& g : groups_) cols += g.relations().cols();
    IntMatrix r(dimension(), cols);
    std::size_t c = 0;
    for (std::size_t s = 0; s < groups_.size(); ++s) {
        const auto& rel = groups_[s].relations();
        for (std::size_t j = 0; j < rel.cols(); ++j, ++c)
            for (std::size_t i = 0; i < rel.rows(); ++i) r(offsets_[s] + i, c) = rel(i, j);
    }
    return r;
}

AbGroupInvariants CochainGroup::invariants() const { return cokernel_invariants(relations()); }

bool CochainGroup::is_zero(std::span<const Integer> v) const {
    if (v.size() != dimension()) throw std::invalid_argument("CochainGroup: element has the wrong length");
    for (std::size_t s = 0; s < groups_.size(); ++s)
        if (!groups_[s].is_zero(v.subspan(offsets_[s], groups_[s].generators()))) return false;
    return true;
}

CochainGroup hom_realization(const FreeBasis& basis, const HModule& a) { return CochainGroup(basis, a); }

IntMatrix dualize(const std::vector<FreeElement>& d, const FreeBasis& source, const FreeBasis& target,
                  const HModule& a) {
    if (d.size() != target.size()) throw std::invalid_argument("dualize: need one image per target generator");
    const CochainGroup src(source, a);
    const CochainGroup tgt(target, a);
    IntMatrix out(tgt.dimension(), src.dimension());
    const Monoid& m = a.monoid();
    for (std::size_t t = 0; t < d.size(); ++t) {
        for (const auto& [term, c] : d[t]) {
            const auto [u, s] = term;
            if (s >= source.size()) throw std::out_of_range("dualize: term refers to an unknown source generator");
            const Element ps = source[s].projection;
            if (m.multiply(u, ps) != target[t].projection) {
                std::ostringstream os;
                os << "dualize: projection mismatch in term " << u << "_*" << source[s].id << " of the image of "
                   << target[t].id;
                throw std::invalid_argument(os.str());
            }
            const IntMatrix act = a.action(ps, u);
            for (std::size_t i = 0; i < act.rows(); ++i)
                for (std::size_t j = 0; j < act.cols(); ++j)
                    if (sgn(act(i, j)) != 0) out(tgt.offset(t) + i, src.offset(s) + j) += c * act(i, j);
        }
    }
    return out;
}

}  // namespace moncoh
