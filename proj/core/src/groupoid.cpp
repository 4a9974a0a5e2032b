#include "moncoh/groupoid.hpp"

#include "moncoh/truncated.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace moncoh {

namespace {

std::string tuple_string(const std::vector<Element>& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

std::vector<Integer> lookup(const ValueTable& table, const std::vector<Element>& key, std::size_t dim) {
    auto it = table.find(key);
    if (it == table.end()) return std::vector<Integer>(dim);
    return it->second;
}

void add_to(std::vector<Integer>& a, const std::vector<Integer>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

std::vector<Integer> sum(std::initializer_list<std::vector<Integer>> parts) {
    std::vector<Integer> out(parts.begin()->size());
    for (const auto& p : parts) add_to(out, p);
    return out;
}

Element product(const Monoid& m, const std::vector<Element>& t) {
    Element p = m.identity();
    for (Element x : t) p = m.multiply(p, x);
    return p;
}

// All tuples of the given arity over 0..n-1.
std::vector<std::vector<Element>> tuples(std::size_t n, int arity) {
    std::vector<std::vector<Element>> out;
    std::vector<Element> t(static_cast<std::size_t>(arity), 0);
    while (true) {
        out.push_back(t);
        int i = arity - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] + 1 == static_cast<Element>(n)) t[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++t[static_cast<std::size_t>(i)];
    }
    return out;
}

void validate_table(const std::string& name, const ValueTable& table, int arity, const Monoid& m,
                    const std::function<const FGAbelianGroup&(Element)>& group) {
    for (const auto& [key, value] : table) {
        if (static_cast<int>(key.size()) != arity)
            throw std::invalid_argument(name + ": wrong arity at " + tuple_string(key));
        for (Element x : key)
            if (!m.contains(x)) throw std::invalid_argument(name + ": unknown element in " + tuple_string(key));
        const FGAbelianGroup& grp = group(product(m, key));
        if (value.size() != grp.generators())
            throw std::invalid_argument(name + ": value at " + tuple_string(key) + " has " +
                                        std::to_string(value.size()) + " coordinates, expected " +
                                        std::to_string(grp.generators()));
        if (std::find(key.begin(), key.end(), m.identity()) != key.end() && !grp.is_zero(value))
            throw std::invalid_argument(name + ": not normalized at " + tuple_string(key));
    }
}

std::shared_ptr<const FiniteCommutativeMonoid> finite_monoid(const HModule& a) {
    auto m = std::dynamic_pointer_cast<const FiniteCommutativeMonoid>(a.monoid_ptr());
    if (!m) throw std::invalid_argument("groupoid: the monoid must be finite");
    return m;
}

bool maps_equal(const FGAbelianGroup& target, const IntMatrix& a, const IntMatrix& b) {
    return target.columns_are_zero(a - b);
}

bool is_group_isomorphism(const IntMatrix& psi, const FGAbelianGroup& src, const FGAbelianGroup& tgt) {
    if (psi.rows() != tgt.generators() || psi.cols() != src.generators()) return false;
    if (!tgt.columns_are_zero(psi * src.relations())) return false;
    const Lattice image = Lattice::from_columns(hconcat(psi, tgt.relations()));
    for (std::size_t i = 0; i < tgt.generators(); ++i) {
        std::vector<Integer> e(tgt.generators());
        e[i] = 1;
        if (!image.contains(e)) return false;
    }
    const IntMatrix kernel = preimage_lattice(psi, tgt.relations());
    for (std::size_t j = 0; j < kernel.cols(); ++j)
        if (!src.is_zero(kernel.column(j))) return false;
    return true;
}

struct Slot {
    std::vector<Element> tuple;
    std::size_t coord;
    long radix;
    bool second;  // belongs to the second table
};

std::vector<Slot> slots_for(const HModule& a, int arity, bool second) {
    const Monoid& m = a.monoid();
    std::vector<Slot> out;
    for (const auto& t : tuples(*m.size(), arity)) {
        if (std::find(t.begin(), t.end(), m.identity()) != t.end()) continue;
        const auto orders = a.group(product(m, t)).diagonal_orders();
        if (!orders) throw std::invalid_argument("enumerate: coefficient group needs a diagonal presentation");
        for (std::size_t i = 0; i < orders->size(); ++i) {
            const Integer& o = (*orders)[i];
            if (sgn(o) == 0) throw std::invalid_argument("enumerate: coefficient groups must be finite");
            if (o == 1) continue;
            out.push_back({t, i, o.get_si(), second});
        }
    }
    return out;
}

std::size_t count_or_throw(const std::vector<Slot>& slots, std::size_t cap) {
    std::size_t total = 1;
    for (const auto& s : slots) {
        if (total > cap / static_cast<std::size_t>(s.radix)) throw std::length_error("enumerate: more than cap cochains");
        total *= static_cast<std::size_t>(s.radix);
    }
    return total;
}

template <class Visit>
void for_each_assignment(const std::vector<Slot>& slots, Visit visit) {
    std::vector<long> digits(slots.size(), 0);
    while (true) {
        visit(digits);
        std::size_t i = 0;
        while (i < slots.size() && ++digits[i] == slots[i].radix) digits[i++] = 0;
        if (i == slots.size()) break;
    }
}

void place(ValueTable& table, const HModule& a, const Slot& s, long digit) {
    if (digit == 0) return;
    auto [it, inserted] = table.try_emplace(s.tuple);
    if (inserted) it->second.assign(a.group(product(a.monoid(), s.tuple)).generators(), Integer(0));
    it->second[s.coord] = digit;
}

}  // namespace

SMAGroupoid::SMAGroupoid(std::shared_ptr<const FiniteCommutativeMonoid> objects, std::vector<FGAbelianGroup> vertex_groups,
                         std::map<std::pair<Element, Element>, TensorBlock> tensor, ValueTable associator,
                         ValueTable symmetry)
    : objects_(std::move(objects)),
      groups_(std::move(vertex_groups)),
      tensor_(std::move(tensor)),
      assoc_(std::move(associator)),
      sym_(std::move(symmetry)) {
    const std::size_t n = *objects_->size();
    if (groups_.size() != n) throw std::invalid_argument("SMAGroupoid: one vertex group per object required");
    for (Element x = 0; x < static_cast<Element>(n); ++x)
        for (Element y = 0; y < static_cast<Element>(n); ++y) {
            auto it = tensor_.find({x, y});
            if (it == tensor_.end())
                throw std::invalid_argument("SMAGroupoid: missing tensor block " + tuple_string({x, y}));
            const std::size_t k = vertex_group(objects_->multiply(x, y)).generators();
            if (it->second.left.rows() != k || it->second.left.cols() != vertex_group(x).generators() ||
                it->second.right.rows() != k || it->second.right.cols() != vertex_group(y).generators())
                throw std::invalid_argument("SMAGroupoid: tensor block " + tuple_string({x, y}) + " has wrong shape");
        }
    auto grp = [this](Element x) -> const FGAbelianGroup& { return vertex_group(x); };
    validate_table("associator", assoc_, 3, *objects_, grp);
    validate_table("symmetry", sym_, 2, *objects_, grp);
}

const TensorBlock& SMAGroupoid::tensor_block(Element x, Element y) const { return tensor_.at({x, y}); }

std::vector<Integer> SMAGroupoid::tensor(Element x, Element y, std::span<const Integer> ax,
                                         std::span<const Integer> ay) const {
    const auto& b = tensor_block(x, y);
    auto out = b.left.apply(ax);
    add_to(out, b.right.apply(ay));
    return out;
}

std::vector<Integer> SMAGroupoid::whisker_left(Element x, Element y, std::span<const Integer> b) const {
    return tensor_block(x, y).right.apply(b);
}

std::vector<Integer> SMAGroupoid::whisker_right(Element x, Element y, std::span<const Integer> b) const {
    return tensor_block(x, y).left.apply(b);
}

std::vector<Integer> SMAGroupoid::associator(Element x, Element y, Element z) const {
    return lookup(assoc_, {x, y, z}, vertex_group(objects_->multiply(objects_->multiply(x, y), z)).generators());
}

std::vector<Integer> SMAGroupoid::symmetry(Element x, Element y) const {
    return lookup(sym_, {x, y}, vertex_group(objects_->multiply(x, y)).generators());
}

std::vector<Integer> SMAGroupoid::zero(Element x) const { return std::vector<Integer>(vertex_group(x).generators()); }

SMAGroupoid crossed_product(const HModule& a, const ValueTable& g, const ValueTable& mu) {
    auto m = finite_monoid(a);
    const std::size_t n = *m->size();
    std::vector<FGAbelianGroup> groups;
    for (Element x = 0; x < static_cast<Element>(n); ++x) groups.push_back(a.group(x));
    std::map<std::pair<Element, Element>, TensorBlock> tensor;
    for (Element x = 0; x < static_cast<Element>(n); ++x)
        for (Element y = 0; y < static_cast<Element>(n); ++y)
            tensor.emplace(std::pair{x, y}, TensorBlock{a.action(x, y), a.action(y, x)});
    return SMAGroupoid(m, std::move(groups), std::move(tensor), g, mu);
}

bool CoherenceReport::coherent() const {
    return std::all_of(items.begin(), items.begin() + std::min<std::ptrdiff_t>(4, static_cast<std::ptrdiff_t>(items.size())),
                       [](const Item& i) { return i.passed; });
}

bool CoherenceReport::derived_hold() const {
    return std::all_of(items.begin() + std::min<std::ptrdiff_t>(4, static_cast<std::ptrdiff_t>(items.size())), items.end(),
                       [](const Item& i) { return i.passed; });
}

const CoherenceReport::Item& CoherenceReport::item(const std::string& name) const {
    for (const auto& i : items)
        if (i.name == name) return i;
    throw std::out_of_range("CoherenceReport: no condition " + name);
}

CoherenceReport check_coherence(const SMAGroupoid& gr) {
    const auto& m = gr.objects();
    const std::size_t n = *m.size();
    const Element e = gr.unit();
    auto mul = [&](Element x, Element y) { return m.multiply(x, y); };

    CoherenceReport report;
    auto run = [&](const std::string& name, int arity, auto holds) {
        CoherenceReport::Item item;
        item.name = name;
        for (const auto& t : tuples(n, arity)) {
            ++item.checked;
            if (!holds(t)) {
                item.passed = false;
                item.witness = t;
                break;
            }
        }
        report.items.push_back(std::move(item));
    };

    run("pentagon", 4, [&](const std::vector<Element>& t) {
        const Element x = t[0], y = t[1], z = t[2], w = t[3];
        const auto lhs = sum({gr.associator(x, y, mul(z, w)), gr.associator(mul(x, y), z, w)});
        const auto rhs = sum({gr.whisker_left(x, mul(mul(y, z), w), gr.associator(y, z, w)),
                              gr.associator(x, mul(y, z), w),
                              gr.whisker_right(mul(mul(x, y), z), w, gr.associator(x, y, z))});
        return gr.vertex_group(mul(mul(x, y), mul(z, w))).equal(lhs, rhs);
    });
    // With identity unit constraints the triangle reduces to a_{x,I,y} = 0.
    run("triangle", 2, [&](const std::vector<Element>& t) {
        return gr.vertex_group(mul(t[0], t[1])).is_zero(gr.associator(t[0], e, t[1]));
    });
    run("hexagon", 3, [&](const std::vector<Element>& t) {
        const Element x = t[0], y = t[1], z = t[2];
        const Element p = mul(mul(x, y), z);
        const auto lhs = sum({gr.whisker_left(y, mul(x, z), gr.symmetry(x, z)), gr.associator(y, x, z),
                              gr.whisker_right(mul(x, y), z, gr.symmetry(x, y))});
        const auto rhs = sum({gr.associator(y, z, x), gr.symmetry(x, mul(y, z)), gr.associator(x, y, z)});
        return gr.vertex_group(p).equal(lhs, rhs);
    });
    run("symmetry involution", 2, [&](const std::vector<Element>& t) {
        return gr.vertex_group(mul(t[0], t[1])).is_zero(sum({gr.symmetry(t[1], t[0]), gr.symmetry(t[0], t[1])}));
    });
    run("left unit associator", 2, [&](const std::vector<Element>& t) {
        return gr.vertex_group(mul(t[0], t[1])).is_zero(gr.associator(e, t[0], t[1]));
    });
    run("right unit associator", 2, [&](const std::vector<Element>& t) {
        return gr.vertex_group(mul(t[0], t[1])).is_zero(gr.associator(t[0], t[1], e));
    });
    run("left unit symmetry", 1, [&](const std::vector<Element>& t) {
        return gr.vertex_group(t[0]).is_zero(gr.symmetry(e, t[0]));
    });
    run("right unit symmetry", 1, [&](const std::vector<Element>& t) {
        return gr.vertex_group(t[0]).is_zero(gr.symmetry(t[0], e));
    });
    return report;
}

bool cocycle_check(const HModule& a, const ValueTable& g, const ValueTable& mu) {
    auto m = finite_monoid(a);
    validate_table("g", g, 3, *m, [&](Element x) -> const FGAbelianGroup& { return a.group(x); });
    validate_table("mu", mu, 2, *m, [&](Element x) -> const FGAbelianGroup& { return a.group(x); });
    const ExplicitCoboundary d = explicit_coboundary(m, 3, 5);
    const std::size_t gi = d.source.component_index("g");
    std::vector<std::vector<Integer>> values;
    for (const auto& entry : d.source.entries()) {
        const std::size_t dim = a.group(d.source.projection(entry)).generators();
        values.push_back(lookup(entry.component == gi ? g : mu, entry.tuple, dim));
    }
    for (const auto& entry : d.target.entries()) {
        const Element p = d.target.projection(entry);
        if (!a.group(p).is_zero(evaluate_terms(d.terms(entry), d.source, values, p, a))) return false;
    }
    return true;
}

Triple extract_triple(const SMAGroupoid& gr) {
    const auto m = gr.objects_ptr();
    const std::size_t n = *m->size();
    std::vector<FGAbelianGroup> groups;
    std::map<std::pair<Element, Element>, IntMatrix> actions;
    for (Element x = 0; x < static_cast<Element>(n); ++x) {
        groups.push_back(gr.vertex_group(x));
        for (Element y = 0; y < static_cast<Element>(n); ++y) {
            // y_* a = 0_y (x) a
            actions.emplace(std::pair{x, y}, gr.tensor_block(y, x).right);
            const FGAbelianGroup& target = gr.vertex_group(m->multiply(x, y));
            if (!maps_equal(target, gr.tensor_block(x, y).left, gr.tensor_block(y, x).right))
                throw std::invalid_argument("extract_triple: tensor is not a sum of translations at " +
                                            tuple_string({x, y}));
        }
    }
    HModule a = HModule::tabular(m, std::move(groups), std::move(actions));
    if (auto v = validate_module(a)) throw std::invalid_argument("extract_triple: " + v->message);
    Triple t{m, a, gr.associator_table(), gr.symmetry_table()};
    if (!cocycle_check(t.module, t.g, t.mu)) throw std::invalid_argument("extract_triple: (g, mu) is not a cocycle");
    return t;
}

MonoidalFunctorData build_monoidal_iso(const SMAGroupoid& source, const SMAGroupoid& target, std::vector<Element> i,
                                       std::vector<IntMatrix> psi, ValueTable f) {
    const auto& m = source.objects();
    const auto& mp = target.objects();
    const std::size_t n = *m.size();
    if (*mp.size() != n || i.size() != n) throw std::invalid_argument("monoidal iso: object counts differ");
    std::vector<bool> hit(n, false);
    for (Element x = 0; x < static_cast<Element>(n); ++x) {
        const Element ix = i[static_cast<std::size_t>(x)];
        if (!mp.contains(ix) || hit[static_cast<std::size_t>(ix)])
            throw std::invalid_argument("monoidal iso: i is not a bijection at " + std::to_string(x));
        hit[static_cast<std::size_t>(ix)] = true;
    }
    if (i[static_cast<std::size_t>(m.identity())] != mp.identity())
        throw std::invalid_argument("monoidal iso: i does not preserve the unit");
    for (Element x = 0; x < static_cast<Element>(n); ++x)
        for (Element y = 0; y < static_cast<Element>(n); ++y)
            if (i[static_cast<std::size_t>(m.multiply(x, y))] !=
                mp.multiply(i[static_cast<std::size_t>(x)], i[static_cast<std::size_t>(y)]))
                throw std::invalid_argument("monoidal iso: i is not multiplicative at " + tuple_string({x, y}));
    if (psi.size() != n) throw std::invalid_argument("monoidal iso: one psi per object required");
    for (Element x = 0; x < static_cast<Element>(n); ++x)
        if (!is_group_isomorphism(psi[static_cast<std::size_t>(x)], source.vertex_group(x),
                                  target.vertex_group(i[static_cast<std::size_t>(x)])))
            throw std::invalid_argument("monoidal iso: psi is not an isomorphism at " + std::to_string(x));
    // psi_{xy} x_* = (ix)_* psi_y on A(y)
    for (Element x = 0; x < static_cast<Element>(n); ++x)
        for (Element y = 0; y < static_cast<Element>(n); ++y) {
            const Element ix = i[static_cast<std::size_t>(x)], iy = i[static_cast<std::size_t>(y)];
            const IntMatrix lhs = psi[static_cast<std::size_t>(m.multiply(x, y))] * source.tensor_block(x, y).right;
            const IntMatrix rhs = target.tensor_block(ix, iy).right * psi[static_cast<std::size_t>(y)];
            if (!maps_equal(target.vertex_group(mp.multiply(ix, iy)), lhs, rhs))
                throw std::invalid_argument("monoidal iso: psi is not natural at " + tuple_string({x, y}));
        }
    validate_table("f", f, 2, m, [&](Element x) -> const FGAbelianGroup& {
        return target.vertex_group(i[static_cast<std::size_t>(x)]);
    });
    return MonoidalFunctorData{std::move(i), std::move(psi), std::move(f)};
}

IsoCheck verify_monoidal_iso(const SMAGroupoid& source, const SMAGroupoid& target, const MonoidalFunctorData& d) {
    const auto& m = source.objects();
    const auto& mp = target.objects();
    const std::size_t n = *m.size();
    auto I = [&](Element x) { return d.i[static_cast<std::size_t>(x)]; };
    auto mul = [&](Element x, Element y) { return m.multiply(x, y); };
    auto F = [&](Element x, const std::vector<Integer>& v) { return d.psi[static_cast<std::size_t>(x)].apply(v); };
    auto phi = [&](Element x, Element y) {
        return lookup(d.f, {x, y}, target.vertex_group(I(mul(x, y))).generators());
    };

    for (const auto& t : tuples(n, 3)) {
        const Element x = t[0], y = t[1], z = t[2];
        const Element xyz = mul(mul(x, y), z);
        const auto lhs = sum({phi(x, mul(y, z)), target.whisker_left(I(x), I(mul(y, z)), phi(y, z)),
                              target.associator(I(x), I(y), I(z))});
        const auto rhs = sum({F(xyz, source.associator(x, y, z)), phi(mul(x, y), z),
                              target.whisker_right(I(mul(x, y)), I(z), phi(x, y))});
        if (!target.vertex_group(I(xyz)).equal(lhs, rhs))
            return {false, "associator square fails at " + tuple_string(t)};
    }
    for (Element x = 0; x < static_cast<Element>(n); ++x) {
        if (!target.vertex_group(I(x)).is_zero(phi(m.identity(), x)))
            return {false, "left unit fails at " + std::to_string(x)};
        if (!target.vertex_group(I(x)).is_zero(phi(x, m.identity())))
            return {false, "right unit fails at " + std::to_string(x)};
    }
    for (const auto& t : tuples(n, 2)) {
        const Element x = t[0], y = t[1];
        const auto lhs = sum({phi(y, x), target.symmetry(I(x), I(y))});
        const auto rhs = sum({F(mul(x, y), source.symmetry(x, y)), phi(x, y)});
        if (!target.vertex_group(mp.multiply(I(x), I(y))).equal(lhs, rhs))
            return {false, "symmetry square fails at " + tuple_string(t)};
    }
    return {};
}

std::vector<FiveCochain> enumerate_five_cochains(const HModule& a, std::size_t cap) {
    finite_monoid(a);
    auto slots = slots_for(a, 3, false);
    auto mu_slots = slots_for(a, 2, true);
    slots.insert(slots.end(), mu_slots.begin(), mu_slots.end());
    std::vector<FiveCochain> out;
    out.reserve(count_or_throw(slots, cap));
    for_each_assignment(slots, [&](const std::vector<long>& digits) {
        FiveCochain c;
        for (std::size_t i = 0; i < slots.size(); ++i) place(slots[i].second ? c.mu : c.g, a, slots[i], digits[i]);
        out.push_back(std::move(c));
    });
    return out;
}

std::vector<ValueTable> enumerate_four_cochains(const HModule& a, std::size_t cap) {
    finite_monoid(a);
    const auto slots = slots_for(a, 2, false);
    std::vector<ValueTable> out;
    out.reserve(count_or_throw(slots, cap));
    for_each_assignment(slots, [&](const std::vector<long>& digits) {
        ValueTable f;
        for (std::size_t i = 0; i < slots.size(); ++i) place(f, a, slots[i], digits[i]);
        out.push_back(std::move(f));
    });
    return out;
}

std::vector<std::vector<Element>> monoid_automorphisms(const FiniteCommutativeMonoid& m) {
    const std::size_t n = *m.size();
    if (n > 8) throw std::length_error("monoid_automorphisms: at most 8 elements supported");
    std::vector<Element> rest = m.nonunit_elements();
    std::vector<std::vector<Element>> out;
    std::vector<Element> perm = rest;
    do {
        std::vector<Element> i(n);
        i[static_cast<std::size_t>(m.identity())] = m.identity();
        for (std::size_t k = 0; k < rest.size(); ++k) i[static_cast<std::size_t>(rest[k])] = perm[k];
        bool ok = true;
        for (Element x = 0; ok && x < static_cast<Element>(n); ++x)
            for (Element y = 0; ok && y < static_cast<Element>(n); ++y)
                ok = i[static_cast<std::size_t>(m.multiply(x, y))] ==
                     m.multiply(i[static_cast<std::size_t>(x)], i[static_cast<std::size_t>(y)]);
        if (ok) out.push_back(std::move(i));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Classification classify_crossed_products(const HModule& a, bool search_automorphisms) {
    const auto m = finite_monoid(a);
    const std::size_t n = *m->size();
    const auto candidates = enumerate_five_cochains(a);
    const auto fs = enumerate_four_cochains(a);

    std::vector<std::vector<Element>> autos;
    if (search_automorphisms) {
        // psi = id is natural only when i preserves the groups and the action.
        for (auto& i : monoid_automorphisms(*m)) {
            bool ok = true;
            for (Element x = 0; ok && x < static_cast<Element>(n); ++x) {
                const Element ix = i[static_cast<std::size_t>(x)];
                ok = a.group(x).generators() == a.group(ix).generators() &&
                     a.group(x).relations() == a.group(ix).relations();
                for (Element y = 0; ok && y < static_cast<Element>(n); ++y)
                    ok = a.action(y, x) == a.action(i[static_cast<std::size_t>(y)], ix);
            }
            if (ok) autos.push_back(std::move(i));
        }
    } else {
        std::vector<Element> id(n);
        std::iota(id.begin(), id.end(), Element{0});
        autos.push_back(std::move(id));
    }

    Classification result;
    result.candidates = candidates.size();
    std::vector<SMAGroupoid> groupoids;
    for (const auto& c : candidates)
        if (cocycle_check(a, c.g, c.mu)) groupoids.push_back(crossed_product(a, c.g, c.mu));
    result.cocycles = groupoids.size();

    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    result.class_of.assign(groupoids.size(), unassigned);
    for (std::size_t j = 0; j < groupoids.size(); ++j) {
        if (result.class_of[j] != unassigned) continue;
        result.class_of[j] = result.classes;
        for (std::size_t k = j + 1; k < groupoids.size(); ++k) {
            if (result.class_of[k] != unassigned) continue;
            bool iso = false;
            for (const auto& i : autos) {
                std::vector<IntMatrix> psi;
                for (Element x = 0; x < static_cast<Element>(n); ++x)
                    psi.push_back(IntMatrix::identity(a.group(x).generators()));
                for (const auto& f : fs) {
                    MonoidalFunctorData d{i, psi, f};
                    if (verify_monoidal_iso(groupoids[j], groupoids[k], d).passed) {
                        iso = true;
                        break;
                    }
                }
                if (iso) break;
            }
            if (iso) result.class_of[k] = result.classes;
        }
        ++result.classes;
    }
    return result;
}

}  // namespace moncoh
