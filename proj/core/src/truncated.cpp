#include "moncoh/truncated.hpp"

#include <algorithm>

namespace moncoh {

CochainShape::CochainShape(std::shared_ptr<const Monoid> monoid, int level, int degree,
                           std::vector<CochainComponent> components)
    : monoid_(std::move(monoid)), level_(level), degree_(degree), components_(std::move(components)) {
    const auto letters = monoid_->nonunit_elements();
    for (std::size_t c = 0; c < components_.size(); ++c) {
        const int arity = components_[c].arity;
        if (arity < 0 || (arity > 0 && static_cast<int>(components_[c].seps.size()) != arity - 1) ||
            (arity == 0 && !components_[c].seps.empty()))
            throw std::invalid_argument("CochainShape: separator pattern does not match arity");
        std::vector<Element> tuple(static_cast<std::size_t>(arity));
        auto fill = [&](auto&& self, std::size_t pos) -> void {
            if (pos == tuple.size()) {
                index_.emplace(std::pair{c, tuple}, entries_.size());
                entries_.push_back({c, tuple});
                return;
            }
            for (Element x : letters) {
                tuple[pos] = x;
                self(self, pos + 1);
            }
        };
        fill(fill, 0);
    }
}

std::size_t CochainShape::component_index(const std::string& name) const {
    for (std::size_t c = 0; c < components_.size(); ++c)
        if (components_[c].name == name) return c;
    throw std::out_of_range("CochainShape: no component named " + name);
}

std::optional<std::size_t> CochainShape::find(std::size_t component, const std::vector<Element>& tuple) const {
    auto it = index_.find({component, tuple});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Element CochainShape::projection(const Entry& e) const {
    Element p = monoid_->identity();
    for (Element x : e.tuple) p = monoid_->multiply(p, x);
    return p;
}

BarWord CochainShape::cell(const Entry& e) const {
    return BarWord{level_, e.tuple, components_[e.component].seps};
}

CochainGroup CochainShape::group(const HModule& a) const {
    std::vector<FGAbelianGroup> groups;
    for (const auto& e : entries_) groups.push_back(a.group(projection(e)));
    return CochainGroup(std::move(groups));
}

CochainShape standard_shape(std::shared_ptr<const Monoid> monoid, int r, int n) {
    if (r < 1) throw std::invalid_argument("standard_shape: level must be at least 1");
    if (n < 0) throw std::invalid_argument("standard_shape: negative degree");
    std::vector<CochainComponent> comps;
    if (n == 0) {
        comps.push_back({"a", 0, {}});
    } else if (r == 1) {
        comps.push_back({"f", n, std::vector<int>(static_cast<std::size_t>(n - 1), 1)});
    } else if (n < r) {
        // zero group
    } else if (n == r) {
        comps.push_back({"f", 1, {}});
    } else if (n == r + 1) {
        comps.push_back({"f", 2, {1}});
    } else if (n == r + 2) {
        comps.push_back({"g", 3, {1, 1}});
        comps.push_back({"mu", 2, {2}});
    } else if (n == r + 3) {
        comps.push_back({"h", 4, {1, 1, 1}});
        comps.push_back({"gamma", 3, {2, 1}});
        comps.push_back({"delta", 3, {1, 2}});
        if (r >= 3) comps.push_back({"xi", 2, {3}});
    } else {
        throw std::out_of_range("standard_shape: degree " + std::to_string(n) + " is beyond the truncation r + 3");
    }
    return CochainShape(std::move(monoid), r, n, std::move(comps));
}

namespace {

std::vector<FormulaTerm> leech_terms(const Monoid& m, std::size_t f, const std::vector<Element>& x) {
    const std::size_t n = x.size() - 1;  // source arity
    const Element e = m.identity();
    std::vector<FormulaTerm> t;
    t.push_back({1, x[0], f, {x.begin() + 1, x.end()}});
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Element> y;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j == i) continue;
            y.push_back(j == i - 1 ? m.multiply(x[i - 1], x[i]) : x[j]);
        }
        t.push_back({i % 2 ? -1L : 1L, e, f, std::move(y)});
    }
    t.push_back({(n + 1) % 2 ? -1L : 1L, x[n], f, {x.begin(), x.end() - 1}});
    return t;
}

void scale(std::vector<FormulaTerm>& terms, long s) {
    for (auto& t : terms) t.coeff *= s;
}

}  // namespace

ExplicitCoboundary explicit_coboundary(std::shared_ptr<const Monoid> monoid, int r, int n) {
    if (r >= 2 && n + 1 > r + 3) throw std::out_of_range("explicit_coboundary: target degree beyond r + 3");
    ExplicitCoboundary d{standard_shape(monoid, r, n), standard_shape(monoid, r, n + 1), {}};
    const Monoid* m = monoid.get();
    const Element e = m->identity();
    auto mul = [m](Element a, Element b) { return m->multiply(a, b); };

    if (r == 1) {
        const std::size_t f = 0;
        d.terms = [m, f](const CochainShape::Entry& t) { return leech_terms(*m, f, t.tuple); };
        return d;
    }
    if (n < r) {
        d.terms = [](const CochainShape::Entry&) { return std::vector<FormulaTerm>{}; };
        return d;
    }
    if (n == r) {
        const long s = (r - 1) % 2 ? -1 : 1;
        d.terms = [m, s](const CochainShape::Entry& t) {
            auto terms = leech_terms(*m, 0, t.tuple);
            scale(terms, s);
            return terms;
        };
        return d;
    }
    const CochainShape& src = d.source;
    const CochainShape& tgt = d.target;
    if (n == r + 1) {
        const long s = r % 2 ? -1 : 1;
        const std::size_t f = src.component_index("f");
        const std::size_t g = tgt.component_index("g");
        d.terms = [=](const CochainShape::Entry& t) {
            std::vector<FormulaTerm> terms;
            const auto& a = t.tuple;
            if (t.component == g) {
                const Element x = a[0], y = a[1], z = a[2];
                terms = {{-1, x, f, {y, z}}, {1, e, f, {mul(x, y), z}}, {-1, e, f, {x, mul(y, z)}}, {1, z, f, {x, y}}};
            } else {
                const Element x = a[0], y = a[1];
                terms = {{1, e, f, {x, y}}, {-1, e, f, {y, x}}};
            }
            scale(terms, s);
            return terms;
        };
        return d;
    }
    // n == r + 2
    const long s = r == 2 ? 1 : ((r - 3) % 2 ? 1 : -1);
    const std::size_t g = src.component_index("g");
    const std::size_t mu = src.component_index("mu");
    const std::size_t h = tgt.component_index("h");
    const std::size_t gamma = tgt.component_index("gamma");
    const std::size_t delta = tgt.component_index("delta");
    d.terms = [=](const CochainShape::Entry& t) {
        std::vector<FormulaTerm> terms;
        const auto& a = t.tuple;
        if (t.component == h) {
            const Element x = a[0], y = a[1], z = a[2], w = a[3];
            terms = {{-1, x, g, {y, z, w}},
                     {1, e, g, {mul(x, y), z, w}},
                     {-1, e, g, {x, mul(y, z), w}},
                     {1, e, g, {x, y, mul(z, w)}},
                     {-1, w, g, {x, y, z}}};
        } else if (t.component == gamma) {
            const Element x = a[0], y = a[1], z = a[2];
            terms = {{-1, y, mu, {x, z}}, {1, e, mu, {x, mul(y, z)}}, {-1, z, mu, {x, y}},
                     {1, e, g, {x, y, z}},  {-1, e, g, {y, x, z}},       {1, e, g, {y, z, x}}};
        } else if (t.component == delta) {
            const Element x = a[0], y = a[1], z = a[2];
            terms = {{-1, x, mu, {y, z}}, {1, e, mu, {mul(x, y), z}}, {-1, y, mu, {x, z}},
                     {-1, e, g, {x, y, z}}, {1, e, g, {x, z, y}},       {-1, e, g, {z, x, y}}};
        } else {
            // xi, only for r >= 3; sign chosen so that the overall factor s applies uniformly
            const Element x = a[0], y = a[1];
            terms = {{1, e, mu, {x, y}}, {1, e, mu, {y, x}}};
        }
        scale(terms, s);
        return terms;
    };
    return d;
}

std::vector<Integer> evaluate_terms(const std::vector<FormulaTerm>& terms, const CochainShape& source,
                                    const std::vector<std::vector<Integer>>& values, Element target_projection,
                                    const HModule& a) {
    const Monoid& m = source.monoid();
    std::vector<Integer> out(a.group(target_projection).generators());
    for (const auto& t : terms) {
        if (std::find(t.tuple.begin(), t.tuple.end(), m.identity()) != t.tuple.end()) continue;
        auto idx = source.find(t.component, t.tuple);
        if (!idx) throw std::logic_error("evaluate_terms: term outside the source shape");
        const Element p = source.projection(source.entries()[*idx]);
        if (m.multiply(t.u, p) != target_projection) throw std::logic_error("evaluate_terms: projection mismatch");
        const auto v = a.action(p, t.u).apply(values[*idx]);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.coeff * v[i];
    }
    return out;
}

IntMatrix realize(const ExplicitCoboundary& d, const HModule& a) {
    const CochainGroup src = d.source.group(a);
    const CochainGroup tgt = d.target.group(a);
    const Monoid& m = d.source.monoid();
    IntMatrix out(tgt.dimension(), src.dimension());
    const auto& entries = d.target.entries();
    for (std::size_t te = 0; te < entries.size(); ++te) {
        const Element pt = d.target.projection(entries[te]);
        for (const auto& t : d.terms(entries[te])) {
            if (std::find(t.tuple.begin(), t.tuple.end(), m.identity()) != t.tuple.end()) continue;
            auto se = d.source.find(t.component, t.tuple);
            if (!se) throw std::logic_error("realize: term outside the source shape");
            const Element ps = d.source.projection(d.source.entries()[*se]);
            if (m.multiply(t.u, ps) != pt) throw std::logic_error("realize: projection mismatch");
            const IntMatrix act = a.action(ps, t.u);
            for (std::size_t i = 0; i < act.rows(); ++i)
                for (std::size_t j = 0; j < act.cols(); ++j)
                    if (sgn(act(i, j)) != 0) out(tgt.offset(te) + i, src.offset(*se) + j) += t.coeff * act(i, j);
        }
    }
    return out;
}

TruncatedCoboundaries truncated_coboundaries(std::shared_ptr<const Monoid> monoid, const HModule& a) {
    TruncatedCoboundaries t;
    for (int n : {3, 4}) t.level2.emplace(n, realize(explicit_coboundary(monoid, 2, n), a));
    for (int n : {3, 4, 5}) t.level3.emplace(n, realize(explicit_coboundary(monoid, 3, n), a));
    return t;
}

IntMatrix shape_to_generic(const CochainShape& shape, const std::vector<BarWord>& cells, const HModule& a) {
    const CochainGroup g = shape.group(a);
    std::map<BarWord, std::size_t> pos;
    for (std::size_t i = 0; i < cells.size(); ++i) pos.emplace(cells[i], i);
    if (cells.size() != shape.entries().size())
        throw std::invalid_argument("shape_to_generic: shape and cell basis differ in size");
    // generic offsets follow the cell order
    std::vector<std::size_t> generic_offset(cells.size() + 1, 0);
    std::vector<std::size_t> entry_of_cell(cells.size());
    for (std::size_t e = 0; e < shape.entries().size(); ++e) {
        auto it = pos.find(shape.cell(shape.entries()[e]));
        if (it == pos.end()) throw std::invalid_argument("shape_to_generic: entry has no generic cell");
        entry_of_cell[it->second] = e;
    }
    for (std::size_t c = 0; c < cells.size(); ++c)
        generic_offset[c + 1] = generic_offset[c] + g.summand(entry_of_cell[c]).generators();
    IntMatrix p(g.dimension(), g.dimension());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::size_t e = entry_of_cell[c];
        for (std::size_t k = 0; k < g.summand(e).generators(); ++k) p(g.offset(e) + k, generic_offset[c] + k) = 1;
    }
    return p;
}

}  // namespace moncoh
