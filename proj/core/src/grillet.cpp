#include "moncoh/grillet.hpp"

#include <algorithm>
#include <functional>

namespace moncoh {

namespace {

using Tuple = std::vector<Element>;
using Instance = std::vector<std::pair<long, Tuple>>;

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

std::vector<SparseVec> columns_of(const IntMatrix& m) { return sparse_columns(m); }

void for_each_tuple(const std::vector<Element>& letters, std::size_t n, const std::function<void(const Tuple&)>& fn) {
    Tuple t(n);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) return fn(t);
        for (Element x : letters) {
            t[pos] = x;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

// The symmetry identities of degree n, one instance per argument tuple.
std::vector<Instance> symmetry_instances(const Monoid& m, int n) {
    std::vector<Instance> out;
    const auto letters = m.nonunit_elements();
    switch (n) {
        case 1:
            break;
        case 2:
            for_each_tuple(letters, 2, [&](const Tuple& a) { out.push_back({{1, {a[0], a[1]}}, {-1, {a[1], a[0]}}}); });
            break;
        case 3:
            for_each_tuple(letters, 3, [&](const Tuple& a) {
                const Element x = a[0], y = a[1], z = a[2];
                out.push_back({{1, {x, y, z}}, {1, {z, y, x}}});
                out.push_back({{1, {x, y, z}}, {1, {y, z, x}}, {1, {z, x, y}}});
            });
            break;
        case 4:
            for_each_tuple(letters, 2, [&](const Tuple& a) { out.push_back({{1, {a[0], a[1], a[1], a[0]}}}); });
            for_each_tuple(letters, 4, [&](const Tuple& a) {
                const Element x = a[0], y = a[1], z = a[2], t = a[3];
                out.push_back({{1, {t, z, y, x}}, {1, {x, y, z, t}}});
                out.push_back({{1, {x, y, z, t}}, {-1, {y, z, t, x}}, {1, {z, t, x, y}}, {-1, {t, x, y, z}}});
                out.push_back({{1, {x, y, z, t}}, {-1, {y, x, z, t}}, {1, {y, z, x, t}}, {-1, {y, z, t, x}}});
            });
            break;
        default:
            throw std::out_of_range("symmetric cochains exist in degrees 1 to 4");
    }
    return out;
}

Element product(const Monoid& m, const Tuple& t) {
    Element p = m.identity();
    for (Element x : t) p = m.multiply(p, x);
    return p;
}

bool has_identity(const Monoid& m, const Tuple& t) {
    return std::find(t.begin(), t.end(), m.identity()) != t.end();
}

}  // namespace

bool SymmetricCochainLattice::contains(std::span<const Integer> v) const { return lattice.contains(v); }

AbGroupInvariants SymmetricCochainLattice::invariants() const {
    return subquotient_invariants(lattice, columns_of(ambient.relations()));
}

SymmetricCochainLattice symmetric_cochains(std::shared_ptr<const Monoid> monoid, const HModule& a, int n) {
    if (n < 1 || n > 4) throw std::out_of_range("symmetric_cochains: degree must be between 1 and 4");
    if (!monoid->is_finite()) throw std::invalid_argument("symmetric_cochains: the monoid must be finite");
    SymmetricCochainLattice s;
    s.degree = n;
    s.shape = standard_shape(monoid, 1, n);
    s.ambient = s.shape.group(a);
    const std::size_t f = 0;

    std::vector<FGAbelianGroup> groups;
    std::vector<std::pair<std::size_t, Instance>> rows;  // (row offset, instance)
    std::size_t nrows = 0;
    for (auto& inst : symmetry_instances(*monoid, n)) {
        const Element p = product(*monoid, inst.front().second);
        groups.push_back(a.group(p));
        rows.emplace_back(nrows, std::move(inst));
        nrows += groups.back().generators();
    }
    s.constraints = IntMatrix(nrows, s.ambient.dimension());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& [off, inst] = rows[k];
        for (const auto& [c, t] : inst) {
            if (has_identity(*monoid, t)) continue;
            const std::size_t e = *s.shape.find(f, t);
            for (std::size_t i = 0; i < groups[k].generators(); ++i) s.constraints(off + i, s.ambient.offset(e) + i) += c;
        }
    }
    s.constraint_relations = CochainGroup(std::move(groups)).relations();
    s.lattice = preimage(s.constraints, s.constraint_relations);
    return s;
}

ExplicitCoboundary grillet_formula(std::shared_ptr<const Monoid> monoid, int n) {
    if (n < 1 || n > 3) throw std::out_of_range("grillet coboundary: degree must be 1, 2 or 3");
    ExplicitCoboundary d{standard_shape(monoid, 1, n), standard_shape(monoid, 1, n + 1), {}};
    const Monoid* m = monoid.get();
    const Element e = m->identity();
    auto mul = [m](Element x, Element y) { return m->multiply(x, y); };
    d.terms = [=](const CochainShape::Entry& entry) -> std::vector<FormulaTerm> {
        const auto& a = entry.tuple;
        if (n == 1) {
            const Element x = a[0], y = a[1];
            return {{-1, x, 0, {y}}, {1, e, 0, {mul(x, y)}}, {-1, y, 0, {x}}};
        }
        if (n == 2) {
            const Element x = a[0], y = a[1], z = a[2];
            return {{-1, x, 0, {y, z}}, {1, e, 0, {mul(x, y), z}}, {-1, e, 0, {x, mul(y, z)}}, {1, z, 0, {x, y}}};
        }
        const Element x = a[0], y = a[1], z = a[2], t = a[3];
        return {{-1, x, 0, {y, z, t}},
                {1, e, 0, {mul(x, y), z, t}},
                {-1, e, 0, {x, mul(y, z), t}},
                {1, e, 0, {x, y, mul(z, t)}},
                {-1, t, 0, {x, y, z}}};
    };
    return d;
}

IntMatrix grillet_coboundary(std::shared_ptr<const Monoid> monoid, const HModule& a, int n) {
    return realize(grillet_formula(std::move(monoid), n), a);
}

AbGroupInvariants grillet_cohomology(std::shared_ptr<const Monoid> monoid, const HModule& a, int n) {
    if (n < 1 || n > 3) throw std::out_of_range("grillet_cohomology: degree must be 1, 2 or 3");
    const auto cn = symmetric_cochains(monoid, a, n);
    const IntMatrix d = grillet_coboundary(monoid, a, n);
    const IntMatrix rel_next = standard_shape(monoid, 1, n + 1).group(a).relations();
    const Lattice cycles =
        preimage(vstack(cn.constraints, d), block_diag(cn.constraint_relations, rel_next));
    auto image = columns_of(cn.ambient.relations());
    if (n > 1) {
        const auto prev = symmetric_cochains(monoid, a, n - 1);
        const IntMatrix dp = grillet_coboundary(monoid, a, n - 1);
        for (auto& col : columns_of(dp * prev.lattice.basis_matrix())) image.push_back(std::move(col));
    }
    return subquotient_invariants(cycles, image);
}

namespace {

// Embedding of the component `component` of `target` with sign `sign`.
IntMatrix component_embedding(const CochainShape& source, const CochainShape& target, const std::string& component,
                              long sign, const HModule& a) {
    const CochainGroup sg = source.group(a);
    const CochainGroup tg = target.group(a);
    const std::size_t c = target.component_index(component);
    IntMatrix out(tg.dimension(), sg.dimension());
    for (std::size_t e = 0; e < source.entries().size(); ++e) {
        const std::size_t te = *target.find(c, source.entries()[e].tuple);
        for (std::size_t i = 0; i < sg.summand(e).generators(); ++i) out(tg.offset(te) + i, sg.offset(e) + i) = sign;
    }
    return out;
}

std::string describe(const CochainShape& shape, std::size_t entry) {
    const auto& e = shape.entries()[entry];
    std::string s = shape.components()[e.component].name + "(";
    for (std::size_t i = 0; i < e.tuple.size(); ++i) s += (i ? "," : "") + std::to_string(e.tuple[i]);
    return s + ")";
}

bool lattice_contains_all(const Lattice& l, const std::vector<SparseVec>& vs) {
    return std::all_of(vs.begin(), vs.end(), [&](const SparseVec& v) { return l.contains(v); });
}

}  // namespace

InclusionReport inclusion_chainmap(std::shared_ptr<const Monoid> monoid, const HModule& a) {
    InclusionReport rep;
    std::vector<SymmetricCochainLattice> sym;
    for (int n = 1; n <= 4; ++n) sym.push_back(symmetric_cochains(monoid, a, n));

    const std::vector<std::pair<std::string, long>> spec = {{"f", 1}, {"f", -1}, {"g", 1}, {"h", -1}};
    std::vector<CochainShape> level3;
    for (int n = 3; n <= 6; ++n) level3.push_back(standard_shape(monoid, 3, n));
    for (int k = 0; k < 4; ++k)
        rep.maps.push_back(component_embedding(sym[k].shape, level3[k], spec[k].first, spec[k].second, a));

    // squares: d^{k+3} i_{k+1} = i_{k+2} delta^{k+1} on symmetric cochains
    std::vector<IntMatrix> partial, delta;
    for (int n = 3; n <= 5; ++n) partial.push_back(realize(explicit_coboundary(monoid, 3, n), a));
    for (int n = 1; n <= 3; ++n) delta.push_back(grillet_coboundary(monoid, a, n));
    for (int k = 0; k < 3 && rep.commutes; ++k) {
        const IntMatrix basis = sym[k].lattice.basis_matrix();
        const IntMatrix diff = partial[k] * rep.maps[k] * basis - rep.maps[k + 1] * delta[k] * basis;
        const CochainGroup tg = level3[k + 1].group(a);
        for (std::size_t j = 0; j < diff.cols() && rep.commutes; ++j) {
            const auto col = diff.column(j);
            for (std::size_t e = 0; e < tg.summands(); ++e) {
                std::span<const Integer> block(col.data() + tg.offset(e), tg.summand(e).generators());
                if (!tg.summand(e).is_zero(block)) {
                    rep.commutes = false;
                    rep.failure = "square at degree " + std::to_string(k + 1) + " fails at " +
                                  describe(level3[k + 1], e);
                    break;
                }
            }
        }
    }

    const IntMatrix rel4 = level3[1].group(a).relations();
    const IntMatrix rel5 = level3[2].group(a).relations();
    auto ambient_rel = [&](int n) { return standard_shape(monoid, 1, n).group(a).relations(); };

    // degree 1: i_1 ker delta^1 = ker d^3 (no coboundaries on either side)
    {
        const Lattice zg = preimage(delta[0], ambient_rel(2));
        const Lattice z3 = preimage(partial[0], rel4);
        rep.degree1_isomorphism = lattice_contains_all(z3, columns_of(rep.maps[0] * zg.basis_matrix())) &&
                                  lattice_contains_all(zg, z3.basis());
    }
    // degree 2: i_2 ker delta^2 + rel = ker d^4 and i_2 im delta^1 + rel = im d^3 + rel
    {
        const Lattice zg = preimage(vstack(sym[1].constraints, delta[1]),
                                    block_diag(sym[1].constraint_relations, ambient_rel(3)));
        const Lattice z4 = preimage(partial[1], rel5);
        auto image_z = columns_of(rep.maps[1] * zg.basis_matrix());
        for (auto& c : columns_of(rel4)) image_z.push_back(c);
        const Lattice iz(rel4.rows(), image_z);
        auto bg = columns_of(rep.maps[1] * delta[0] * sym[0].lattice.basis_matrix());
        for (auto& c : columns_of(rel4)) bg.push_back(c);
        auto b4 = columns_of(partial[0]);
        for (auto& c : columns_of(rel4)) b4.push_back(c);
        const Lattice lbg(rel4.rows(), bg), lb4(rel4.rows(), b4);
        rep.degree2_isomorphism = lattice_contains_all(z4, iz.basis()) && lattice_contains_all(iz, z4.basis()) &&
                                  lattice_contains_all(lb4, lbg.basis()) && lattice_contains_all(lbg, lb4.basis());
    }
    // degree 3: z in Z^3_G with i_3 z in im d^4 + rel  =>  z in delta^2 C^2_G + rel
    {
        const Lattice zg = preimage(vstack(sym[2].constraints, delta[2]),
                                    block_diag(sym[2].constraint_relations, ambient_rel(4)));
        const IntMatrix zb = zg.basis_matrix();
        const IntMatrix coords = preimage_lattice(rep.maps[2] * zb, hconcat(partial[1], rel5));
        auto bg = columns_of(delta[1] * sym[1].lattice.basis_matrix());
        for (auto& c : columns_of(ambient_rel(3))) bg.push_back(c);
        const Lattice lbg(zb.rows(), bg);
        rep.degree3_injective = lattice_contains_all(lbg, columns_of(zb * coords));
    }
    return rep;
}

EleobResult eleob_equivalent(std::shared_ptr<const Monoid> monoid, const HModule& a, std::span<const Integer> f) {
    const CochainShape shape = standard_shape(monoid, 1, 3);
    const CochainGroup g = shape.group(a);
    if (f.size() != g.dimension()) throw std::invalid_argument("eleob_equivalent: cochain has the wrong dimension");
    auto value = [&](const Tuple& t, std::vector<Integer>& acc, long c) {
        if (has_identity(*monoid, t)) return;
        const std::size_t e = *shape.find(0, t);
        for (std::size_t i = 0; i < g.summand(e).generators(); ++i) acc[i] += c * f[g.offset(e) + i];
    };
    auto holds = [&](const std::vector<Instance>& insts) {
        for (const auto& inst : insts) {
            const auto& grp = a.group(product(*monoid, inst.front().second));
            std::vector<Integer> acc(grp.generators());
            for (const auto& [c, t] : inst) value(t, acc, c);
            if (!grp.is_zero(acc)) return false;
        }
        return true;
    };
    std::vector<Instance> c1, c2, c3;
    for_each_tuple(monoid->nonunit_elements(), 3, [&](const Tuple& t) {
        const Element x = t[0], y = t[1], z = t[2];
        c1.push_back({{1, {x, y, z}}, {1, {z, y, x}}});
        c1.push_back({{1, {x, y, z}}, {1, {y, z, x}}, {1, {z, x, y}}});
        c2.push_back({{1, {x, y, z}}, {-1, {y, x, z}}, {1, {y, z, x}}});
        c3.push_back({{1, {x, y, z}}, {-1, {x, z, y}}, {1, {z, x, y}}});
    });
    return {holds(c1), holds(c2), holds(c3)};
}

}  // namespace moncoh
