#include "moncoh/cyclic.hpp"

#include "moncoh/cohomology.hpp"

#include <algorithm>
#include <numeric>

namespace moncoh {

namespace {

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

BarWord level1(std::vector<Element> letters) {
    std::vector<int> seps(letters.empty() ? 0 : letters.size() - 1, 1);
    return BarWord{1, std::move(letters), std::move(seps)};
}

Chain translate(const Chain& c, Element u, const Monoid& m) {
    Chain out;
    for (const auto& [t, x] : c) out.add(m.multiply(u, t.first), t.second, x);
    return out;
}

}  // namespace

SmallResolution::SmallResolution(std::shared_ptr<const Monoid> monoid, int max_degree)
    : monoid_(std::move(monoid)), max_degree_(max_degree) {
    if (max_degree_ < 0) throw std::invalid_argument("small resolution: negative truncation degree");
    if (auto f = std::dynamic_pointer_cast<const FiniteCommutativeMonoid>(monoid_)) {
        cyclic_ = f->cyclic_parameters();
        if (!cyclic_) throw std::invalid_argument("small resolution: monoid was not built by make_cyclic");
    } else if (!std::dynamic_pointer_cast<const InfiniteCyclicMonoid>(monoid_)) {
        throw std::invalid_argument("small resolution: monoid must be cyclic");
    }
}

int SmallResolution::index() const {
    if (!cyclic_) throw std::logic_error("small resolution over N has no index");
    return cyclic_->first;
}

int SmallResolution::period() const {
    if (!cyclic_) throw std::logic_error("small resolution over N has no period");
    return cyclic_->second;
}

Element SmallResolution::atom_projection(Element a) const {
    if (!cyclic_) return a;
    const auto [m, q] = *cyclic_;
    const Element k = a / 2;
    return cyclic_reduce(m, q, k * m + (a % 2));
}

std::string SmallResolution::atom_name(Element a) const {
    return std::string(a % 2 ? "w" : "v") + std::to_string(a / 2);
}

Chain SmallResolution::atom_differential(Element a) const {
    Chain c;
    if (!cyclic_ || a % 2 == 1 || a == 0) return c;
    const auto [m, q] = *cyclic_;
    const BarWord wk = BarWord::atom(a - 1);
    c.add(m + q - 1, wk, m + q);
    if (m > 0) c.add(m - 1, wk, -m);
    return c;
}

Chain SmallResolution::atom_product(Element a, Element b) const {
    Chain c;
    if (a % 2 == 1 && b % 2 == 1) return c;
    if (!cyclic_ && a + b > 1) return c;
    c.add(monoid_->identity(), BarWord::atom(a + b),
          binomial(static_cast<unsigned long>(a / 2 + b / 2), static_cast<unsigned long>(a / 2)));
    return c;
}

std::vector<Element> SmallResolution::atoms(int degree) const {
    if (degree < 0 || degree > max_degree_) return {};
    if (!cyclic_ && degree > 1) return {};
    return {degree};
}

Chain SmallResolution::bullet(const Chain& a, const Chain& b) const {
    Chain c;
    for (const auto& [ta, xa] : a)
        for (const auto& [tb, xb] : b) {
            const Element p = single_atom(ta.second), r = single_atom(tb.second);
            if (p % 2 == 1 && r % 2 == 1) continue;
            if (!cyclic_ && p + r > 1) continue;
            c.add(monoid_->multiply(ta.first, tb.first), BarWord::atom(p + r), xa * xb);
        }
    return c;
}

std::shared_ptr<const SmallResolution> small_resolution(int m, int q, int max_degree) {
    return std::make_shared<SmallResolution>(make_cyclic(m, q), max_degree);
}

std::shared_ptr<const SmallResolution> small_resolution_inf(int max_degree) {
    return std::make_shared<SmallResolution>(make_infinite_cyclic(), max_degree);
}

std::shared_ptr<const SmallResolution> small_resolution(std::shared_ptr<const Monoid> monoid, int max_degree) {
    return std::make_shared<SmallResolution>(std::move(monoid), max_degree);
}

CyclicContraction::CyclicContraction(std::shared_ptr<const SmallResolution> r) : r_(std::move(r)) {
    if (!r_->infinite()) {
        m_ = r_->index();
        q_ = r_->period();
    }
}

Chain CyclicContraction::letter(Element x) const {
    Chain c;
    if (x != monoid().identity()) c.add(monoid().identity(), level1({x}), 1);
    return c;
}

Chain CyclicContraction::concat(const Chain& a, const Chain& b) const {
    Chain c;
    for (const auto& [ta, xa] : a)
        for (const auto& [tb, xb] : b) {
            std::vector<Element> letters = ta.second.letters;
            letters.insert(letters.end(), tb.second.letters.begin(), tb.second.letters.end());
            c.add(monoid().multiply(ta.first, tb.first), level1(std::move(letters)), xa * xb);
        }
    return c;
}

Chain CyclicContraction::f(const BarWord& cell) const {
    const Monoid& mon = monoid();
    const Element e = mon.identity();
    Chain c;
    if (cell.level != 1) throw std::invalid_argument("f: expected a cell of B(ZC)");
    const auto& x = cell.letters;
    if (std::find(x.begin(), x.end(), e) != x.end()) return c;
    if (x.empty()) {
        c.add(e, SmallResolution::v(0), 1);
        return c;
    }
    if (x.size() == 1) {
        c.add(x[0] - 1, SmallResolution::w(0), x[0]);
        return c;
    }
    if (r_->infinite()) return c;
    if (x[0] + x[1] >= m_ + q_) {
        const Element xy = mon.multiply(x[0], x[1]);
        const Element s = cyclic_carry(m_, q_, x[0], x[1]);
        for (Element i = 0; i < s; ++i) c.add(cyclic_reduce(m_, q_, xy - m_ + i * q_), SmallResolution::v(1), 1);
    }
    if (x.size() == 2 || c.empty()) return c;
    return r_->bullet(c, f(level1({x.begin() + 2, x.end()})));
}

Chain CyclicContraction::f(const Chain& c) const {
    Chain out;
    for (const auto& [t, x] : c) out.add(translate(f(t.second), t.first, monoid()), x);
    return out;
}

Chain CyclicContraction::g(const BarWord& generator) const {
    const Monoid& mon = monoid();
    const Element e = mon.identity();
    const Element a = r_->single_atom(generator);
    Chain c;
    if (a == 0) {
        c.add(e, level1({}), 1);
        return c;
    }
    if (a % 2 == 1) return concat(g(BarWord::atom(a - 1)), letter(1));
    const Chain gw = g(BarWord::atom(a - 1));
    for (Element t = 0; t < m_ + q_; ++t) c.add(translate(concat(gw, letter(t)), m_ + q_ - t - 1, mon));
    for (Element s = 0; s < m_; ++s) c.add(translate(concat(gw, letter(s)), m_ - s - 1, mon), Integer(-1));
    return c;
}

Chain CyclicContraction::g(const Chain& c) const {
    Chain out;
    for (const auto& [t, x] : c) out.add(translate(g(t.second), t.first, monoid()), x);
    return out;
}

Chain CyclicContraction::phi(const BarWord& cell) const {
    const Monoid& mon = monoid();
    const Element e = mon.identity();
    Chain c;
    const auto& x = cell.letters;
    if (x.empty() || std::find(x.begin(), x.end(), e) != x.end()) return c;
    Chain px;
    for (Element t = 0; t < x[0]; ++t) px.add(translate(concat(letter(1), letter(t)), x[0] - t - 1, mon));
    if (x.size() == 1) return px;
    Chain rest;
    rest.add(e, level1({x.begin() + 1, x.end()}), 1);
    c = concat(px, rest);
    if (!r_->infinite()) {
        const Chain gfxy = g(f(level1({x[0], x[1]})));
        c.add(concat(gfxy, phi(level1({x.begin() + 2, x.end()}))));
    }
    return c;
}

Chain CyclicContraction::phi(const Chain& c) const {
    Chain out;
    for (const auto& [t, x] : c) out.add(translate(phi(t.second), t.first, monoid()), x);
    return out;
}

Chain CyclicContraction::gf_closed_formula(Element x, Element y) const {
    if (r_->infinite()) throw std::logic_error("closed formula for gf is stated for finite cyclic monoids");
    const Monoid& mon = monoid();
    Chain c;
    if (x + y < m_ + q_) return c;
    const Element s = cyclic_carry(m_, q_, x, y);
    const Element r = x + y - m_ - s * q_;
    auto term = [&](Element u, Element t, long sign) {
        c.add(translate(concat(letter(1), letter(t)), cyclic_reduce(m_, q_, u), mon), Integer(sign));
    };
    for (Element t = x + y - m_ - q_; t <= m_ + q_ - 1; ++t) term(x + y - t - 1, t, 1);
    for (Element t = 0; t <= r - 1; ++t) term(m_ + r - t - 1, t, 1);
    for (Element t = 0; t <= m_ - 1; ++t) term(m_ + r - t - 1, t, -1);
    for (Element i = 1; i <= s - 1; ++i)
        for (Element t = (i - 1) * q_ + r; t <= i * q_ + r - 1; ++t) term(m_ + i * q_ + r - t - 1, t, 1);
    for (Element i = 1; i <= s - 1; ++i)
        for (Element t = m_; t <= m_ + q_ - 1; ++t) term(m_ + i * q_ + r - t - 1, t, 1);
    return c;
}

bool ContractionReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ContractionCheck& c) { return c.passed; });
}

const ContractionCheck& ContractionReport::check(const std::string& identity) const {
    for (const auto& c : checks)
        if (c.identity == identity) return c;
    throw std::out_of_range("no contraction check named " + identity);
}

namespace {

class Checker {
public:
    explicit Checker(ContractionReport& rep) : rep_(rep) {}

    void record(const std::string& identity, bool ok, const std::string& witness) {
        auto it = std::find_if(rep_.checks.begin(), rep_.checks.end(),
                               [&](const ContractionCheck& c) { return c.identity == identity; });
        if (it == rep_.checks.end()) {
            rep_.checks.push_back({identity, true, 0, std::nullopt});
            it = rep_.checks.end() - 1;
        }
        ++it->checked;
        if (!ok && it->passed) {
            it->passed = false;
            it->witness = witness;
        }
    }

private:
    ContractionReport& rep_;
};

void run_checks(const CyclicContraction& k, const BarDGA& b, const std::vector<BarWord>& cells,
                const std::vector<BarWord>& gens, int max_degree, ContractionReport& rep) {
    const SmallResolution& r = k.resolution();
    const Element e = k.monoid().identity();
    Checker chk(rep);
    auto single = [&](const BarWord& w) {
        Chain c;
        c.add(e, w, 1);
        return c;
    };

    for (const auto& a : gens) {
        const std::string name = r.render(a);
        chk.record("fg = id", k.f(k.g(a)) == single(a), name);
        chk.record("Phi g = 0", k.phi(k.g(a)).empty(), name);
        chk.record("g chain map", k.g(r.differential(a)) == b.differential(k.g(a)), name);
    }
    for (const auto& s : cells) {
        const std::string name = b.render(s);
        const Chain ps = k.phi(s);
        const Chain lhs = b.differential(ps) + k.phi(b.differential(s));
        chk.record("d Phi + Phi d = gf - id", lhs == k.g(k.f(s)) - single(s), name);
        chk.record("f Phi = 0", k.f(ps).empty(), name);
        chk.record("Phi Phi = 0", k.phi(ps).empty(), name);
        chk.record("f chain map", k.f(b.differential(s)) == r.differential(k.f(s)), name);
    }
    for (const auto& s : cells)
        for (const auto& t : cells) {
            if (b.degree(s) + b.degree(t) > max_degree) continue;
            chk.record("f multiplicative", k.f(b.product(s, t)) == r.product(k.f(s), k.f(t)),
                       b.render(s) + " * " + b.render(t));
        }
    for (const auto& a : gens)
        for (const auto& c : gens) {
            if (r.degree(a) + r.degree(c) > max_degree) continue;
            chk.record("g multiplicative", k.g(r.product(a, c)) == b.product(k.g(a), k.g(c)),
                       r.render(a) + " * " + r.render(c));
        }
}

}  // namespace

ContractionReport verify_contraction(int m, int q, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("verify_contraction: negative degree");
    auto r = small_resolution(m, q, max_degree + 1);
    const CyclicContraction k(r);
    auto b = bar(zm_dga(r->monoid_ptr()), max_degree + 1);
    std::vector<BarWord> cells, gens;
    for (int n = 0; n <= max_degree; ++n) {
        for (auto& w : b->basis(n)) cells.push_back(w);
        for (auto& w : r->basis(n)) gens.push_back(w);
    }
    ContractionReport rep;
    run_checks(k, *b, cells, gens, max_degree, rep);
    const auto letters = r->monoid().nonunit_elements();
    for (Element x : letters)
        for (Element y : letters) {
            if (x + y < m + q) continue;
            if (k.g(k.f(level1({x, y}))) != k.gf_closed_formula(x, y))
                rep.closed_formula_mismatches.push_back(b->render(level1({x, y})));
        }
    return rep;
}

ContractionReport verify_contraction_inf(int max_degree, int entry_bound) {
    if (max_degree < 0 || entry_bound < 1) throw std::invalid_argument("verify_contraction_inf: bad bounds");
    auto r = small_resolution_inf(max_degree + 1);
    const CyclicContraction k(r);
    auto b = bar(zm_dga(r->monoid_ptr()), max_degree + 1);
    std::vector<BarWord> cells{level1({})}, gens;
    std::vector<std::vector<Element>> layer{{}};
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<std::vector<Element>> next;
        for (const auto& w : layer)
            for (Element x = 1; x <= entry_bound; ++x) {
                auto v = w;
                v.push_back(x);
                cells.push_back(level1(v));
                next.push_back(std::move(v));
            }
        layer = std::move(next);
    }
    for (int n = 0; n <= std::min(max_degree, 1); ++n) gens.push_back(BarWord::atom(n));
    ContractionReport rep;
    run_checks(k, *b, cells, gens, max_degree, rep);
    return rep;
}

namespace {

// (m+q)((m+q-1)_* a) - m((m-1)_* a) on A(x)
IntMatrix cyclic_operator(int m, int q, Element x, const HModule& a) {
    IntMatrix d = a.action(x, m + q - 1);
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) *= m + q;
    if (m > 0) {
        const IntMatrix s = a.action(x, m - 1);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) -= m * s(i, j);
    }
    return d;
}

IntMatrix scaled(const IntMatrix& x, long c) {
    IntMatrix y = x;
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) *= c;
    return y;
}

void place(IntMatrix& target, const IntMatrix& block, std::size_t row, std::size_t col) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) target(row + i, col + j) += block(i, j);
}

void check_cyclic_module(int m, int q, const HModule& a) {
    auto f = dynamic_cast<const FiniteCommutativeMonoid*>(&a.monoid());
    if (!f || f->cyclic_parameters() != std::pair{m, q})
        throw std::invalid_argument("coefficient module does not live over C(" + std::to_string(m) + "," +
                                    std::to_string(q) + ")");
}

}  // namespace

std::pair<AbGroupInvariants, AbGroupInvariants> leech_groups_cyclic(int m, int q, int k, const HModule& a) {
    check_cyclic_module(m, q, a);
    if (k < 0) throw std::invalid_argument("leech_groups_cyclic: negative k");
    const Element src = cyclic_reduce(m, q, static_cast<Element>(k) * m + 1);
    const Element tgt = cyclic_reduce(m, q, static_cast<Element>(k) * m + m);
    const IntMatrix d = cyclic_operator(m, q, src, a);
    const IntMatrix rs = a.group(src).relations(), rt = a.group(tgt).relations();
    const auto ker = cochain_cohomology(IntMatrix(d.cols(), 0), d, rs, rt);
    const auto coker = cochain_cohomology(d, IntMatrix(0, d.rows()), rt, IntMatrix(0, 0));
    return {ker, coker};
}

SmallComplex small_cochain_complex(int m, int q, int level, const HModule& a) {
    check_cyclic_module(m, q, a);
    if (level != 2 && level != 3) throw std::invalid_argument("small_cochain_complex: level must be 2 or 3");
    const Element one = cyclic_reduce(m, q, 1), em = cyclic_reduce(m, q, m), em1 = cyclic_reduce(m, q, m + 1);
    const Element two = cyclic_reduce(m, q, 2), two_m = cyclic_reduce(m, q, 2 * m);
    const auto& g1 = a.group(one);
    const auto& gm = a.group(em);
    const auto& gm1 = a.group(em1);
    const auto& g2 = a.group(two);
    const auto& g2m = a.group(two_m);

    SmallComplex c;
    std::vector<FGAbelianGroup> top{g2m, gm1, gm1};
    if (level == 3) top.push_back(g2);
    c.relations = {g1.relations(), gm.relations(), CochainGroup({gm1, g2}).relations(), CochainGroup(top).relations()};

    const std::size_t na = gm1.generators(), nb = g2.generators();
    c.coboundaries.push_back(scaled(cyclic_operator(m, q, one, a), -1));
    c.coboundaries.emplace_back(na + nb, gm.generators());

    const IntMatrix da = cyclic_operator(m, q, em1, a);  // A(m+1) -> A(2m)
    const IntMatrix db = cyclic_operator(m, q, two, a);  // A(2) -> A(m+1)
    const IntMatrix id = IntMatrix::identity(na);
    const std::size_t rows = g2m.generators() + 2 * na + (level == 3 ? nb : 0);
    IntMatrix d3(rows, na + nb);
    const long s = level == 2 ? 1 : -1;
    place(d3, scaled(da, -s), 0, 0);
    place(d3, scaled(id, s), g2m.generators(), 0);
    place(d3, scaled(db, -s), g2m.generators(), na);
    place(d3, scaled(id, -s), g2m.generators() + na, 0);
    place(d3, scaled(db, -s), g2m.generators() + na, na);
    if (level == 3) place(d3, scaled(IntMatrix::identity(nb), -2), g2m.generators() + 2 * na, na);
    c.coboundaries.push_back(std::move(d3));
    return c;
}

CyclicLevel2Groups level2_groups_cyclic(int m, int q, const HModule& a) {
    const SmallComplex c = small_cochain_complex(m, q, 2, a);
    CyclicLevel2Groups g;
    g.h2 = cochain_cohomology(IntMatrix(c.relations[0].rows(), 0), c.coboundaries[0], c.relations[0], c.relations[1]);
    g.h3 = cochain_cohomology(c.coboundaries[0], c.coboundaries[1], c.relations[1], c.relations[2]);
    g.h4 = cochain_cohomology(c.coboundaries[1], c.coboundaries[2], c.relations[2], c.relations[3]);
    return g;
}

AbGroupInvariants level3_top(int m, int q, const HModule& a) {
    const SmallComplex c = small_cochain_complex(m, q, 3, a);
    return cochain_cohomology(c.coboundaries[1], c.coboundaries[2], c.relations[2], c.relations[3]);
}

AbGroupInvariants closed_form_top(long q, const FGAbelianGroup& g, int r) {
    if (q < 1) throw std::invalid_argument("closed_form_top: period must be positive");
    if (r < 2) throw std::invalid_argument("closed_form_top: level must be at least 2");
    const long n = r == 2 ? q * std::gcd(2L, q) : std::gcd(2L, q);
    std::vector<Integer> orders;
    for (const auto& t : g.invariants().torsion) {
        Integer d;
        mpz_gcd_ui(d.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(n));
        orders.push_back(d);
    }
    return canonical_invariants(orders);
}

AbGroupInvariants infinite_cyclic_groups(int r, int n, const HModule& a) {
    if (r < 1) throw std::invalid_argument("infinite_cyclic_groups: level must be at least 1");
    if (n < 0) throw std::invalid_argument("infinite_cyclic_groups: negative degree");
    if (r >= 2 && n > r + 2) throw std::out_of_range("infinite_cyclic_groups: degree above r + 2");
    const int top = n + 1;
    std::shared_ptr<const FreeBasedDGA> d = small_resolution(a.monoid_ptr(), std::max(top - (r - 1), 1));
    for (int j = 1; j <= r - 1; ++j) d = bar(d, top - (r - 1 - j));
    return cohomology_at(build_cochain_complex(d, a, top), n);
}

}  // namespace moncoh
