#include "moncoh/bar.hpp"

#include <algorithm>
#include <sstream>

namespace moncoh {

namespace {

bool odd(long long n) { return (n % 2 + 2) % 2 == 1; }

std::string word_text(const BarWord& w) {
    std::ostringstream os;
    os << "level " << w.level << " [";
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << "|^" << w.seps[i - 1] << ' ';
        os << w.letters[i];
    }
    os << ']';
    return os.str();
}

}  // namespace

Chain FreeBasedDGA::differential(const Chain& c) const {
    Chain out;
    const Monoid& m = monoid();
    for (const auto& [term, coeff] : c) {
        for (const auto& [t, x] : differential(term.second)) out.add(m.multiply(term.first, t.first), t.second, coeff * x);
    }
    return out;
}

Chain FreeBasedDGA::product(const Chain& a, const Chain& b) const {
    Chain out;
    const Monoid& m = monoid();
    for (const auto& [ta, xa] : a)
        for (const auto& [tb, xb] : b) {
            const Element u = m.multiply(ta.first, tb.first);
            for (const auto& [t, x] : product(ta.second, tb.second))
                out.add(m.multiply(u, t.first), t.second, xa * xb * x);
        }
    return out;
}

Element BaseDGA::single_atom(const BarWord& w) const {
    if (w.level != 0 || w.letters.size() != 1 || !w.seps.empty())
        throw std::invalid_argument("base DGA: not a level-0 cell: " + word_text(w));
    return w.letters.front();
}

int BaseDGA::degree(const BarWord& w) const { return atom_degree(single_atom(w)); }

Element BaseDGA::projection(const BarWord& w) const { return atom_projection(single_atom(w)); }

std::vector<BarWord> BaseDGA::basis(int degree) const {
    if (degree > max_degree()) throw std::out_of_range("basis: degree above the truncation");
    std::vector<BarWord> b;
    for (Element a : atoms(degree)) b.push_back(BarWord::atom(a));
    std::sort(b.begin(), b.end());
    return b;
}

Chain BaseDGA::differential(const BarWord& w) const {
    const Element a = single_atom(w);
    if (atom_degree(a) > max_degree()) throw std::out_of_range("differential: degree above the truncation");
    return atom_differential(a);
}

Chain BaseDGA::product(const BarWord& a, const BarWord& b) const {
    const Element x = single_atom(a);
    const Element y = single_atom(b);
    if (atom_degree(x) + atom_degree(y) > max_degree())
        throw std::out_of_range("product: degree above the truncation");
    return atom_product(x, y);
}

Integer BaseDGA::augmentation(const BarWord& w) const { return atom_augmentation(single_atom(w)); }

std::string BaseDGA::render(const BarWord& w) const { return atom_name(single_atom(w)); }

Chain ZmDGA::atom_product(Element a, Element b) const {
    Chain c;
    c.add(monoid_->identity(), BarWord::atom(monoid_->multiply(a, b)), 1);
    return c;
}

std::vector<Element> ZmDGA::atoms(int degree) const {
    if (degree != 0) return {};
    return monoid_->elements();
}

std::shared_ptr<const ZmDGA> zm_dga(std::shared_ptr<const Monoid> monoid) {
    return std::make_shared<ZmDGA>(std::move(monoid));
}

HModule zm_module(std::shared_ptr<const FiniteCommutativeMonoid> monoid) {
    const auto elems = monoid->elements();
    // generators of A(x): pairs (u, v) with uv = x, in lexicographic order
    std::vector<std::vector<std::pair<Element, Element>>> gens(elems.size());
    for (Element u : elems)
        for (Element v : elems) gens[monoid->multiply(u, v)].emplace_back(u, v);
    std::vector<FGAbelianGroup> groups;
    for (const auto& g : gens) groups.push_back(FGAbelianGroup::free(g.size()));
    std::map<std::pair<Element, Element>, IntMatrix> actions;
    for (Element x : elems)
        for (Element y : elems) {
            const Element xy = monoid->multiply(x, y);
            IntMatrix act(gens[xy].size(), gens[x].size());
            for (std::size_t j = 0; j < gens[x].size(); ++j) {
                const auto [u, v] = gens[x][j];
                const std::pair<Element, Element> image{monoid->multiply(y, u), v};
                const auto pos = std::find(gens[xy].begin(), gens[xy].end(), image) - gens[xy].begin();
                act(static_cast<std::size_t>(pos), j) = 1;
            }
            actions.emplace(std::pair{x, y}, std::move(act));
        }
    return HModule::tabular(std::move(monoid), std::move(groups), std::move(actions));
}

BarDGA::BarDGA(std::shared_ptr<const FreeBasedDGA> inner, int max_degree)
    : inner_(std::move(inner)), max_degree_(max_degree) {
    if (!inner_) throw std::invalid_argument("bar: null DGA");
    if (max_degree_ < 0) throw std::invalid_argument("bar: negative truncation degree");
    if (max_degree_ > 0 && inner_->max_degree() < max_degree_ - 1)
        throw std::invalid_argument("bar: inner DGA is truncated below the required degree");
    const BarWord u = inner_->unit();
    if (inner_->degree(u) != 0 || inner_->projection(u) != inner_->monoid().identity())
        throw std::invalid_argument("bar: unit is not a degree-0 generator over the identity");
    if (inner_->augmentation(u) != 1) throw std::invalid_argument("bar: augmentation of the unit is not 1");
    if (auto b = dynamic_cast<const BarDGA*>(inner_.get()))
        base_ = &b->base();
    else if (auto d = dynamic_cast<const BaseDGA*>(inner_.get()))
        base_ = d;
    else
        throw std::invalid_argument("bar: unsupported inner DGA");
}

void BarDGA::check(const BarWord& w) const {
    const int r = level();
    if (w.level != r) throw std::invalid_argument("bar: cell has level " + std::to_string(w.level) + ", expected " + std::to_string(r));
    if (w.letters.empty() ? !w.seps.empty() : w.seps.size() + 1 != w.letters.size())
        throw std::invalid_argument("bar: malformed cell " + word_text(w));
    for (int k : w.seps)
        if (k < 1 || k > r) throw std::invalid_argument("bar: separator out of range in " + word_text(w));
}

std::vector<BarWord> BarDGA::split(const BarWord& w) const {
    check(w);
    const int r = level();
    std::vector<BarWord> pieces;
    if (w.empty()) return pieces;
    BarWord cur{r - 1, {w.letters[0]}, {}};
    for (std::size_t i = 1; i < w.letters.size(); ++i) {
        if (w.seps[i - 1] == r) {
            pieces.push_back(std::move(cur));
            cur = BarWord{r - 1, {w.letters[i]}, {}};
        } else {
            cur.seps.push_back(w.seps[i - 1]);
            cur.letters.push_back(w.letters[i]);
        }
    }
    pieces.push_back(std::move(cur));
    return pieces;
}

BarWord BarDGA::join(const std::vector<BarWord>& pieces) const {
    const int r = level();
    BarWord w{r, {}, {}};
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) w.seps.push_back(r);
        w.letters.insert(w.letters.end(), pieces[i].letters.begin(), pieces[i].letters.end());
        w.seps.insert(w.seps.end(), pieces[i].seps.begin(), pieces[i].seps.end());
    }
    return w;
}

int BarDGA::degree(const BarWord& w) const {
    check(w);
    int d = w.empty() ? 0 : level();
    for (int k : w.seps) d += k;
    for (Element a : w.letters) d += base_->atom_degree(a);
    return d;
}

Element BarDGA::projection(const BarWord& w) const {
    check(w);
    const Monoid& m = monoid();
    Element p = m.identity();
    for (Element a : w.letters) p = m.multiply(p, base_->atom_projection(a));
    return p;
}

std::string BarDGA::render(const BarWord& w) const {
    check(w);
    if (w.empty()) return "[ ]";
    std::string s = "[" + base_->atom_name(w.letters[0]);
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        s += "|^" + std::to_string(w.seps[i - 1]) + " " + base_->atom_name(w.letters[i]);
    return s + "]";
}

std::vector<BarWord> BarDGA::basis(int n) const {
    if (n < 0) return {};
    if (n > max_degree_) throw std::out_of_range("basis: degree " + std::to_string(n) + " above the truncation");
    {
        std::lock_guard lock(mutex_);
        if (auto it = basis_cache_.find(n); it != basis_cache_.end()) return it->second;
    }
    std::vector<std::vector<BarWord>> letters(static_cast<std::size_t>(n));
    for (int d = 0; d + 1 <= n; ++d)
        for (auto& c : inner_->basis(d))
            if (!inner_->is_unit(c)) letters[d].push_back(std::move(c));

    std::vector<BarWord> out;
    std::vector<BarWord> stack;
    auto grow = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(join(stack));
            return;
        }
        for (int d = 0; d + 1 <= remaining; ++d)
            for (const auto& c : letters[d]) {
                stack.push_back(c);
                self(self, remaining - 1 - d);
                stack.pop_back();
            }
    };
    grow(grow, n);
    std::sort(out.begin(), out.end());

    std::lock_guard lock(mutex_);
    basis_cache_.emplace(n, out);
    return out;
}

Chain BarDGA::differential(const BarWord& w) const {
    const int n = degree(w);
    if (n > max_degree_) throw std::out_of_range("differential: degree above the truncation");
    {
        std::lock_guard lock(mutex_);
        if (auto it = differential_cache_.find(w); it != differential_cache_.end()) return it->second;
    }
    const Monoid& m = monoid();
    const auto pieces = split(w);
    const std::size_t p = pieces.size();
    std::vector<int> deg(p);
    // e[i] = i + n_1 + ... + n_i
    std::vector<long long> e(p + 1, 0);
    for (std::size_t i = 0; i < p; ++i) {
        deg[i] = inner_->degree(pieces[i]);
        e[i + 1] = e[i] + 1 + deg[i];
    }

    Chain out;
    auto substitute = [&](std::size_t first, std::size_t last, const Chain& c, const Integer& sign) {
        // replaces pieces[first..last] by each term of c
        for (const auto& [t, x] : c) {
            if (inner_->is_unit(t.second)) continue;
            std::vector<BarWord> word(pieces.begin(), pieces.begin() + static_cast<std::ptrdiff_t>(first));
            word.push_back(t.second);
            word.insert(word.end(), pieces.begin() + static_cast<std::ptrdiff_t>(last) + 1, pieces.end());
            out.add(t.first, join(word), sign * x);
        }
    };

    for (std::size_t i = 0; i < p; ++i) {
        const Integer sign = odd(e[i]) ? 1 : -1;
        substitute(i, i, inner_->differential(pieces[i]), sign);
    }
    if (p > 0 && deg[0] == 0) {
        const Integer eps = inner_->augmentation(pieces[0]);
        out.add(inner_->projection(pieces[0]), join({pieces.begin() + 1, pieces.end()}), eps);
    }
    for (std::size_t i = 0; i + 1 < p; ++i) {
        const Integer sign = odd(e[i + 1]) ? -1 : 1;
        substitute(i, i + 1, inner_->product(pieces[i], pieces[i + 1]), sign);
    }
    if (p > 0 && deg[p - 1] == 0) {
        const Integer eps = inner_->augmentation(pieces[p - 1]);
        out.add(inner_->projection(pieces[p - 1]), join({pieces.begin(), pieces.end() - 1}), odd(e[p]) ? -eps : eps);
    }
    (void)m;

    std::lock_guard lock(mutex_);
    differential_cache_.emplace(w, out);
    return out;
}

Chain BarDGA::product(const BarWord& a, const BarWord& b) const {
    if (degree(a) + degree(b) > max_degree_) throw std::out_of_range("product: degree above the truncation");
    const auto pa = split(a);
    const auto pb = split(b);
    std::vector<int> da, db;
    for (const auto& x : pa) da.push_back(inner_->degree(x));
    for (const auto& x : pb) db.push_back(inner_->degree(x));

    Chain out;
    const Element e = monoid().identity();
    std::vector<BarWord> word;
    auto merge = [&](auto&& self, std::size_t i, std::size_t j, long long weight_b, long long exponent) -> void {
        if (i == pa.size() && j == pb.size()) {
            out.add(e, join(word), odd(exponent) ? -1 : 1);
            return;
        }
        if (i < pa.size()) {
            word.push_back(pa[i]);
            self(self, i + 1, j, weight_b, exponent + (1LL + da[i]) * weight_b);
            word.pop_back();
        }
        if (j < pb.size()) {
            word.push_back(pb[j]);
            self(self, i, j + 1, weight_b + 1 + db[j], exponent);
            word.pop_back();
        }
    };
    merge(merge, 0, 0, 0, 0);
    return out;
}

std::shared_ptr<const BarDGA> bar(std::shared_ptr<const FreeBasedDGA> dga, int max_degree) {
    return std::make_shared<BarDGA>(std::move(dga), max_degree);
}

std::shared_ptr<const BarDGA> iterated_bar(std::shared_ptr<const Monoid> monoid, int r, int max_degree) {
    if (r < 1) throw std::invalid_argument("iterated_bar: level must be at least 1");
    if (max_degree < 0) throw std::invalid_argument("iterated_bar: negative truncation degree");
    std::shared_ptr<const FreeBasedDGA> d = zm_dga(std::move(monoid));
    std::shared_ptr<const BarDGA> b;
    for (int level = 1; level <= r; ++level) {
        b = bar(d, std::max(0, max_degree - (r - level)));
        d = b;
    }
    return b;
}

BarWord make_word(int level, std::vector<Element> letters, std::vector<int> seps) {
    if (letters.empty() ? !seps.empty() : seps.size() + 1 != letters.size())
        throw std::invalid_argument("make_word: need one separator between consecutive letters");
    return BarWord{level, std::move(letters), std::move(seps)};
}

Chain explicit_low_degree_differential(const Monoid& monoid, const BarWord& w) {
    auto mul = [&](Element a, Element b) { return monoid.multiply(a, b); };
    const Element e = monoid.identity();
    Chain c;
    // drops words containing the identity letter
    auto add = [&](Element u, int level, std::vector<Element> letters, std::vector<int> seps, long coeff) {
        for (Element x : letters)
            if (x == e) return;
        c.add(u, BarWord{level, std::move(letters), std::move(seps)}, coeff);
    };
    const auto& x = w.letters;
    const auto& s = w.seps;

    if (w.level == 1) {
        const std::size_t n = x.size();
        if (n == 0) return c;
        std::vector<int> ones(n >= 2 ? n - 2 : 0, 1);
        add(x[0], 1, {x.begin() + 1, x.end()}, ones, 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::vector<Element> y(x.begin(), x.end());
            y[i] = mul(x[i], x[i + 1]);
            y.erase(y.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            add(e, 1, y, ones, (i + 1) % 2 ? -1 : 1);
        }
        add(x[n - 1], 1, {x.begin(), x.end() - 1}, ones, n % 2 ? -1 : 1);
        return c;
    }
    if (w.level == 2 && s == std::vector<int>{2}) {
        add(e, 2, {x[0], x[1]}, {1}, 1);
        add(e, 2, {x[1], x[0]}, {1}, -1);
        return c;
    }
    if (w.level == 2 && s == std::vector<int>{2, 1}) {
        add(x[1], 2, {x[0], x[2]}, {2}, -1);
        add(e, 2, {x[0], mul(x[1], x[2])}, {2}, 1);
        add(x[2], 2, {x[0], x[1]}, {2}, -1);
        add(e, 2, {x[0], x[1], x[2]}, {1, 1}, 1);
        add(e, 2, {x[1], x[0], x[2]}, {1, 1}, -1);
        add(e, 2, {x[1], x[2], x[0]}, {1, 1}, 1);
        return c;
    }
    if (w.level == 2 && s == std::vector<int>{1, 2}) {
        add(x[0], 2, {x[1], x[2]}, {2}, -1);
        add(e, 2, {mul(x[0], x[1]), x[2]}, {2}, 1);
        add(x[1], 2, {x[0], x[2]}, {2}, -1);
        add(e, 2, {x[0], x[1], x[2]}, {1, 1}, -1);
        add(e, 2, {x[0], x[2], x[1]}, {1, 1}, 1);
        add(e, 2, {x[2], x[0], x[1]}, {1, 1}, -1);
        return c;
    }
    if (w.level == 3 && s == std::vector<int>{3}) {
        add(e, 3, {x[0], x[1]}, {2}, -1);
        add(e, 3, {x[1], x[0]}, {2}, -1);
        return c;
    }
    throw std::invalid_argument("explicit_low_degree_differential: no closed formula for " + word_text(w));
}

std::optional<DgaViolation> validate_dga(const FreeBasedDGA& dga, int max_degree) {
    if (max_degree > dga.max_degree()) throw std::out_of_range("validate_dga: degree above the truncation");
    const Monoid& m = dga.monoid();
    std::vector<std::vector<BarWord>> basis;
    for (int d = 0; d <= max_degree; ++d) basis.push_back(dga.basis(d));

    auto projections_ok = [&](const Chain& c, Element target) {
        for (const auto& [t, x] : c)
            if (m.multiply(t.first, dga.projection(t.second)) != target) return false;
        return true;
    };
    auto as_chain = [&](const BarWord& w) {
        Chain c;
        c.add(m.identity(), w, 1);
        return c;
    };
    auto sign = [](long long k) { return Integer(odd(k) ? -1 : 1); };

    for (int d = 0; d <= max_degree; ++d)
        for (const auto& s : basis[d]) {
            if (dga.degree(s) != d) return DgaViolation{"degree", {s}, "basis cell has the wrong degree"};
            const Chain ds = dga.differential(s);
            if (!projections_ok(ds, dga.projection(s)))
                return DgaViolation{"projection", {s}, "differential does not preserve projections"};
            for (const auto& [t, x] : ds)
                if (dga.degree(t.second) != d - 1) return DgaViolation{"degree", {s}, "differential is not of degree -1"};
            if (!dga.differential(ds).empty()) return DgaViolation{"dd=0", {s}, "dd is nonzero on " + dga.render(s)};
            if (d == 1) {
                Integer eps = 0;
                for (const auto& [t, x] : ds) eps += x * dga.augmentation(t.second);
                if (sgn(eps) != 0) return DgaViolation{"augmentation", {s}, "augmentation does not kill boundaries"};
            }
            const BarWord u = dga.unit();
            if (dga.product(u, s) != as_chain(s) || dga.product(s, u) != as_chain(s))
                return DgaViolation{"unit", {s}, "unit law fails on " + dga.render(s)};
        }

    for (int da = 0; da <= max_degree; ++da)
        for (int db = 0; da + db <= max_degree; ++db)
            for (const auto& a : basis[da])
                for (const auto& b : basis[db]) {
                    const Chain ab = dga.product(a, b);
                    if (!projections_ok(ab, m.multiply(dga.projection(a), dga.projection(b))))
                        return DgaViolation{"projection", {a, b}, "product does not multiply projections"};
                    Chain ba = dga.product(b, a);
                    Chain twisted;
                    twisted.add(ba, sign(static_cast<long long>(da) * db));
                    if (ab != twisted) return DgaViolation{"commutativity", {a, b}, "graded commutativity fails"};
                    Chain leibniz = dga.product(dga.differential(as_chain(a)), as_chain(b));
                    leibniz.add(dga.product(as_chain(a), dga.differential(as_chain(b))), sign(da));
                    if (dga.differential(ab) != leibniz) return DgaViolation{"leibniz", {a, b}, "Leibniz rule fails"};
                    for (int dc = 0; da + db + dc <= max_degree; ++dc)
                        for (const auto& c : basis[dc]) {
                            if (dga.is_unit(a) || dga.is_unit(b) || dga.is_unit(c)) continue;
                            if (dga.product(ab, as_chain(c)) != dga.product(as_chain(a), dga.product(b, c)))
                                return DgaViolation{"associativity", {a, b, c}, "product is not associative"};
                        }
                }
    return std::nullopt;
}

}  // namespace moncoh
