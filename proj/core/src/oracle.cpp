#include "moncoh/oracle.hpp"

#include "moncoh/truncated.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace moncoh {

namespace {

long mod(long v, long m) {
    v %= m;
    return v < 0 ? v + m : v;
}

// Finite cochains of one shape as a mixed-radix space.
struct Space {
    std::vector<long> radix;                // per coordinate
    std::vector<std::size_t> entry_offset;  // per entry, into radix
    std::uint64_t size = 1;

    Space(const CochainShape& shape, const HModule& a) {
        entry_offset.push_back(0);
        for (const auto& e : shape.entries()) {
            const auto& g = a.group(shape.projection(e));
            auto orders = g.diagonal_orders();
            if (!orders) throw std::invalid_argument("brute force: coefficient groups need a diagonal presentation");
            for (const auto& o : *orders) {
                if (sgn(o) == 0) throw std::invalid_argument("brute force: coefficient groups must be finite");
                if (!o.fits_slong_p() || o > static_cast<long>(brute_force_cap))
                    throw std::length_error("brute force: cochain group exceeds the enumeration cap");
                radix.push_back(o.get_si());
                size *= static_cast<std::uint64_t>(radix.back());
                if (size > brute_force_cap)
                    throw std::length_error("brute force: cochain group exceeds the enumeration cap");
            }
            entry_offset.push_back(radix.size());
        }
    }

    std::uint64_t encode(const std::vector<long>& v) const {
        std::uint64_t code = 0;
        for (std::size_t i = radix.size(); i-- > 0;) code = code * static_cast<std::uint64_t>(radix[i]) + mod(v[i], radix[i]);
        return code;
    }
    void decode(std::uint64_t code, std::vector<long>& v) const {
        v.resize(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
            v[i] = static_cast<long>(code % static_cast<std::uint64_t>(radix[i]));
            code /= static_cast<std::uint64_t>(radix[i]);
        }
    }
};

struct Term {
    long coeff;
    std::size_t source_entry;
    std::vector<std::vector<long>> action;  // rows: target coords, cols: source coords
};

// Pointwise evaluation of an explicit coboundary.
class Evaluator {
public:
    Evaluator(const ExplicitCoboundary& d, const HModule& a, const Space& src, const Space& tgt)
        : src_(src), tgt_(tgt) {
        const Monoid& m = d.source.monoid();
        for (const auto& te : d.target.entries()) {
            std::vector<Term> terms;
            const Element pt = d.target.projection(te);
            for (const auto& t : d.terms(te)) {
                if (std::find(t.tuple.begin(), t.tuple.end(), m.identity()) != t.tuple.end()) continue;
                auto se = d.source.find(t.component, t.tuple);
                if (!se) throw std::logic_error("brute force: formula term outside the source shape");
                const Element ps = d.source.projection(d.source.entries()[*se]);
                if (m.multiply(t.u, ps) != pt) throw std::logic_error("brute force: projection mismatch");
                const IntMatrix act = a.action(ps, t.u);
                Term term{t.coeff, *se, std::vector<std::vector<long>>(act.rows(), std::vector<long>(act.cols()))};
                for (std::size_t i = 0; i < act.rows(); ++i)
                    for (std::size_t j = 0; j < act.cols(); ++j) term.action[i][j] = act(i, j).get_si();
                terms.push_back(std::move(term));
            }
            terms_.push_back(std::move(terms));
        }
    }

    void apply(const std::vector<long>& x, std::vector<long>& y) const {
        y.assign(tgt_.radix.size(), 0);
        for (std::size_t te = 0; te < terms_.size(); ++te) {
            const std::size_t to = tgt_.entry_offset[te];
            for (const auto& t : terms_[te]) {
                const std::size_t so = src_.entry_offset[t.source_entry];
                for (std::size_t i = 0; i < t.action.size(); ++i) {
                    long acc = 0;
                    for (std::size_t j = 0; j < t.action[i].size(); ++j) acc += t.action[i][j] * x[so + j];
                    y[to + i] = mod(y[to + i] + t.coeff * mod(acc, tgt_.radix[to + i]), tgt_.radix[to + i]);
                }
            }
        }
    }

private:
    const Space& src_;
    const Space& tgt_;
    std::vector<std::vector<Term>> terms_;
};

std::map<std::uint64_t, int> factorize(std::uint64_t n) {
    std::map<std::uint64_t, int> f;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

}  // namespace

BruteForceResult brute_force_cohomology(std::shared_ptr<const Monoid> monoid, int r, int n, const HModule& a) {
    if (!monoid->is_finite()) throw std::invalid_argument("brute force: the monoid must be finite");
    if (n < 0) throw std::invalid_argument("brute force: negative degree");
    if (r >= 2 && n > r + 2) throw std::out_of_range("brute force: degree above r + 2");

    const ExplicitCoboundary next = explicit_coboundary(monoid, r, n);
    const Space cn(next.source, a);
    const Space cn1(next.target, a);
    const Evaluator dn(next, a, cn, cn1);

    BruteForceResult res;
    res.cochain_count = cn.size;

    std::vector<long> x, y;
    std::vector<std::uint64_t> cocycles;
    for (std::uint64_t code = 0; code < cn.size; ++code) {
        cn.decode(code, x);
        dn.apply(x, y);
        if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) cocycles.push_back(code);
    }
    res.cocycle_count = cocycles.size();

    std::unordered_set<std::uint64_t> boundaries{0};
    if (n > 0) {
        const ExplicitCoboundary prev = explicit_coboundary(monoid, r, n - 1);
        const Space cp(prev.source, a);
        const Evaluator dp(prev, a, cp, cn);
        for (std::uint64_t code = 0; code < cp.size; ++code) {
            cp.decode(code, x);
            dp.apply(x, y);
            boundaries.insert(cn.encode(y));
        }
    }
    res.coboundary_count = boundaries.size();
    if (res.cocycle_count % res.coboundary_count != 0)
        throw std::logic_error("brute force: coboundaries do not form a subgroup of the cocycles");

    // |H[p^k]| = #{z : p^k z is a coboundary} / |B|
    std::vector<Integer> orders;
    for (auto [p, e] : factorize(res.cocycle_count / res.coboundary_count)) {
        std::vector<int> logs{0};
        std::uint64_t pk = 1;
        for (int k = 1; logs.back() < e; ++k) {
            pk *= p;
            std::uint64_t count = 0;
            for (std::uint64_t z : cocycles) {
                cn.decode(z, x);
                for (std::size_t i = 0; i < x.size(); ++i)
                    x[i] = mod(x[i] * static_cast<long>(pk % static_cast<std::uint64_t>(cn.radix[i])), cn.radix[i]);
                if (boundaries.count(cn.encode(x))) ++count;
            }
            std::uint64_t sub = count / res.coboundary_count;
            int l = 0;
            while (sub > 1) {
                sub /= p;
                ++l;
            }
            logs.push_back(l);
            if (k > 64) throw std::logic_error("brute force: torsion exponent does not stabilize");
        }
        // factors of order >= p^k: logs[k] - logs[k-1]
        for (std::size_t k = 1; k < logs.size(); ++k) {
            const int at_least = logs[k] - logs[k - 1];
            const int at_least_next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
            Integer q;
            mpz_ui_pow_ui(q.get_mpz_t(), p, k);
            for (int i = 0; i < at_least - at_least_next; ++i) orders.push_back(q);
        }
    }
    res.invariants = canonical_invariants(orders);
    return res;
}

}  // namespace moncoh
