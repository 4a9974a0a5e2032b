#include "moncoh/cohomology.hpp"

#include <limits>

namespace moncoh {

CochainComplex build_cochain_complex(std::shared_ptr<const FreeBasedDGA> dga, const HModule& a, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("cochain complex: negative degree");
    if (max_degree > dga->max_degree())
        throw std::out_of_range("cochain complex: degree " + std::to_string(max_degree) + " above the DGA truncation");
    if (&dga->monoid() != &a.monoid() && dga->monoid_ptr() != a.monoid_ptr())
        throw std::invalid_argument("cochain complex: module and DGA live over different monoids");

    CochainComplex c;
    c.dga = dga;
    c.max_degree = max_degree;
    std::vector<std::map<BarWord, std::size_t>> index;
    for (int n = 0; n <= max_degree; ++n) {
        auto cells = dga->basis(n);
        std::vector<FreeGenerator> gens;
        std::map<BarWord, std::size_t> idx;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            gens.push_back({dga->render(cells[i]), dga->projection(cells[i])});
            idx.emplace(cells[i], i);
        }
        c.bases.emplace_back(std::move(gens));
        c.groups.emplace_back(c.bases.back(), a);
        c.relations.push_back(c.groups.back().relations());
        c.cells.push_back(std::move(cells));
        index.push_back(std::move(idx));
    }
    for (int n = 0; n < max_degree; ++n) {
        std::vector<FreeElement> d;
        for (const auto& cell : c.cells[n + 1]) {
            FreeElement fe;
            for (const auto& [t, x] : dga->differential(cell)) {
                auto it = index[n].find(t.second);
                if (it == index[n].end())
                    throw std::logic_error("cochain complex: differential leaves the basis at " + dga->render(cell));
                fe.add(t.first, it->second, x);
            }
            d.push_back(std::move(fe));
        }
        c.coboundaries.push_back(dualize(d, c.bases[n], c.bases[n + 1], a));
    }
    return c;
}

int max_cohomology_degree(int r) {
    if (r < 1) throw std::invalid_argument("level must be at least 1");
    return r == 1 ? std::numeric_limits<int>::max() : r + 2;
}

CochainComplex cochain_complex(std::shared_ptr<const Monoid> monoid, int r, const HModule& a, int max_degree) {
    if (r < 1) throw std::invalid_argument("cochain_complex: level must be at least 1");
    if (!monoid->is_finite()) throw std::invalid_argument("cochain_complex: the monoid must be finite");
    if (r >= 2 && max_degree > r + 3)
        throw std::out_of_range("cochain_complex: degree " + std::to_string(max_degree) +
                                " exceeds the truncation r + 3 for level " + std::to_string(r));
    return build_cochain_complex(iterated_bar(std::move(monoid), r, max_degree), a, max_degree);
}

AbGroupInvariants cohomology_at(const CochainComplex& c, int n) {
    if (n < 0 || n + 1 > c.max_degree) throw std::out_of_range("cohomology_at: complex does not reach degree n + 1");
    const std::size_t k = static_cast<std::size_t>(n);
    const IntMatrix prev = n == 0 ? IntMatrix(c.groups[0].dimension(), 0) : c.coboundaries[k - 1];
    return cochain_cohomology(prev, c.coboundaries[k], c.relations[k], c.relations[k + 1]);
}

AbGroupInvariants cohomology_group(std::shared_ptr<const Monoid> monoid, int r, int n, const HModule& a) {
    if (n < 0) throw std::invalid_argument("cohomology_group: negative degree");
    if (n > max_cohomology_degree(r))
        throw std::out_of_range("cohomology_group: degree " + std::to_string(n) + " is above r + 2 for level " +
                                std::to_string(r));
    return cohomology_at(cochain_complex(std::move(monoid), r, a, n + 1), n);
}

}  // namespace moncoh
