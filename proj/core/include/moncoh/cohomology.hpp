#pragma once

#include "moncoh/bar.hpp"
#include "moncoh/hmod.hpp"
#include "moncoh/zlinalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace moncoh {

// Hom(D, A) for a free-based DGA D in degrees 0..max_degree.
struct CochainComplex {
    std::shared_ptr<const FreeBasedDGA> dga;
    int max_degree = 0;
    std::vector<std::vector<BarWord>> cells;  // per degree, in basis order
    std::vector<FreeBasis> bases;
    std::vector<CochainGroup> groups;
    std::vector<IntMatrix> relations;
    std::vector<IntMatrix> coboundaries;  // coboundaries[n] : C^n -> C^{n+1}

    const CochainGroup& group(int n) const { return groups.at(static_cast<std::size_t>(n)); }
    const IntMatrix& coboundary(int n) const { return coboundaries.at(static_cast<std::size_t>(n)); }
};

CochainComplex build_cochain_complex(std::shared_ptr<const FreeBasedDGA> dga, const HModule& a, int max_degree);

// Complex of the r-th level cohomology, Hom(B^r(ZM), A). For r >= 2 only
// degrees up to r + 3 are available.
CochainComplex cochain_complex(std::shared_ptr<const Monoid> monoid, int r, const HModule& a, int max_degree);

// H^n of a complex built up to degree >= n + 1.
AbGroupInvariants cohomology_at(const CochainComplex& c, int n);

// H^n(M, r; A); for r >= 2 requires n <= r + 2.
AbGroupInvariants cohomology_group(std::shared_ptr<const Monoid> monoid, int r, int n, const HModule& a);

// Highest degree n for which H^n(M, r; A) is offered.
int max_cohomology_degree(int r);

}  // namespace moncoh
