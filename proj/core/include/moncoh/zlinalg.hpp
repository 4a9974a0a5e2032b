#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moncoh {

using Integer = mpz_class;

// Dense row-major matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& other) const = default;

    std::vector<Integer> column(std::size_t j) const;
    std::vector<Integer> apply(std::span<const Integer> v) const;
    bool is_zero() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

// Sparse vector: strictly increasing indices, nonzero values.
using SparseVec = std::vector<std::pair<std::size_t, Integer>>;

SparseVec to_sparse(std::span<const Integer> v);
std::vector<Integer> to_dense(const SparseVec& v, std::size_t dim);
// v += c * w
void axpy(SparseVec& v, const Integer& c, const SparseVec& w);
std::vector<SparseVec> sparse_columns(const IntMatrix& m);

struct SmithDecomposition {
    IntMatrix U;  // unimodular, rows x rows
    IntMatrix D;  // diagonal, nonnegative, d_i | d_{i+1}
    IntMatrix V;  // unimodular, cols x cols
    std::size_t rank = 0;
    std::vector<Integer> diagonal() const;
};

// U * A * V = D; the identity is re-checked before returning.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Invariants of a finitely generated abelian group Z^free_rank + sum Z/torsion_i,
// with 1 < t_1 | t_2 | ...
struct AbGroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const AbGroupInvariants&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    // Order if finite, otherwise 0.
    Integer order() const;
    std::string to_string() const;
};

// Canonical invariant factors of the given cyclic orders (0 means Z, 1 is dropped).
AbGroupInvariants canonical_invariants(const std::vector<Integer>& cyclic_orders);

// Z^dim / span(generators).
AbGroupInvariants cokernel_invariants(std::size_t dim, std::vector<SparseVec> generators);
AbGroupInvariants cokernel_invariants(const IntMatrix& a);

// Row-echelon form of a lattice given by generator rows: returns a basis with
// strictly increasing leading indices. Rows whose leading index is >= limit are
// left unreduced and returned in `tail`.
struct EchelonResult {
    std::vector<SparseVec> basis;
    std::vector<SparseVec> tail;
};
EchelonResult echelon(std::vector<SparseVec> rows, std::size_t limit = static_cast<std::size_t>(-1));

// Lattice in Z^dim with an echelon basis; supports membership and coordinates.
class Lattice {
public:
    Lattice() = default;
    Lattice(std::size_t dim, std::vector<SparseVec> generators);
    static Lattice from_columns(const IntMatrix& m);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<SparseVec>& basis() const { return basis_; }
    IntMatrix basis_matrix() const;  // dim x rank

    bool contains(const SparseVec& v) const;
    bool contains(std::span<const Integer> v) const { return contains(to_sparse(v)); }
    // Coordinates with respect to basis(); nullopt if v is not in the lattice.
    std::optional<SparseVec> coordinates(const SparseVec& v) const;

private:
    std::size_t dim_ = 0;
    std::vector<SparseVec> basis_;
};

IntMatrix kernel_basis(const IntMatrix& a);
std::vector<SparseVec> kernel_basis_sparse(std::size_t cols, const std::vector<SparseVec>& columns);

// {v : A v in colspan(L)}, returned as a lattice basis (columns).
IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& l);
Lattice preimage(const IntMatrix& a, const IntMatrix& l);

class NotContainedError : public std::runtime_error {
public:
    NotContainedError(std::size_t column, const std::string& what)
        : std::runtime_error(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// K / I where I (generators as columns) must lie inside K (columns span K).
AbGroupInvariants subquotient_invariants(const IntMatrix& k, const IntMatrix& i);
AbGroupInvariants subquotient_invariants(const Lattice& k, const std::vector<SparseVec>& i);

// Cohomology of  C^{n-1} --prev--> C^n --next--> C^{n+1}  where each C is a free
// cover modulo relation columns.
AbGroupInvariants cochain_cohomology(const IntMatrix& prev, const IntMatrix& next,
                                     const IntMatrix& rel_n, const IntMatrix& rel_next);

}  // namespace moncoh
