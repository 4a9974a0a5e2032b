#include "moncoh/zlinalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace moncoh {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols) {
    if (values.size() != rows * cols) throw std::invalid_argument("IntMatrix: wrong number of entries");
    std::size_t k = 0;
    for (long v : values) data_[k++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Integer& b = other(k, j);
                if (sgn(b) != 0) p(i, j) += a * b;
            }
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix s(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += other.data_[k];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const { return *this + (-other); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix n(*this);
    for (auto& x : n.data_) x = -x;
    return n;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in apply");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

SparseVec to_sparse(std::span<const Integer> v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
    return s;
}

std::vector<Integer> to_dense(const SparseVec& v, std::size_t dim) {
    std::vector<Integer> d(dim);
    for (const auto& [i, x] : v) {
        if (i >= dim) throw std::out_of_range("to_dense: index beyond dimension");
        d[i] = x;
    }
    return d;
}

void axpy(SparseVec& v, const Integer& c, const SparseVec& w) {
    if (sgn(c) == 0 || w.empty()) return;
    SparseVec out;
    out.reserve(v.size() + w.size());
    auto a = v.begin();
    auto b = w.begin();
    while (a != v.end() || b != w.end()) {
        if (b == w.end() || (a != v.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == v.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Integer s = a->second + c * b->second;
            if (sgn(s) != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    v = std::move(out);
}

std::vector<SparseVec> sparse_columns(const IntMatrix& m) {
    std::vector<SparseVec> cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) cols[j].emplace_back(i, m(i, j));
    return cols;
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += c * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(src, j)) != 0) m(dst, j) += c * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (sgn(m(i, src)) != 0) m(i, dst) += c * m(i, src);
}

// Diagonalizes `a` in place; U and V (if given) accumulate the row and column
// operations so that U * A_original * V = a.
std::size_t smith_in_place(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
    const std::size_t r = a.rows();
    const std::size_t c = a.cols();
    auto row_swap = [&](std::size_t i, std::size_t j) {
        swap_rows(a, i, j);
        if (u) swap_rows(*u, i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        swap_cols(a, i, j);
        if (v) swap_cols(*v, i, j);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        add_row(a, dst, src, k);
        if (u) add_row(*u, dst, src, k);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        add_col(a, dst, src, k);
        if (v) add_col(*v, dst, src, k);
    };

    std::size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (sgn(a(i, j)) != 0 && (!found || cmpabs(a(i, j), a(pi, pj)) < 0)) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (sgn(a(i, t)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_add(i, t, -q);
                if (sgn(a(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (sgn(a(t, j)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                col_add(j, t, -q);
                if (sgn(a(t, j)) != 0) clean = false;
            }
            if (!clean) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < r; ++i)
                    if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) bi = i, bj = t;
                for (std::size_t j = t + 1; j < c; ++j)
                    if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) bi = t, bj = j;
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        row_add(t, i, Integer(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (sgn(a(t, t)) < 0) {
            for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
            if (u)
                for (std::size_t j = 0; j < r; ++j) (*u)(t, j) = -(*u)(t, j);
        }
    }
    return t;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), 0};
    s.rank = smith_in_place(s.D, &s.U, &s.V);
    if (!(s.U * a * s.V == s.D)) throw std::logic_error("smith_normal_form: U*A*V != D");
    return s;
}

Integer AbGroupInvariants::order() const {
    if (free_rank > 0) return 0;
    Integer n = 1;
    for (const auto& t : torsion) n *= t;
    return n;
}

std::string AbGroupInvariants::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << 'Z';
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

AbGroupInvariants canonical_invariants(const std::vector<Integer>& cyclic_orders) {
    AbGroupInvariants inv;
    std::vector<Integer> finite;
    for (const auto& o : cyclic_orders) {
        if (sgn(o) == 0)
            ++inv.free_rank;
        else if (abs(o) != 1)
            finite.push_back(abs(o));
    }
    if (finite.empty()) return inv;
    IntMatrix d(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) d(i, i) = finite[i];
    smith_in_place(d, nullptr, nullptr);
    for (std::size_t i = 0; i < finite.size(); ++i)
        if (d(i, i) != 1) inv.torsion.push_back(d(i, i));
    return inv;
}

EchelonResult echelon(std::vector<SparseVec> rows, std::size_t limit) {
    std::map<std::size_t, std::vector<SparseVec>> buckets;
    for (auto& r : rows)
        if (!r.empty()) buckets[r.front().first].push_back(std::move(r));

    EchelonResult out;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        const std::size_t col = it->first;
        std::vector<SparseVec> bucket = std::move(it->second);
        buckets.erase(it);
        if (col >= limit) {
            for (auto& r : bucket) out.tail.push_back(std::move(r));
            for (auto& [k, rest] : buckets)
                for (auto& r : rest) out.tail.push_back(std::move(r));
            break;
        }
        while (bucket.size() > 1) {
            std::size_t p = 0;
            for (std::size_t k = 1; k < bucket.size(); ++k) {
                int cmp = cmpabs(bucket[k].front().second, bucket[p].front().second);
                if (cmp < 0 || (cmp == 0 && bucket[k].size() < bucket[p].size())) p = k;
            }
            std::swap(bucket[p], bucket.back());
            SparseVec pivot = std::move(bucket.back());
            bucket.pop_back();
            std::vector<SparseVec> stay;
            for (auto& r : bucket) {
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), r.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
                axpy(r, -q, pivot);
                if (r.empty()) continue;
                if (r.front().first == col)
                    stay.push_back(std::move(r));
                else
                    buckets[r.front().first].push_back(std::move(r));
            }
            stay.push_back(std::move(pivot));
            bucket = std::move(stay);
        }
        SparseVec lead = std::move(bucket.front());
        if (sgn(lead.front().second) < 0)
            for (auto& e : lead) e.second = -e.second;
        out.basis.push_back(std::move(lead));
    }
    return out;
}

Lattice::Lattice(std::size_t dim, std::vector<SparseVec> generators) : dim_(dim) {
    for (const auto& g : generators)
        if (!g.empty() && g.back().first >= dim) throw std::out_of_range("Lattice: generator beyond dimension");
    basis_ = echelon(std::move(generators)).basis;
}

Lattice Lattice::from_columns(const IntMatrix& m) { return Lattice(m.rows(), sparse_columns(m)); }

IntMatrix Lattice::basis_matrix() const {
    IntMatrix m(dim_, basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j)
        for (const auto& [i, x] : basis_[j]) m(i, j) = x;
    return m;
}

std::optional<SparseVec> Lattice::coordinates(const SparseVec& v) const {
    SparseVec w = v;
    SparseVec coords;
    for (std::size_t k = 0; k < basis_.size() && !w.empty(); ++k) {
        const auto& b = basis_[k];
        const std::size_t lead = b.front().first;
        if (w.front().first < lead) return std::nullopt;
        if (w.front().first > lead) continue;
        if (!mpz_divisible_p(w.front().second.get_mpz_t(), b.front().second.get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), w.front().second.get_mpz_t(), b.front().second.get_mpz_t());
        axpy(w, -q, b);
        coords.emplace_back(k, std::move(q));
    }
    if (!w.empty()) return std::nullopt;
    return coords;
}

bool Lattice::contains(const SparseVec& v) const { return coordinates(v).has_value(); }

std::vector<SparseVec> kernel_basis_sparse(std::size_t rows, const std::vector<SparseVec>& columns) {
    std::vector<SparseVec> aug;
    aug.reserve(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseVec r = columns[j];
        if (!r.empty() && r.back().first >= rows) throw std::out_of_range("kernel_basis: entry beyond row count");
        r.emplace_back(rows + j, Integer(1));
        aug.push_back(std::move(r));
    }
    auto res = echelon(std::move(aug), rows);
    std::vector<SparseVec> ker;
    for (auto& r : res.tail) {
        for (auto& e : r) e.first -= rows;
        ker.push_back(std::move(r));
    }
    return echelon(std::move(ker)).basis;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    auto ker = kernel_basis_sparse(a.rows(), sparse_columns(a));
    IntMatrix m(a.cols(), ker.size());
    for (std::size_t j = 0; j < ker.size(); ++j)
        for (const auto& [i, x] : ker[j]) m(i, j) = x;
    return m;
}

Lattice preimage(const IntMatrix& a, const IntMatrix& l) {
    if (a.rows() != l.rows()) throw std::invalid_argument("preimage_lattice: row mismatch");
    auto cols = sparse_columns(a);
    const std::size_t n = cols.size();
    for (auto& c : sparse_columns(l)) cols.push_back(std::move(c));
    auto ker = kernel_basis_sparse(a.rows(), cols);
    std::vector<SparseVec> proj;
    for (auto& k : ker) {
        SparseVec p;
        for (auto& e : k)
            if (e.first < n) p.push_back(std::move(e));
        proj.push_back(std::move(p));
    }
    return Lattice(n, std::move(proj));
}

IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& l) { return preimage(a, l).basis_matrix(); }

AbGroupInvariants cokernel_invariants(std::size_t dim, std::vector<SparseVec> generators) {
    std::vector<SparseVec> rows = echelon(std::move(generators)).basis;
    std::size_t remaining = dim;

    // Unit pivots split off a coordinate together with one generator.
    for (;;) {
        std::size_t best_row = rows.size();
        std::size_t best_pos = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (best_row < rows.size() && rows[r].size() >= rows[best_row].size()) continue;
            for (std::size_t p = 0; p < rows[r].size(); ++p)
                if (abs(rows[r][p].second) == 1) {
                    best_row = r;
                    best_pos = p;
                    break;
                }
        }
        if (best_row == rows.size()) break;
        SparseVec pivot = std::move(rows[best_row]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best_row));
        const std::size_t col = pivot[best_pos].first;
        const Integer eps = pivot[best_pos].second;
        for (auto& r : rows) {
            auto it = std::lower_bound(r.begin(), r.end(), col,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == r.end() || it->first != col) continue;
            Integer coef = -(it->second * eps);
            axpy(r, coef, pivot);
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVec& r) { return r.empty(); }),
                   rows.end());
        --remaining;
    }

    std::map<std::size_t, std::size_t> cols;
    for (const auto& r : rows)
        for (const auto& e : r) cols.emplace(e.first, 0);
    std::size_t k = 0;
    for (auto& [c, idx] : cols) idx = k++;
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, x] : rows[i]) m(i, cols[c]) = x;
    const std::size_t rank = smith_in_place(m, nullptr, nullptr);

    AbGroupInvariants inv;
    inv.free_rank = remaining - rank;
    for (std::size_t i = 0; i < rank; ++i)
        if (m(i, i) != 1) inv.torsion.push_back(m(i, i));
    return inv;
}

AbGroupInvariants cokernel_invariants(const IntMatrix& a) { return cokernel_invariants(a.rows(), sparse_columns(a)); }

AbGroupInvariants subquotient_invariants(const Lattice& k, const std::vector<SparseVec>& i) {
    std::vector<SparseVec> coords;
    coords.reserve(i.size());
    for (std::size_t j = 0; j < i.size(); ++j) {
        auto c = k.coordinates(i[j]);
        if (!c) throw NotContainedError(j, "subquotient: generator " + std::to_string(j) + " is not in the ambient lattice");
        coords.push_back(std::move(*c));
    }
    return cokernel_invariants(k.rank(), std::move(coords));
}

AbGroupInvariants subquotient_invariants(const IntMatrix& k, const IntMatrix& i) {
    if (k.rows() != i.rows()) throw std::invalid_argument("subquotient: row mismatch");
    return subquotient_invariants(Lattice::from_columns(k), sparse_columns(i));
}

AbGroupInvariants cochain_cohomology(const IntMatrix& prev, const IntMatrix& next, const IntMatrix& rel_n,
                                     const IntMatrix& rel_next) {
    if (prev.rows() != rel_n.rows() || next.cols() != rel_n.rows() || next.rows() != rel_next.rows())
        throw std::invalid_argument("cochain_cohomology: inconsistent dimensions");
    Lattice cocycles = preimage(next, rel_next);
    auto boundaries = sparse_columns(prev);
    for (auto& r : sparse_columns(rel_n)) boundaries.push_back(std::move(r));
    return subquotient_invariants(cocycles, boundaries);
}

}  // namespace moncoh
