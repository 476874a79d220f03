#include "chowq/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace chowq {

IntVec make_vec(std::initializer_list<long> values) {
    IntVec v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

IntVec primitive_part(const IntVec& v) {
    Int g = content(v);
    if (g == 0) throw Error(ErrorKind::ZeroVector, "primitive part of the zero vector");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return out;
}

IntVec primitive_from_rational(const RatVec& v) {
    Int l = 1;
    for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * l;
        out[i] = s.get_num();
    }
    if (is_zero(out)) return out;
    return primitive_part(out);
}

// ---------------------------------------------------------------------------
// IntMat

IntMat::IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
    IntMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMat::row(std::size_t i) const {
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::col(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<IntVec> IntMat::row_list() const {
    std::vector<IntVec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

std::vector<IntVec> IntMat::column_list() const {
    std::vector<IntVec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
}

void IntMat::set_row(std::size_t i, const IntVec& v) {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::select_columns(const std::vector<std::size_t>& idx) const {
    IntMat out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = (*this)(i, idx[k]);
    return out;
}

IntMat IntMat::select_rows(const std::vector<std::size_t>& idx) const {
    IntMat out(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k) out.set_row(k, row(idx[k]));
    return out;
}

IntVec IntMat::operator*(const IntVec& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

IntMat IntMat::operator*(const IntMat& other) const {
    if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    IntMat out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

std::string IntMat::to_string() const {
    std::vector<std::string> cells(data_.size());
    std::size_t width = 1;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        cells[k] = data_[k].get_str();
        width = std::max(width, cells[k].size());
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::string& c = cells[i * cols_ + j];
            os << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
        }
        os << "]\n";
    }
    return os.str();
}

IntMat hstack(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
    IntMat out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
    IntMat out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) out.set_row(i, a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) out.set_row(a.rows() + i, b.row(i));
    return out;
}

// ---------------------------------------------------------------------------
// Hermite / Smith

namespace {

// rows (i, k) <- [[s, t], [-b/g, a/g]] * rows (i, k); the transform has determinant 1.
void combine_rows(IntMat& m, std::size_t i, std::size_t k, const Int& s, const Int& t, const Int& x, const Int& y) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int ri = m(i, j), rk = m(k, j);
        m(i, j) = s * ri + t * rk;
        m(k, j) = x * ri + y * rk;
    }
}

void negate_row(IntMat& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

void sub_row_multiple(IntMat& m, std::size_t target, std::size_t source, const Int& q) {
    if (sgn(q) == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& m) {
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t pr = 0;
    for (std::size_t j = 0; j < h.cols() && pr < h.rows(); ++j) {
        for (std::size_t i = pr + 1; i < h.rows(); ++i) {
            if (sgn(h(i, j)) == 0) continue;
            Int a = h(pr, j), b = h(i, j), g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int x = -b / g, y = a / g;
            combine_rows(h, pr, i, s, t, x, y);
            combine_rows(u, pr, i, s, t, x, y);
        }
        if (sgn(h(pr, j)) == 0) continue;
        if (sgn(h(pr, j)) < 0) {
            negate_row(h, pr);
            negate_row(u, pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(pr, j).get_mpz_t());
            sub_row_multiple(h, i, pr, q);
            sub_row_multiple(u, i, pr, q);
        }
        ++pr;
    }
    return {std::move(h), std::move(u)};
}

IntMat row_lattice_basis(const IntMat& m) {
    IntMat h = hermite_normal_form(m).h;
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        IntVec r = h.row(i);
        if (!is_zero(r)) rows.push_back(std::move(r));
    }
    return IntMat::from_rows(rows, m.cols());
}

bool row_lattices_equal(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) return false;
    return row_lattice_basis(a) == row_lattice_basis(b);
}

std::size_t rank(const std::vector<IntVec>& rows_in, std::size_t dim) {
    std::vector<IntVec> rows;
    for (const auto& r : rows_in) {
        if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "rank: row length mismatch");
        if (!is_zero(r)) rows.push_back(r);
    }
    std::size_t rk = 0;
    for (std::size_t j = 0; j < dim && rk < rows.size(); ++j) {
        std::size_t piv = rk;
        while (piv < rows.size() && sgn(rows[piv][j]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        for (std::size_t i = rk + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][j]) == 0) continue;
            Int a = rows[rk][j], b = rows[i][j];
            for (std::size_t c = j; c < dim; ++c) rows[i][c] = a * rows[i][c] - b * rows[rk][c];
            Int g = content(rows[i]);
            if (g > 1)
                for (auto& x : rows[i]) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
        ++rk;
    }
    return rk;
}

std::size_t rank(const IntMat& m) { return rank(m.row_list(), m.cols()); }

std::vector<Int> smith_invariants(const IntMat& m) {
    IntMat a = m;
    // Alternate row and column Hermite reductions until diagonal.
    for (int iter = 0; iter < 1000; ++iter) {
        a = hermite_normal_form(a).h;
        a = hermite_normal_form(a.transpose()).h.transpose();
        bool diagonal = true;
        for (std::size_t i = 0; i < a.rows() && diagonal; ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (i != j && sgn(a(i, j)) != 0) {
                    diagonal = false;
                    break;
                }
        if (diagonal) break;
    }
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (sgn(a(i, i)) != 0) d.push_back(abs(a(i, i)));
    // Restore the divisibility chain.
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t k = i + 1; k < d.size(); ++k) {
            Int g, l;
            mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[k].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[k].get_mpz_t());
            d[i] = g;
            d[k] = l;
        }
    return d;
}

IntMat kernel_basis(const IntMat& m) {
    HermiteResult hr = hermite_normal_form(m.transpose());
    std::size_t rk = 0;
    while (rk < hr.h.rows() && !is_zero(hr.h.row(rk))) ++rk;
    std::vector<IntVec> rows;
    for (std::size_t i = rk; i < hr.u.rows(); ++i) rows.push_back(hr.u.row(i));
    return IntMat::from_rows(rows, m.cols());
}

IntMat gale_dual(const IntMat& q) {
    if (rank(q) != q.rows())
        throw Error(ErrorKind::RankDeficient, "Gale dual needs a matrix of full row rank");
    IntMat k = kernel_basis(q);
    if (k.rows() == 0) return IntMat(0, q.cols());
    return row_lattice_basis(k);
}

std::optional<IntVec> try_solve_diophantine(const IntMat& m, const IntVec& b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    HermiteResult hr = hermite_normal_form(m.transpose());
    const IntMat& h = hr.h;  // cols(m) x rows(m)
    IntVec y(h.rows());
    std::size_t k = 0;
    for (std::size_t j = 0; j < h.cols() && k < h.rows(); ++j) {
        if (sgn(h(k, j)) == 0) continue;
        Int rhs = b[j];
        for (std::size_t i = 0; i < k; ++i) rhs -= y[i] * h(i, j);
        if (!mpz_divisible_p(rhs.get_mpz_t(), h(k, j).get_mpz_t())) return std::nullopt;
        mpz_divexact(y[k].get_mpz_t(), rhs.get_mpz_t(), h(k, j).get_mpz_t());
        ++k;
    }
    // y^T h must reproduce b in every column, pivot or not.
    for (std::size_t j = 0; j < h.cols(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) s += y[i] * h(i, j);
        if (s != b[j]) return std::nullopt;
    }
    return hr.u.transpose() * y;
}

IntVec solve_diophantine(const IntMat& m, const IntVec& b) {
    auto x = try_solve_diophantine(m, b);
    if (!x) throw Error(ErrorKind::NoSolution, "right-hand side " + to_string(b) + " is not in the column lattice");
    return *x;
}

bool columns_generate_lattice(const IntMat& m, const std::vector<std::size_t>& subset) {
    for (std::size_t j : subset)
        if (j >= m.cols()) throw Error(ErrorKind::DimensionMismatch, "column index out of range");
    if (m.rows() == 0) return true;
    IntMat sub = m.select_columns(subset);
    std::vector<Int> d = smith_invariants(sub);
    if (d.size() != m.rows()) return false;
    return std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 1; });
}

bool columns_generate_lattice(const IntMat& m) {
    std::vector<std::size_t> all(m.cols());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    return columns_generate_lattice(m, all);
}

// ---------------------------------------------------------------------------
// Rational helpers

namespace {

struct Rref {
    std::vector<RatVec> rows;  // nonzero rows only
    std::vector<std::size_t> pivots;
};

Rref rref(const std::vector<IntVec>& in, std::size_t dim) {
    std::vector<RatVec> rows;
    rows.reserve(in.size());
    for (const auto& r : in) {
        if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
        rows.emplace_back(r.begin(), r.end());
    }
    Rref out;
    std::size_t rk = 0;
    for (std::size_t j = 0; j < dim && rk < rows.size(); ++j) {
        std::size_t piv = rk;
        while (piv < rows.size() && sgn(rows[piv][j]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        Rat inv = 1 / rows[rk][j];
        for (std::size_t c = j; c < dim; ++c) rows[rk][c] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rk || sgn(rows[i][j]) == 0) continue;
            Rat f = rows[i][j];
            for (std::size_t c = j; c < dim; ++c) rows[i][c] -= f * rows[rk][c];
        }
        out.pivots.push_back(j);
        ++rk;
    }
    rows.resize(rk);
    out.rows = std::move(rows);
    return out;
}

}  // namespace

std::vector<IntVec> canonical_subspace_basis(const std::vector<IntVec>& rows, std::size_t dim) {
    Rref r = rref(rows, dim);
    std::vector<IntVec> out;
    out.reserve(r.rows.size());
    for (const auto& row : r.rows) out.push_back(primitive_from_rational(row));
    return out;
}

std::vector<IntVec> rational_nullspace(const std::vector<IntVec>& rows, std::size_t dim) {
    Rref r = rref(rows, dim);
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<IntVec> out;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(dim);
        x[f] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = -r.rows[k][f];
        out.push_back(primitive_from_rational(x));
    }
    return out;
}

std::optional<RatVec> solve_rational(const IntMat& m, const IntVec& b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    // Row-reduce the augmented matrix.
    std::vector<IntVec> aug;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        IntVec r = m.row(i);
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    Rref r = rref(aug, m.cols() + 1);
    RatVec x(m.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        if (r.pivots[k] == m.cols()) return std::nullopt;
        x[r.pivots[k]] = r.rows[k][m.cols()];
    }
    return x;
}

IntVec project_to_complement(const IntVec& v, const std::vector<IntVec>& basis) {
    if (basis.empty()) return is_zero(v) ? v : primitive_part(v);
    const std::size_t k = basis.size();
    // Gram system G c = B v.
    std::vector<RatVec> g(k, RatVec(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
        g[i][k] = dot(basis[i], v);
    }
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t piv = j;
        while (piv < k && sgn(g[piv][j]) == 0) ++piv;
        if (piv == k) throw Error(ErrorKind::InternalError, "projection basis is linearly dependent");
        std::swap(g[j], g[piv]);
        Rat inv = 1 / g[j][j];
        for (auto& x : g[j]) x *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == j || sgn(g[i][j]) == 0) continue;
            Rat f = g[i][j];
            for (std::size_t c = j; c <= k; ++c) g[i][c] -= f * g[j][c];
        }
    }
    RatVec p(v.begin(), v.end());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < v.size(); ++c) p[c] -= g[i][k] * basis[i][c];
    return primitive_from_rational(p);
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && sgn(a(piv, k)) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace chowq
