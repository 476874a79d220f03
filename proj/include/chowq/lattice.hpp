#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "chowq/error.hpp"

namespace chowq {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec make_vec(std::initializer_list<long> values);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
Int content(const IntVec& v);  // gcd of entries, 0 for the zero vector
std::string to_string(const IntVec& v);

/// v / gcd(v). Throws ZeroVector on the zero vector.
IntVec primitive_part(const IntVec& v);

/// Scales a rational vector to the primitive integer vector pointing the same way.
IntVec primitive_from_rational(const RatVec& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols);
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);
    static IntMat from_columns(const std::vector<IntVec>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    std::vector<IntVec> row_list() const;
    std::vector<IntVec> column_list() const;
    void set_row(std::size_t i, const IntVec& v);

    IntMat transpose() const;
    IntMat select_columns(const std::vector<std::size_t>& idx) const;
    IntMat select_rows(const std::vector<std::size_t>& idx) const;

    IntVec operator*(const IntVec& v) const;
    IntMat operator*(const IntMat& other) const;

    bool operator==(const IntMat& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMat hstack(const IntMat& a, const IntMat& b);
IntMat vstack(const IntMat& a, const IntMat& b);

struct HermiteResult {
    IntMat h;  // row-style Hermite normal form
    IntMat u;  // unimodular with u * m == h
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMat& m);

/// Nonzero rows of the Hermite normal form; a canonical basis of the row lattice.
IntMat row_lattice_basis(const IntMat& m);

bool row_lattices_equal(const IntMat& a, const IntMat& b);

std::size_t rank(const IntMat& m);
std::size_t rank(const std::vector<IntVec>& rows, std::size_t dim);

/// Nonzero Smith invariant factors d_1 | d_2 | ... (all positive).
std::vector<Int> smith_invariants(const IntMat& m);

/// Rows form a basis of the saturated lattice {v : m v = 0}.
IntMat kernel_basis(const IntMat& m);

/// Integral Gale dual in canonical (Hermite) form. Throws RankDeficient.
IntMat gale_dual(const IntMat& q);

/// Integral solution of m x = b, canonical under the Hermite transform.
std::optional<IntVec> try_solve_diophantine(const IntMat& m, const IntVec& b);
IntVec solve_diophantine(const IntMat& m, const IntVec& b);  // throws NoSolution

/// True iff the selected columns generate Z^rows.
bool columns_generate_lattice(const IntMat& m, const std::vector<std::size_t>& subset);
bool columns_generate_lattice(const IntMat& m);

// Rational helpers.

/// Canonical basis of the rational row space: reduced row echelon form with
/// every row scaled to a primitive integer vector.
std::vector<IntVec> canonical_subspace_basis(const std::vector<IntVec>& rows, std::size_t dim);

/// Primitive integer basis of {x : r . x = 0 for all rows r}.
std::vector<IntVec> rational_nullspace(const std::vector<IntVec>& rows, std::size_t dim);

/// Solution of m x = b over Q, if any.
std::optional<RatVec> solve_rational(const IntMat& m, const IntVec& b);

/// Orthogonal projection of v onto the complement of span(basis), scaled to a
/// primitive integer vector. Zero if v lies in the span.
IntVec project_to_complement(const IntVec& v, const std::vector<IntVec>& basis);

Int determinant(const IntMat& m);

}  // namespace chowq
