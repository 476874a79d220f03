#pragma once

// Weak liftings, ideal transfer along new rays, and structural primality certificates.

#include <cstddef>
#include <string>
#include <vector>

#include "chowq/laurent.hpp"

namespace chowq {

/// p * a_j = m_j * b_j for every column j.
struct WeakLifting {
    IntMat p;
    IntMat b;
    IntMat a;
    std::vector<Int> m;

    /// Throws InternalError if the diagram does not commute.
    void verify() const;
    std::size_t num_new() const noexcept { return b.cols(); }
    bool operator==(const WeakLifting&) const = default;
};

/// Lifting with the smallest multiplier for every column; m_j = 1 whenever
/// m_j b_j lies in the column lattice of p for m_j = 1. Throws NotInSpan.
WeakLifting weak_b_lifting(const IntMat& p, const IntMat& b);

/// Lifting from explicit columns; computes the multipliers. Throws NotInSpan if
/// some p * a_j is not a positive multiple of b_j.
WeakLifting lifting_from_columns(const IntMat& p, const IntMat& b, const IntMat& a);

/// Term differences of g lie in the row lattice of p.
bool is_homogeneous(const LaurentPoly& g, const IntMat& p);

/// Exponent v goes to (v, a^T v); the result is made monomial free.
/// Throws NotHomogeneous.
LaurentPoly shift_polynomial(const LaurentPoly& g, const WeakLifting& lift);

/// Divides the exponent of every new variable S_j by m_j.
LaurentPoly root_normalize(const LaurentPoly& g2, const WeakLifting& lift);

/// Canonical generator of the transferred principal ideal.
LaurentPoly transfer_principal_ideal(const LaurentPoly& g, const IntMat& p, const IntMat& b);

/// Same, with a caller-supplied lifting.
LaurentPoly transfer_with_lifting(const LaurentPoly& g, const WeakLifting& lift);

enum class Parity { Odd, Even };

Parity parity_of(std::size_t r);

struct EtaData {
    std::vector<std::size_t> term_index;  // 0, 2, 4, ... and r for even r
    std::vector<IntVec> eta;
    IntVec mu;
    bool operator==(const EtaData&) const = default;
};

/// Shifted row sums of the lifting matrix for the quadric normal form.
EtaData eta_rows(const IntMat& a, std::size_t r, Parity parity);

/// Sum over the quadric terms T_i T_{i+1} S^eta_i (and T_r^2 S^eta_r for even r).
LaurentPoly relation_from_eta(const EtaData& eta, std::size_t r, Parity parity);

/// Quadric normal form T0 T1 + T2 T3 + ... (+ T_r^2 for even r).
LaurentPoly quadric_normal_form(std::size_t r);

struct CertificateResult {
    bool certified = false;
    std::vector<std::size_t> witness;    // indices into the term list (lexicographic order)
    std::vector<std::string> notes;      // failing conditions or a short description of the witness
    std::vector<std::pair<std::string, bool>> hypotheses;  // named hypothesis flags
    bool operator==(const CertificateResult&) const = default;
};

/// Sufficient condition for primality of a quadric relation with new variables:
/// two terms free of new variables, with disjoint variables, together using at
/// least three variables, none of which occurs in any other term.
/// Throws ShapeMismatch if some term does not have degree 2 in T0..Tr.
CertificateResult prime_certificate_quadric(const LaurentPoly& g2, std::size_t r, Parity parity);

/// Expansion x = sum a_i e_i with a >= 0 and min a = 0, where e_0 = -(e_1 + ... + e_n).
IntVec delta_expansion(const IntVec& x);

/// Certified iff all columns of b lie in one maximal cone of Delta(n).
/// Throws NotOnTropical if a column is zero, a ray, or off the codimension-one skeleton.
CertificateResult common_cone_certificate(const IntMat& b, std::size_t n);

/// h2 = sum_i T_i S^{A_i} with A the expansion coefficients of the columns of b.
LaurentPoly lift_h1(const IntMat& b, std::size_t n);

}  // namespace chowq
