#pragma once

// Sparse Laurent polynomials with exact rational coefficients.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chowq/lattice.hpp"

namespace chowq {

class LaurentPoly {
public:
    using Terms = std::map<IntVec, Rat>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t num_vars) : nvars_(num_vars) {}

    static LaurentPoly from_terms(std::size_t num_vars, const std::vector<std::pair<IntVec, Rat>>& terms);

    std::size_t num_vars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Adds coef * x^exp, dropping the term if it cancels.
    void add_term(const IntVec& exp, const Rat& coef);

    /// Componentwise minimum over all exponents; zero vector for the zero polynomial.
    IntVec min_exponent() const;

    /// All exponents nonnegative and their componentwise minimum is zero.
    bool is_monomial_free() const;

    /// The unique monomial multiple that is monomial free.
    LaurentPoly monomial_free() const;

    /// Multiplies by x^shift.
    LaurentPoly shifted(const IntVec& shift) const;

    /// Keeps the first k variables and sets the others to 1.
    LaurentPoly set_trailing_to_one(std::size_t k) const;

    /// Appends `extra` variables with zero exponent.
    LaurentPoly with_extra_vars(std::size_t extra) const;

    bool operator==(const LaurentPoly& other) const = default;

    /// "T0*T1*S1^2 + T2^2", coefficients shown unless 1.
    std::string to_string(const std::vector<std::string>& names) const;
    /// Same with middle dots and superscript exponents.
    std::string to_pretty_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Names T0..T{t-1} followed by S1..S{s}.
std::vector<std::string> default_var_names(std::size_t t, std::size_t s);

}  // namespace chowq
