#include "chowq/laurent.hpp"

#include <algorithm>

namespace chowq {

LaurentPoly LaurentPoly::from_terms(std::size_t num_vars, const std::vector<std::pair<IntVec, Rat>>& terms) {
    LaurentPoly p(num_vars);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const IntVec& exp, const Rat& coef) {
    if (exp.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent length does not match the variable count");
    if (sgn(coef) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coef);
    if (!inserted) {
        it->second += coef;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

IntVec LaurentPoly::min_exponent() const {
    IntVec m(nvars_);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i)
            if (first || e[i] < m[i]) m[i] = e[i];
        first = false;
    }
    return m;
}

bool LaurentPoly::is_monomial_free() const { return is_zero(min_exponent()); }

LaurentPoly LaurentPoly::monomial_free() const {
    IntVec m = min_exponent();
    for (auto& x : m) x = -x;
    return shifted(m);
}

LaurentPoly LaurentPoly::shifted(const IntVec& shift) const {
    if (shift.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "shift length does not match the variable count");
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        IntVec f = e;
        for (std::size_t i = 0; i < nvars_; ++i) f[i] += shift[i];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

LaurentPoly LaurentPoly::set_trailing_to_one(std::size_t k) const {
    if (k > nvars_) throw Error(ErrorKind::DimensionMismatch, "cannot keep more variables than present");
    LaurentPoly out(k);
    for (const auto& [e, c] : terms_) out.add_term(IntVec(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k)), c);
    return out;
}

LaurentPoly LaurentPoly::with_extra_vars(std::size_t extra) const {
    LaurentPoly out(nvars_ + extra);
    for (const auto& [e, c] : terms_) {
        IntVec f = e;
        f.resize(nvars_ + extra);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

namespace {

std::string superscript(const Int& n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = n.get_str(), out;
    for (char ch : s) out += ch == '-' ? std::string("⁻") : std::string(digits[ch - '0']);
    return out;
}

template <class Fmt>
std::string render(const LaurentPoly::Terms& terms, const std::vector<std::string>& names, const std::string& times, Fmt power) {
    if (terms.empty()) return "0";
    std::string out;
    // Highest monomial first, matching the usual way the relations are written.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (sgn(e[i]) == 0) continue;
            if (!mono.empty()) mono += times;
            mono += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (e[i] != 1) mono += power(e[i]);
        }
        Rat a = abs(c);
        std::string coef = a == 1 ? "" : a.get_str();
        std::string term = coef.empty() ? (mono.empty() ? "1" : mono) : (mono.empty() ? coef : coef + times + mono);
        if (out.empty()) out = sgn(c) < 0 ? "-" + term : term;
        else out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    return render(terms_, names, "*", [](const Int& e) { return "^" + e.get_str(); });
}

std::string LaurentPoly::to_pretty_string(const std::vector<std::string>& names) const {
    return render(terms_, names, "·", [](const Int& e) { return superscript(e); });
}

std::vector<std::string> default_var_names(std::size_t t, std::size_t s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t; ++i) out.push_back("T" + std::to_string(i));
    for (std::size_t j = 1; j <= s; ++j) out.push_back("S" + std::to_string(j));
    return out;
}

}  // namespace chowq
