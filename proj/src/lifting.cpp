#include "chowq/lifting.hpp"

#include <algorithm>
#include <set>

namespace chowq {

void WeakLifting::verify() const {
    if (a.rows() != p.cols() || a.cols() != b.cols() || b.rows() != p.rows() || m.size() != b.cols())
        throw Error(ErrorKind::InternalError, "lifting has inconsistent shapes");
    for (std::size_t j = 0; j < b.cols(); ++j) {
        IntVec lhs = p * a.col(j);
        IntVec rhs = b.col(j);
        for (auto& x : rhs) x *= m[j];
        if (lhs != rhs || sgn(m[j]) <= 0) throw Error(ErrorKind::InternalError, "lifting diagram does not commute");
    }
}

WeakLifting weak_b_lifting(const IntMat& p, const IntMat& b) {
    if (b.rows() != p.rows()) throw Error(ErrorKind::DimensionMismatch, "b and p have different row counts");
    WeakLifting lift{p, b, IntMat(p.cols(), b.cols()), {}};
    Int bound = 1;
    for (const auto& d : smith_invariants(p)) bound *= d;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const IntVec bj = b.col(j);
        if (!solve_rational(p, bj)) throw Error(ErrorKind::NotInSpan, "column " + to_string(bj) + " is not in the span of p");
        std::optional<IntVec> x;
        Int m = 1;
        for (; m <= bound; ++m) {
            IntVec target = bj;
            for (auto& t : target) t *= m;
            x = try_solve_diophantine(p, target);
            if (x) break;
        }
        if (!x) throw Error(ErrorKind::InternalError, "no multiplier found within the lattice index");
        for (std::size_t i = 0; i < p.cols(); ++i) lift.a(i, j) = (*x)[i];
        lift.m.push_back(m);
    }
    lift.verify();
    return lift;
}

WeakLifting lifting_from_columns(const IntMat& p, const IntMat& b, const IntMat& a) {
    if (a.rows() != p.cols() || a.cols() != b.cols() || b.rows() != p.rows())
        throw Error(ErrorKind::DimensionMismatch, "lifting shapes do not match");
    WeakLifting lift{p, b, a, {}};
    for (std::size_t j = 0; j < b.cols(); ++j) {
        IntVec img = p * a.col(j);
        IntVec bj = b.col(j);
        if (is_zero(bj)) throw Error(ErrorKind::ZeroVector, "new ray generator is zero");
        std::size_t k = static_cast<std::size_t>(std::find_if(bj.begin(), bj.end(), [](const Int& v) { return sgn(v) != 0; }) - bj.begin());
        Int m = img[k] / bj[k];
        IntVec scaled = bj;
        for (auto& v : scaled) v *= m;
        if (sgn(m) <= 0 || scaled != img)
            throw Error(ErrorKind::NotInSpan, "p * a_" + std::to_string(j) + " is not a positive multiple of b_" + std::to_string(j));
        lift.m.push_back(m);
    }
    return lift;
}

bool is_homogeneous(const LaurentPoly& g, const IntMat& p) {
    if (g.num_vars() != p.cols()) throw Error(ErrorKind::DimensionMismatch, "polynomial and p disagree on the variable count");
    if (g.size() < 2) return true;
    const IntMat pt = p.transpose();
    const IntVec& base = g.terms().begin()->first;
    for (const auto& [e, c] : g.terms()) {
        IntVec d(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) d[i] = e[i] - base[i];
        if (!try_solve_diophantine(pt, d)) return false;
    }
    return true;
}

LaurentPoly shift_polynomial(const LaurentPoly& g, const WeakLifting& lift) {
    if (!is_homogeneous(g, lift.p)) throw Error(ErrorKind::NotHomogeneous, "term differences are not in the row lattice of p");
    const std::size_t nv = g.num_vars(), l = lift.num_new();
    const IntMat at = lift.a.transpose();
    LaurentPoly out(nv + l);
    for (const auto& [e, c] : g.terms()) {
        IntVec f = e;
        IntVec s = at * e;
        f.insert(f.end(), s.begin(), s.end());
        out.add_term(f, c);
    }
    return out.monomial_free();
}

LaurentPoly root_normalize(const LaurentPoly& g2, const WeakLifting& lift) {
    const std::size_t l = lift.num_new();
    const std::size_t base = g2.num_vars() - l;
    LaurentPoly out(g2.num_vars());
    for (const auto& [e, c] : g2.terms()) {
        IntVec f = e;
        for (std::size_t j = 0; j < l; ++j) {
            if (!mpz_divisible_p(f[base + j].get_mpz_t(), lift.m[j].get_mpz_t()))
                throw Error(ErrorKind::InternalError, "new-variable exponent is not divisible by its multiplier");
            f[base + j] /= lift.m[j];
        }
        out.add_term(f, c);
    }
    return out;
}

LaurentPoly transfer_with_lifting(const LaurentPoly& g, const WeakLifting& lift) {
    return root_normalize(shift_polynomial(g, lift), lift).monomial_free();
}

LaurentPoly transfer_principal_ideal(const LaurentPoly& g, const IntMat& p, const IntMat& b) {
    return transfer_with_lifting(g, weak_b_lifting(p, b));
}

Parity parity_of(std::size_t r) { return r % 2 ? Parity::Odd : Parity::Even; }

EtaData eta_rows(const IntMat& a, std::size_t r, Parity parity) {
    if (a.rows() != r + 1) throw Error(ErrorKind::DimensionMismatch, "lifting matrix must have r+1 rows");
    if (parity != parity_of(r)) throw Error(ErrorKind::DimensionMismatch, "parity does not match r");
    const std::size_t l = a.cols();
    EtaData out;
    for (std::size_t i = 0; i + 1 <= r; i += 2) {
        IntVec s(l);
        for (std::size_t j = 0; j < l; ++j) s[j] = a(i, j) + a(i + 1, j);
        out.term_index.push_back(i);
        out.eta.push_back(std::move(s));
    }
    if (parity == Parity::Even) {
        IntVec s(l);
        for (std::size_t j = 0; j < l; ++j) s[j] = 2 * a(r, j);
        out.term_index.push_back(r);
        out.eta.push_back(std::move(s));
    }
    out.mu = IntVec(l);
    for (std::size_t j = 0; j < l; ++j) {
        Int lo = out.eta.front()[j];
        for (const auto& e : out.eta) lo = std::min(lo, e[j]);
        out.mu[j] = -lo;
    }
    for (auto& e : out.eta)
        for (std::size_t j = 0; j < l; ++j) e[j] += out.mu[j];
    return out;
}

LaurentPoly relation_from_eta(const EtaData& eta, std::size_t r, Parity parity) {
    const std::size_t l = eta.mu.size();
    LaurentPoly out(r + 1 + l);
    for (std::size_t k = 0; k < eta.term_index.size(); ++k) {
        const std::size_t i = eta.term_index[k];
        IntVec e(r + 1 + l);
        if (parity == Parity::Even && i == r) {
            e[r] = 2;
        } else {
            e[i] = 1;
            e[i + 1] = 1;
        }
        for (std::size_t j = 0; j < l; ++j) e[r + 1 + j] = eta.eta[k][j];
        out.add_term(e, 1);
    }
    return out;
}

LaurentPoly quadric_normal_form(std::size_t r) {
    EtaData empty;
    for (std::size_t i = 0; i + 1 <= r; i += 2) {
        empty.term_index.push_back(i);
        empty.eta.emplace_back();
    }
    if (r % 2 == 0) {
        empty.term_index.push_back(r);
        empty.eta.emplace_back();
    }
    return relation_from_eta(empty, r, parity_of(r));
}

CertificateResult prime_certificate_quadric(const LaurentPoly& g2, std::size_t r, Parity parity) {
    if (parity != parity_of(r)) throw Error(ErrorKind::DimensionMismatch, "parity does not match r");
    const std::size_t t = r + 1;
    if (g2.num_vars() < t) throw Error(ErrorKind::ShapeMismatch, "relation has fewer than r+1 variables");
    std::vector<std::set<std::size_t>> support;
    std::vector<bool> s_free;
    for (const auto& [e, c] : g2.terms()) {
        Int deg = 0;
        std::set<std::size_t> sup;
        for (std::size_t i = 0; i < t; ++i) {
            if (sgn(e[i]) < 0) throw Error(ErrorKind::ShapeMismatch, "negative exponent");
            deg += e[i];
            if (sgn(e[i]) > 0) sup.insert(i);
        }
        if (deg != 2) throw Error(ErrorKind::ShapeMismatch, "a term does not have degree two in the T variables");
        bool free = true;
        for (std::size_t i = t; i < e.size(); ++i)
            if (sgn(e[i]) != 0) free = false;
        support.push_back(std::move(sup));
        s_free.push_back(free);
    }

    CertificateResult out;
    out.hypotheses.emplace_back("relation_monomial_free", g2.is_monomial_free());
    const std::size_t nt = support.size();
    auto isolated = [&](std::size_t i) {
        for (std::size_t k = 0; k < nt; ++k) {
            if (k == i) continue;
            for (std::size_t v : support[i])
                if (support[k].count(v)) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < nt && !out.certified; ++i) {
        if (!s_free[i] || !isolated(i)) continue;
        for (std::size_t j = i + 1; j < nt; ++j) {
            if (!s_free[j] || !isolated(j)) continue;
            if (support[i].size() + support[j].size() < 3) continue;
            out.certified = true;
            out.witness = {i, j};
            break;
        }
    }
    const std::size_t expected = parity == Parity::Odd ? 4 : 3;
    if (out.certified) {
        out.notes.push_back("two terms free of new variables use " +
                            std::to_string(support[out.witness[0]].size() + support[out.witness[1]].size()) +
                            " variables that occur nowhere else");
    } else {
        std::size_t free_count = static_cast<std::size_t>(std::count(s_free.begin(), s_free.end(), true));
        out.notes.push_back("no pair of isolated terms free of new variables covering at least three variables (" +
                            std::to_string(free_count) + " terms are free of new variables)");
    }
    out.hypotheses.emplace_back("isolated_free_terms_cover_" + std::to_string(expected) + "_variables", out.certified);
    return out;
}

IntVec delta_expansion(const IntVec& x) {
    const std::size_t n = x.size();
    Int lo = 0;
    for (const auto& v : x) lo = std::min(lo, v);
    IntVec a(n + 1);
    a[0] = -lo;
    for (std::size_t i = 0; i < n; ++i) a[i + 1] = x[i] - lo;
    return a;
}

namespace {

std::vector<IntVec> validated_expansions(const IntMat& b, std::size_t n) {
    if (b.rows() != n) throw Error(ErrorKind::DimensionMismatch, "columns must have length n");
    std::vector<IntVec> out;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        IntVec a = delta_expansion(b.col(j));
        std::size_t supp = static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](const Int& v) { return sgn(v) > 0; }));
        if (supp == 0) throw Error(ErrorKind::NotOnTropical, "column " + std::to_string(j) + " is zero");
        if (supp == 1) throw Error(ErrorKind::NotOnTropical, "column " + to_string(b.col(j)) + " lies on a ray of Delta(n)");
        if (supp + 1 > n) throw Error(ErrorKind::NotOnTropical, "column " + to_string(b.col(j)) + " is off the tropical hyperplane");
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace

CertificateResult common_cone_certificate(const IntMat& b, std::size_t n) {
    const std::vector<IntVec> exps = validated_expansions(b, n);
    std::set<std::size_t> used;
    for (const auto& a : exps)
        for (std::size_t i = 0; i <= n; ++i)
            if (sgn(a[i]) > 0) used.insert(i);
    CertificateResult out;
    out.certified = used.size() <= n;
    std::string sup;
    for (std::size_t i : used) sup += (sup.empty() ? "e" : ",e") + std::to_string(i);
    out.notes.push_back("columns use the rays {" + sup + "}");
    for (std::size_t i = 0; i <= n && out.certified; ++i)
        if (!used.count(i)) {
            out.witness.push_back(i);
            out.notes.push_back("common maximal cone omits e" + std::to_string(i));
            break;
        }
    out.hypotheses.emplace_back("common_cone", out.certified);
    return out;
}

LaurentPoly lift_h1(const IntMat& b, std::size_t n) {
    const std::vector<IntVec> exps = validated_expansions(b, n);
    const std::size_t l = exps.size();
    LaurentPoly h(n + 1 + l);
    for (std::size_t i = 0; i <= n; ++i) {
        IntVec e(n + 1 + l);
        e[i] = 1;
        for (std::size_t j = 0; j < l; ++j) e[n + 1 + j] = exps[j][i];
        h.add_term(e, 1);
    }
    return h;
}

}  // namespace chowq
