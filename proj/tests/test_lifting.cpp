#include <random>

#include "chowq/lifting.hpp"
#include "doctest.h"

using namespace chowq;

namespace {

IntVec v(std::initializer_list<long> xs) { return make_vec(xs); }

const IntMat kP4{{-1, -1, 1, 1, 0, 0, 0},
                 {0, 0, 0, 0, -1, 1, 0},
                 {0, -1, -1, 1, 0, 1, 0},
                 {0, 0, 1, 1, -1, -1, 0},
                 {0, 0, 0, 0, -1, 0, 1}};

LaurentPoly poly(std::size_t nv, std::vector<std::vector<long>> exps) {
    LaurentPoly p(nv);
    for (const auto& e : exps) {
        IntVec x(e.begin(), e.end());
        p.add_term(x, 1);
    }
    return p;
}

IntMat cubic_transfer_p() {
    IntMat p(7, 8);
    for (std::size_t i = 0; i < 7; ++i) {
        p(i, 0) = -1;
        p(i, i + 1) = 1;
    }
    return p;
}

}  // namespace

TEST_CASE("laurent polynomial basics") {
    LaurentPoly p = poly(2, {{1, 2}, {3, 1}});
    CHECK(p.min_exponent() == v({1, 1}));
    CHECK_FALSE(p.is_monomial_free());
    CHECK(p.monomial_free() == poly(2, {{0, 1}, {2, 0}}));
    LaurentPoly q(2);
    q.add_term(v({1, 0}), 1);
    q.add_term(v({1, 0}), -1);
    CHECK(q.empty());
    CHECK(poly(3, {{1, 1, 2}, {0, 0, 0}}).set_trailing_to_one(2) == poly(2, {{1, 1}, {0, 0}}));
    CHECK(quadric_normal_form(6).to_pretty_string(default_var_names(7, 0)) == "T0·T1 + T2·T3 + T4·T5 + T6²");
}

TEST_CASE("weak liftings") {
    IntMat p{{1, 0, 2}, {0, 1, 3}};
    WeakLifting l = weak_b_lifting(p, IntMat{{1}, {0}});
    CHECK(l.m.front() == 1);
    CHECK(p * l.a.col(0) == v({1, 0}));

    WeakLifting two = weak_b_lifting(IntMat{{2}}, IntMat{{1}});
    CHECK(two.a == IntMat{{1}});
    CHECK(two.m.front() == 2);

    CHECK_THROWS_AS(weak_b_lifting(IntMat{{1, 1}, {1, 1}}, IntMat{{1}, {0}}), Error);

    WeakLifting ex = weak_b_lifting(kP4, IntMat::from_columns({v({-1, 0, -1, 1, 0})}, 5));
    IntVec x = ex.a.col(0);
    IntVec d = x;
    for (std::size_t i = 0; i < 7; ++i) d[i] -= v({2, 0, 1, 0, 0, 0, 0})[i];
    CHECK(is_zero(kP4 * d));
}

TEST_CASE("homogeneity uses the row lattice of p") {
    LaurentPoly g1 = quadric_normal_form(6);
    CHECK(is_homogeneous(g1, kP4));
    CHECK_FALSE(is_homogeneous(poly(7, {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}}), kP4));
}

TEST_CASE("transfer along e1+e3 for the cubic example") {
    IntMat p = cubic_transfer_p();
    LaurentPoly g1 = poly(8, {{1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 1}});
    IntMat b = IntMat::from_columns({v({1, 0, 1, 0, 0, 0, 0})}, 7);
    LaurentPoly g2 = transfer_principal_ideal(g1, p, b);
    LaurentPoly expect = poly(9, {{1, 1, 0, 0, 0, 0, 0, 0, 1},
                                  {0, 0, 1, 1, 0, 0, 0, 0, 1},
                                  {0, 0, 0, 0, 1, 1, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 1, 1, 0}});
    CHECK(g2 == expect);
    std::vector<std::string> names{"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9"};
    CHECK(g2.to_string(names) == "T1*T2*T9 + T3*T4*T9 + T5*T6 + T7*T8");
    CHECK(transfer_principal_ideal(g1, p, IntMat(7, 0)) == g1);
}

TEST_CASE("shift of the seven-variable quadric") {
    LaurentPoly g1 = quadric_normal_form(6);
    IntMat b = IntMat::from_columns({v({-1, 0, -1, 1, 0})}, 5);
    WeakLifting lift = lifting_from_columns(kP4, b, IntMat::from_columns({v({2, 0, 1, 0, 0, 0, 0})}, 7));
    LaurentPoly g2 = shift_polynomial(g1, lift);
    CHECK(g2.to_pretty_string(default_var_names(7, 1)) == "T0·T1·S1² + T2·T3·S1 + T4·T5 + T6²");
    CHECK(g2.is_monomial_free());
    CHECK(transfer_principal_ideal(g1, kP4, b) == g2);
    CHECK_THROWS_AS(shift_polynomial(poly(7, {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}}), lift), Error);
}

TEST_CASE("transfer is independent of the lifting") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> d(-3, 3), small(0, 2);
    int done = 0;
    while (done < 30) {
        IntMat q(2, 6);
        for (std::size_t j = 0; j < 6; ++j) {
            q(0, j) = d(rng);
            q(1, j) = d(rng);
        }
        if (rank(q) != 2) continue;
        IntMat p = gale_dual(q);
        IntVec alpha(6);
        for (auto& x : alpha) x = small(rng);
        IntVec bcol = p * alpha;
        if (is_zero(bcol)) continue;
        bcol = primitive_part(bcol);
        IntMat b = IntMat::from_columns({bcol}, p.rows());
        // Homogeneous g1: base exponent plus row-lattice shifts.
        LaurentPoly g1(6);
        IntVec base(6, Int(6));
        g1.add_term(base, 1);
        for (std::size_t k = 0; k < p.rows() && k < 3; ++k) {
            IntVec e = base;
            for (std::size_t i = 0; i < 6; ++i) e[i] += p(k, i);
            g1.add_term(e, 1);
        }
        ++done;
        WeakLifting first = weak_b_lifting(p, b);
        IntMat ker = kernel_basis(p);
        IntMat a2(6, 1);
        for (std::size_t i = 0; i < 6; ++i) a2(i, 0) = 2 * first.a(i, 0) + ker(0, i) - 3 * ker(1, i);
        WeakLifting second = lifting_from_columns(p, b, a2);
        CHECK(second.m.front() == 2 * first.m.front());
        CHECK(transfer_with_lifting(g1, first) == transfer_with_lifting(g1, second));
        LaurentPoly g2 = transfer_with_lifting(g1, first);
        CHECK(g2.is_monomial_free());
        CHECK(g2.set_trailing_to_one(6).monomial_free() == g1.monomial_free());
    }
}

TEST_CASE("eta rows") {
    IntMat a = IntMat::from_columns({v({2, 0, 1, 0, 0, 0, 0})}, 7);
    EtaData e = eta_rows(a, 6, Parity::Even);
    CHECK(e.term_index == std::vector<std::size_t>{0, 2, 4, 6});
    CHECK(e.eta == std::vector<IntVec>{v({2}), v({1}), v({0}), v({0})});
    CHECK(e.mu == v({0}));
    CHECK(relation_from_eta(e, 6, Parity::Even).to_pretty_string(default_var_names(7, 1)) ==
          "T0·T1·S1² + T2·T3·S1 + T4·T5 + T6²");

    EtaData z = eta_rows(IntMat(8, 2), 7, Parity::Odd);
    for (const auto& row : z.eta) CHECK(is_zero(row));
    CHECK(is_zero(z.mu));

    IntMat neg = IntMat::from_columns({v({-1, -2, 0, 1, 3, 0, 0, 0}), v({0, 0, 1, 0, 0, 0, 0, -1})}, 8);
    EtaData n = eta_rows(neg, 7, Parity::Odd);
    // Definition recomputed directly.
    std::vector<IntVec> sums;
    for (std::size_t i = 0; i < 8; i += 2) sums.push_back({neg(i, 0) + neg(i + 1, 0), neg(i, 1) + neg(i + 1, 1)});
    for (std::size_t j = 0; j < 2; ++j) {
        Int lo = sums[0][j];
        for (const auto& s : sums) lo = std::min(lo, s[j]);
        CHECK(n.mu[j] == -lo);
        Int eta_min = n.eta[0][j];
        for (const auto& row : n.eta) eta_min = std::min(eta_min, row[j]);
        CHECK(eta_min == 0);
    }
    CHECK(n.mu[0] == 3);
}

TEST_CASE("quadric primality certificate") {
    LaurentPoly g2 = poly(8, {{1, 1, 0, 0, 0, 0, 0, 2}, {0, 0, 1, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 0}});
    CHECK(prime_certificate_quadric(g2, 6, Parity::Even).certified);

    LaurentPoly bad = poly(5, {{1, 1, 0, 0, 1}, {0, 0, 1, 1, 1}});
    CHECK_FALSE(prime_certificate_quadric(bad, 3, Parity::Odd).certified);

    LaurentPoly ok5 = poly(7, {{1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1}});
    CHECK(prime_certificate_quadric(ok5, 5, Parity::Odd).certified);

    LaurentPoly cubic = poly(4, {{1, 1, 1, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(prime_certificate_quadric(cubic, 3, Parity::Odd), Error);
}

TEST_CASE("expansion over Delta(n) rays") {
    CHECK(delta_expansion(v({0, -1, -1})) == v({1, 1, 0, 0}));
    CHECK(delta_expansion(v({2, 0})) == v({0, 2, 0}));
    CHECK(delta_expansion(v({-1, -1})) == v({1, 0, 0}));
}

TEST_CASE("common cone certificate") {
    CHECK(common_cone_certificate(IntMat::from_columns({v({0, -1, -1})}, 3), 3).certified);
    CHECK(common_cone_certificate(IntMat::from_columns({v({1, 1, 0})}, 3), 3).certified);
    CHECK_FALSE(common_cone_certificate(IntMat::from_columns({v({0, -1, -1}), v({0, 1, 1})}, 3), 3).certified);
    try {
        common_cone_certificate(IntMat::from_columns({v({1, 1})}, 2), 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotOnTropical);
    }
    CHECK_THROWS_AS(common_cone_certificate(IntMat::from_columns({v({1, 0, 0})}, 3), 3), Error);
    CHECK_THROWS_AS(common_cone_certificate(IntMat::from_columns({v({1, 2, 3})}, 3), 3), Error);
}

TEST_CASE("lift of the tropical hyperplane") {
    LaurentPoly h1 = poly(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(lift_h1(IntMat(3, 0), 3) == h1);
    LaurentPoly h2 = lift_h1(IntMat::from_columns({v({0, -1, -1})}, 3), 3);
    CHECK(h2.to_string(default_var_names(4, 1)) == "T0*S1 + T1*S1 + T2 + T3");
    CHECK(h2.set_trailing_to_one(4) == h1);
    // The lift is a weak lifting of the columns over [e0, ..., e3].
    IntMat p{{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}};
    CHECK(p * v({1, 1, 0, 0}) == v({0, -1, -1}));
    CHECK_THROWS_AS(lift_h1(IntMat::from_columns({v({1, 1})}, 2), 2), Error);
}
