#include "chowq/chow_quadric.hpp"
#include "doctest.h"

using namespace chowq;

namespace {

IntVec v(std::initializer_list<long> xs) { return make_vec(xs); }

const IntMat kP4{{-1, -1, 1, 1, 0, 0, 0},
                 {0, 0, 0, 0, -1, 1, 0},
                 {0, -1, -1, 1, 0, 1, 0},
                 {0, 0, 1, 1, -1, -1, 0},
                 {0, 0, 0, 0, -1, 0, 1}};
const IntMat kGrading4{{-2, 2, -1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1, 0}, {2, 0, 1, 0, 0, 0, 0, -1}};

// Invariants every successful run must satisfy, checked from the output alone.
void check_invariants(const CoxPresentation& c) {
    const std::size_t r = c.zeta.size() - 1;
    const std::size_t l = c.b.cols();
    IntMat pb = hstack(c.p, c.b);
    for (std::size_t i = 0; i < c.grading.rows(); ++i) CHECK(is_zero(pb * c.grading.row(i)));
    CHECK(c.grading.rows() == l + 2);
    const IntVec& first = c.relation.terms().begin()->first;
    for (const auto& [e, coef] : c.relation.terms()) {
        IntVec d(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) d[i] = e[i] - first[i];
        CHECK(is_zero(c.grading * d));
    }
    CHECK(c.relation.is_monomial_free());
    CHECK(c.relation.set_trailing_to_one(r + 1).monomial_free() == quadric_normal_form(r));
    CHECK(c.hyperplane_rays.size() == l);
    for (std::size_t j = 0; j < l; ++j) CHECK(primitive_part(c.p * c.a.col(j)) == c.b.col(j));
    CHECK(c.certificate.certified);
}

}  // namespace

TEST_CASE("hypotheses of the seven-weight example") {
    auto rep = validate_hypotheses(WeightSystem::from(v({-2, 2, -1, 1, 0, 0, 0})));
    CHECK(rep.ok());
    CHECK(rep.pair_sum_zero);
    CHECK(rep.columns_generate);
    CHECK(rep.r_subsets_generate);
    CHECK(rep.min_weight_count == 3);
    CHECK(rep.min_weight_statement);
    CHECK_FALSE(rep.min_weight_proof_literal);
    CHECK(rep.min_weight_discrepancy);
}

TEST_CASE("hypotheses fail for the eight-weight example") {
    auto rep = validate_hypotheses(WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1})));
    CHECK_FALSE(rep.ok());
    CHECK(rep.min_weight_count == 2);
    CHECK_FALSE(rep.min_weight_statement);
    CHECK(rep.pair_sum_zero);
}

TEST_CASE("degenerate two-weight system") {
    auto rep = validate_hypotheses(WeightSystem::from(v({0, 0})));
    CHECK(rep.pair_sum_zero);
    CHECK_FALSE(rep.columns_generate);
    CHECK_FALSE(rep.ok());
    CHECK_THROWS_AS(WeightSystem::from(v({1})), Error);
}

TEST_CASE("r-subset witness") {
    auto rep = validate_hypotheses(WeightSystem::from(v({-2, 2, -2, 2, 0, 0, 0})));
    CHECK_FALSE(rep.r_subsets_generate);
    CHECK_FALSE(rep.r_subset_witness.empty());
}

TEST_CASE("weight reordering") {
    auto [ws, perm] = reorder_weights(WeightSystem::from(v({-2, 2, -1, 1, 0, 0, 0})));
    CHECK(perm == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6});
    CHECK(ws.zeta == v({-2, 2, -1, 1, 0, 0, 0}));
    CHECK(pair_sort_permutation(v({0, 0, -1, 1})) == std::vector<std::size_t>{2, 3, 0, 1});
    CHECK(pair_sort_permutation(v({0, 0, -1, 1, 0})) == std::vector<std::size_t>{2, 3, 0, 1, 4});
    CHECK_THROWS_AS(reorder_weights(WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1}))), Error);
}

TEST_CASE("Cox ring of the seven-weight example") {
    CoxPresentation c = cox_ring_of_chow_quotient(WeightSystem::from(v({-2, 2, -1, 1, 0, 0, 0})));
    CHECK(c.relation.to_pretty_string(c.variables) == "T0·T1·S1² + T2·T3·S1 + T4·T5 + T6²");
    CHECK(row_lattices_equal(c.grading, kGrading4));
    CHECK(row_lattices_equal(c.p, kP4));
    REQUIRE(c.hyperplane_rays.size() == 1);
    CHECK(c.a.col(0) == v({2, 0, 1, 0, 0, 0, 0}));
    CHECK(c.eta.eta == std::vector<IntVec>{v({2}), v({1}), v({0}), v({0})});
    CHECK(c.eta.mu == v({0}));
    CHECK(c.ray_source == "corank2");
    // In the printed basis the new ray is (-1,0,-1,1,0) = 2 p0 + p2.
    IntMat u(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        IntVec x = solve_diophantine(c.p.transpose(), kP4.row(i));
        for (std::size_t k = 0; k < 5; ++k) u(i, k) = x[k];
    }
    CHECK(u * c.p == kP4);
    CHECK(u * c.b.col(0) == v({-1, 0, -1, 1, 0}));
    CHECK(kP4 * v({2, 0, 1, 0, 0, 0, 0}) == v({-1, 0, -1, 1, 0}));
    check_invariants(c);
}

TEST_CASE("Cox ring when no new rays appear") {
    CoxPresentation c = cox_ring_of_chow_quotient(WeightSystem::from(v({-1, 1, 0, 0, 0})));
    CHECK(c.b.cols() == 0);
    CHECK(c.relation == quadric_normal_form(4));
    CHECK(row_lattices_equal(c.grading, c.q));
    check_invariants(c);
}

TEST_CASE("Cox ring of an eight-weight system") {
    CoxPresentation c = cox_ring_of_chow_quotient(WeightSystem::from(v({-1, 1, -1, 1, 0, 0, 0, 0})));
    check_invariants(c);
    MESSAGE("relation: " << c.relation.to_string(c.variables));
}

TEST_CASE("Cox ring after a nontrivial reordering") {
    CoxPresentation c = cox_ring_of_chow_quotient(WeightSystem::from(v({0, 0, -3, 3, 0, 0, -1, 1, 0})));
    CHECK(c.permutation == std::vector<std::size_t>{2, 3, 6, 7, 0, 1, 4, 5, 8});
    check_invariants(c);
    // The reordered relation has its isolated terms at the end.
    CHECK(c.certificate.certified);
}

TEST_CASE("fallback to the brute-force fan") {
    CoxPresentation c = cox_ring_of_chow_quotient(WeightSystem::from(v({-1, 1, 0, 0, 0, 0})));
    CHECK(c.ray_source == "bruteforce");
    check_invariants(c);
}

TEST_CASE("pipeline rejects invalid weights") {
    try {
        cox_ring_of_chow_quotient(WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1})));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
    CHECK_THROWS_AS(cox_ring_of_chow_quotient(WeightSystem::from(v({-1, 2, 0, 0, 0}))), Error);
}
