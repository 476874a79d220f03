#include <algorithm>
#include <random>
#include <set>

#include "chowq/tropres.hpp"
#include "doctest.h"

using namespace chowq;

namespace {

IntVec v(std::initializer_list<long> xs) { return make_vec(xs); }

// The hyperplane 1 + S1 + ... + Sn tropicalizes (min convention) to the points
// where min(0, x_1, ..., x_n) is attained at least twice.
bool tropical_hyperplane_oracle(const IntVec& x) {
    Int m = 0;
    for (const auto& c : x) m = std::min(m, c);
    int hits = (m == 0) ? 1 : 0;
    for (const auto& c : x) hits += (c == m) ? 1 : 0;
    return hits >= 2;
}

IntVec random_point(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntVec x(n);
    for (auto& c : x) c = d(rng);
    return x;
}

IntVec random_quadric_weights(std::mt19937_64& rng, std::size_t r) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        IntVec z;
        for (std::size_t i = 0; i + 1 <= r; i += 2) {
            Int a = d(rng);
            z.push_back(-a);
            z.push_back(a);
        }
        if (r % 2 == 0) z.push_back(0);
        if (std::any_of(z.begin(), z.end(), [](const Int& x) { return x != 0; })) return z;
    }
}

std::set<IntVec> as_set(const std::vector<IntVec>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("Delta fans") {
    Fan d1 = delta_fan(1);
    CHECK(d1.rays() == std::vector<IntVec>{v({-1}), v({1})});
    CHECK(d1.maximal_cones().size() == 2);
    CHECK(delta_fan(2).maximal_cones().size() == 3);
    Fan d3 = delta_fan(3);
    CHECK(d3.maximal_cones().size() == 4);
    CHECK(d3.is_valid());
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) CHECK(d3.support_contains(random_point(rng, 3, 5)));

    Fan p2 = delta_prime_fan(2);
    CHECK(p2.rays().size() == 3);
    CHECK(p2.maximal_cones().size() == 3);
    Fan p3 = delta_prime_fan(3);
    CHECK(p3.maximal_cones().size() == 6);
    for (const auto& c : p3.maximal_cones()) CHECK(c.dim() == 2);
    CHECK(p3.support_contains(v({0, -1, -1})));
    for (const auto& r : p3.rays()) CHECK(r != v({0, -1, -1}));
    CHECK_FALSE(p3.support_contains(v({1, 2, 3})));

    Fan p1 = delta_prime_fan(1);
    CHECK(p1.rays().empty());
    CHECK(p1.support_contains(v({0})));
    CHECK_FALSE(p1.support_contains(v({1})));
    CHECK_THROWS_AS(delta_fan(0), Error);
}

TEST_CASE("codimension-one skeleton matches the tropical hyperplane") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 2; n <= 4; ++n) {
        Fan dp = delta_prime_fan(n);
        for (int t = 0; t < 300; ++t) {
            IntVec x = random_point(rng, n, 2);
            CHECK(dp.support_contains(x) == tropical_hyperplane_oracle(x));
        }
    }
}

TEST_CASE("Newton setup") {
    const IntMat p7 = gale_dual(WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1})).q());
    TropicalSetup s = newton_setup(quadric_normal_form(7), p7, NewtonOptions{false});
    CHECK(s.n == 3);
    CHECK(s.vertices.front() == v({1, 1, 0, 0, 0, 0, 0, 0}));
    CHECK(s.p_gr.row(0) == v({-1, -1, 1, 1, 0, 0, 0, 0}));
    CHECK(s.pi * p7 == s.p_gr);
    CHECK(s.lineality_dim == 3);
    CHECK(rank(s.pi) == 3);
    CHECK_FALSE(s.sigma.has_value());

    const IntMat p6 = gale_dual(WeightSystem::from(v({-2, 2, -1, 1, 0, 0, 0})).q());
    TropicalSetup s6 = newton_setup(quadric_normal_form(6), p6, NewtonOptions{false});
    CHECK(s6.n == 3);
    CHECK(s6.vertices.back() == v({0, 0, 0, 0, 0, 0, 2}));

    LaurentPoly single(8);
    single.add_term(v({1, 1, 0, 0, 0, 0, 0, 0}), 1);
    try {
        newton_setup(single, p7, NewtonOptions{false});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateNewton);
    }

    // A polynomial that is not homogeneous for the weights has no Pi.
    LaurentPoly bad(8);
    bad.add_term(v({2, 0, 0, 0, 0, 0, 0, 0}), 1);
    bad.add_term(v({0, 0, 0, 0, 0, 0, 0, 2}), 1);
    try {
        newton_setup(bad, p7, NewtonOptions{false});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InconsistentDiagram);
    }
}

TEST_CASE("Newton vertices skip interior terms") {
    LaurentPoly g(2);
    g.add_term(v({2, 0}), 1);
    g.add_term(v({1, 1}), 1);
    g.add_term(v({0, 2}), 1);
    IntMat p{{1, -1}};
    TropicalSetup s = newton_setup(g, p, NewtonOptions{false});
    CHECK(s.n == 1);
    CHECK(s.vertices == std::vector<IntVec>{v({2, 0}), v({0, 2})});
}

TEST_CASE("lifted tropical fan") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(lifted_tropical_fan(IntMat::identity(n)) == delta_prime_fan(n));

    const IntMat p7 = gale_dual(WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1})).q());
    TropicalSetup s = newton_setup(quadric_normal_form(7), p7, NewtonOptions{false});
    Fan lf = lifted_tropical_fan(s);
    CHECK(lf.lineality().size() == s.lineality_dim);
    for (const auto& c : lf.maximal_cones()) {
        CHECK(c.lineality_dim() == 7 - 1 - 3);
        CHECK(c.dim() == 2 + 3);
        for (const auto& k : c.lineality()) CHECK(is_zero(s.pi * k));
    }
    // Membership is pulled back from Delta'(3).
    Fan dp = delta_prime_fan(3);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        IntVec x = random_point(rng, 6, 3);
        CHECK(lf.support_contains(x) == dp.support_contains(s.pi * x));
    }
    for (std::size_t k = 0; k < 8; ++k) CHECK(lf.support_contains(p7.col(k)));
}

TEST_CASE("weak tropical resolution") {
    const IntMat p7 = gale_dual(WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1})).q());
    TropicalSetup s = newton_setup(quadric_normal_form(7), p7);
    REQUIRE(s.sigma.has_value());
    Fan res = weak_tropical_resolution(s);
    Fan lf = lifted_tropical_fan(s);
    CHECK(res.is_valid());
    CHECK(refines(res, lf));
    for (const auto& c : res.maximal_cones()) {
        bool in_sigma = false;
        for (const auto& d : s.sigma->maximal_cones()) in_sigma = in_sigma || d.contains(c);
        CHECK(in_sigma);
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        IntVec x = random_point(rng, 6, 3);
        CHECK(res.support_contains(x) == lf.support_contains(x));
    }
    // Refining an already refined fan changes nothing.
    TropicalSetup s2 = s;
    s2.sigma = res;
    CHECK(weak_tropical_resolution(s2) == res);

    ZeroQuotientData z = zero_quotient(res, s.pi);
    CHECK(std::find(z.projected_rays.begin(), z.projected_rays.end(), v({0, -1, -1})) != z.projected_rays.end());
}

TEST_CASE("zero quotient") {
    IntMat pi{{1, 0, 0}, {0, 1, 0}};
    Fan in_kernel = Fan::from_cones(3, {Cone::from_generators(3, {v({0, 0, 1})}), Cone::from_generators(3, {v({0, 0, -1})})});
    ZeroQuotientData z = zero_quotient(in_kernel, pi);
    CHECK(z.projected_rays.empty());
    CHECK(z.delta0.rays().empty());

    Fan f = Fan::from_cones(3, {Cone::from_generators(3, {v({2, 4, 1}), v({0, 0, 1})}), Cone::from_generators(3, {v({1, 2, 0})})});
    z = zero_quotient(f, pi);
    CHECK(z.projected_rays == std::vector<IntVec>{v({1, 2})});
    CHECK(z.delta0.maximal_cones().size() == 1);

    CHECK_THROWS_AS(zero_quotient(f, IntMat{{1, 0, 0}, {2, 0, 0}}), Error);
}

TEST_CASE("final example of the resolution section") {
    MdsReport rep = mds_certificate(WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1})));
    CHECK(rep.verdict == Verdict::Certified);
    const Fan expected = stellar_subdivision(delta_fan(3), v({0, -1, -1}));
    CHECK(as_set(rep.zero.projected_rays) == as_set(expected.rays()));
    CHECK(rep.ambient == expected);
    CHECK(rep.new_rays.cols() == 1);
    CHECK(rep.new_rays.col(0) == v({0, -1, -1}));
    REQUIRE(rep.h2.has_value());
    CHECK(rep.h2->to_string(default_var_names(4, 1)) == "T0*S1 + T1*S1 + T2 + T3");
    CHECK(rep.facet_claim_ok);
    CHECK(rep.sigma_images_in_base);
    CHECK(rep.common_cone.certified);
    // The weights violate the hypotheses of the Cox ring pipeline.
    CHECK_THROWS_AS(cox_ring_of_chow_quotient(WeightSystem::from(rep.zeta)), Error);
}

TEST_CASE("certificate agrees with the Cox ring pipeline") {
    for (const IntVec& z : {v({-2, 2, -1, 1, 0, 0, 0}), v({-1, 1, -1, 1, 0, 0, 0, 0}), v({0, 0, -3, 3, 0, 0, -1, 1, 0})}) {
        MdsReport rep = mds_certificate(WeightSystem::from(z));
        CHECK(rep.verdict == Verdict::Certified);
        CoxPresentation c = cox_ring_of_chow_quotient(WeightSystem::from(z));
        CHECK(rep.permutation == c.permutation);
        CHECK(as_set(rep.sigma_new_rays) == as_set(c.b.column_list()));
    }
    MdsReport rep = mds_certificate(WeightSystem::from(v({-2, 2, -1, 1, 0, 0, 0})));
    REQUIRE(rep.h2.has_value());
    CHECK(rep.h2->to_string(default_var_names(4, 1)) == "T0*S1^2 + T1*S1 + T2 + T3");
}

TEST_CASE("small case without projected rays") {
    MdsReport rep = mds_certificate(WeightSystem::from(v({-1, 1, -1, 1})));
    CHECK(rep.setup.n == 1);
    CHECK(rep.zero.projected_rays.empty());
    CHECK(rep.new_rays.cols() == 0);
    CHECK(rep.verdict == Verdict::Certified);
    REQUIRE(rep.h2.has_value());
    CHECK(rep.h2->to_string(default_var_names(2, 0)) == "T0 + T1");
}

TEST_CASE("certificate rejects weights outside the normal form") {
    try {
        mds_certificate(WeightSystem::from(v({1, 2, 3, 4})));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidWeights);
    }
    CHECK_THROWS_AS(mds_certificate(WeightSystem::from(v({0, 0, 0, 0}))), Error);
}

TEST_CASE("projected rays do not depend on the Gale dual basis") {
    const IntMat q = WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1})).q();
    const IntMat p = gale_dual(q);
    IntMat u = IntMat::identity(6);
    u(0, 1) = 2;
    u(3, 5) = -1;
    u(4, 0) = 1;
    CHECK(determinant(u) == 1);
    const IntMat p2 = u * p;
    TropicalSetup a = newton_setup(quadric_normal_form(7), p);
    TropicalSetup b = newton_setup(quadric_normal_form(7), p2);
    CHECK(b.pi * u == a.pi);
    ZeroQuotientData za = zero_quotient(weak_tropical_resolution(a), a.pi);
    ZeroQuotientData zb = zero_quotient(weak_tropical_resolution(b), b.pi);
    CHECK(za.projected_rays == zb.projected_rays);
}

TEST_CASE("random quadric weights are certified") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 12; ++t) {
        std::uniform_int_distribution<int> dr(3, 7);
        const std::size_t r = static_cast<std::size_t>(dr(rng));
        IntVec z = random_quadric_weights(rng, r);
        CAPTURE(to_string(z));
        MdsReport rep = mds_certificate(WeightSystem::from(z));
        CHECK(rep.verdict == Verdict::Certified);
        CHECK(rep.facet_claim_ok);
        CHECK(rep.sigma_images_in_base);
        for (const auto& b : rep.zero.projected_rays) {
            CHECK_FALSE(is_zero(b));
            CHECK(content(b) == 1);
            CHECK(rep.ambient.support_contains(b));
        }
        for (const auto& fc : rep.facet_claim)
            if (!fc.on_delta_ray) CHECK(fc.in_facet);
        if (rep.h2) CHECK(rep.h2->is_monomial_free());
    }
}

TEST_CASE("parallel kernels reproduce the serial pipeline") {
    const WeightSystem w = WeightSystem::from(v({-3, 3, -3, 3, -2, 2, -1, 1}));
    const MdsReport serial = mds_certificate(w, MdsOptions{Exec::Serial});
    const MdsReport parallel = mds_certificate(w, MdsOptions{Exec::Parallel});
    CHECK(parallel == serial);
    const Fan sigma = *serial.setup.sigma;
    CHECK(sigma.is_valid(Exec::Parallel) == sigma.is_valid(Exec::Serial));
    const Fan lifted = lifted_tropical_fan(serial.setup);
    CHECK(common_refinement(sigma, lifted, Exec::Parallel) == common_refinement(sigma, lifted, Exec::Serial));
}
