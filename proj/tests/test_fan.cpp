#include <random>

#include "chowq/fan.hpp"
#include "doctest.h"

using namespace chowq;

namespace {

IntVec v(std::initializer_list<long> xs) { return make_vec(xs); }

Cone cone(std::size_t dim, std::vector<IntVec> gens) { return Cone::from_generators(dim, gens); }

Fan line_fan() { return Fan::from_cones(1, {cone(1, {v({1})}), cone(1, {v({-1})})}); }

// Oracle: the set of maximal tau(v) over sample points, by the defining formula.
std::vector<Cone> tau_by_formula(const Fan& f, const IntMat& p, const std::vector<IntVec>& samples) {
    std::vector<Cone> images;
    for (const auto& c : f.all_cones()) images.push_back(image(c, p));
    std::vector<Cone> out;
    for (const auto& s : samples) {
        std::vector<const Cone*> hit;
        for (const auto& c : images)
            if (c.contains(s)) hit.push_back(&c);
        out.push_back(intersect_all(p.rows(), hit));
    }
    return out;
}

}  // namespace

TEST_CASE("fan construction drops faces and sorts rays") {
    Fan f = Fan::from_cones(2, {Cone::orthant(2), cone(2, {v({1, 0})}), Cone::zero(2)});
    CHECK(f.maximal_cones().size() == 1);
    CHECK(f.rays() == std::vector<IntVec>{v({0, 1}), v({1, 0})});
    CHECK(f.all_cones().size() == 4);
    CHECK(f.is_valid());
}

TEST_CASE("fan with mismatched lineality is rejected") {
    Cone halfplane = Cone::from_generators(2, {v({0, 1})}, {v({1, 0})});
    Cone ray = cone(2, {v({0, -1})});
    CHECK_THROWS_AS(Fan::from_cones(2, {halfplane, ray}), Error);
}

TEST_CASE("invalid fan is detected") {
    Fan bad = Fan::from_cones(2, {cone(2, {v({1, 0}), v({1, 2})}), cone(2, {v({1, 1}), v({0, 1})})});
    CHECK_FALSE(bad.is_valid());
    CHECK_FALSE(bad.is_valid(Exec::Parallel));
}

TEST_CASE("common refinement") {
    Fan o = orthant_fan(3);
    CHECK(common_refinement(o, o) == o);
    Fan whole = Fan::from_cones(1, {Cone::full(1)});
    CHECK(common_refinement(line_fan(), whole) == line_fan());
    CHECK(common_refinement(line_fan(), whole, Exec::Parallel) == line_fan());
}

TEST_CASE("refines") {
    Fan o = orthant_fan(2);
    CHECK(refines(o, o));
    Fan split = Fan::from_cones(2, {cone(2, {v({1, 0}), v({1, 1})}), cone(2, {v({1, 1}), v({0, 1})})});
    CHECK(refines(split, o));
    CHECK_FALSE(refines(o, split));
    Fan half = Fan::from_cones(2, {cone(2, {v({1, 0}), v({1, 1})})});
    CHECK_FALSE(refines(half, o));
}

TEST_CASE("quotient fan basic cases") {
    Fan o = orthant_fan(2);
    CHECK(quotient_fan(o, IntMat::identity(2)) == o);

    Fan q = quotient_fan(o, IntMat{{1, 1}});
    CHECK(q == Fan::from_cones(1, {cone(1, {v({1})})}));
    auto formula = tau_by_formula(o, IntMat{{1, 1}}, {v({1})});
    CHECK(formula.front() == q.maximal_cones().front());

    Fan p1p1 = Fan::from_cones(2, {cone(2, {v({1, 0}), v({0, 1})}), cone(2, {v({0, 1}), v({-1, 0})}),
                                   cone(2, {v({-1, 0}), v({0, -1})}), cone(2, {v({0, -1}), v({1, 0})})});
    Fan q2 = quotient_fan(p1p1, IntMat{{1, -1}});
    CHECK(q2 == line_fan());
    auto f2 = tau_by_formula(p1p1, IntMat{{1, -1}}, {v({1}), v({-1}), v({0})});
    CHECK(f2[0] == cone(1, {v({1})}));
    CHECK(f2[1] == cone(1, {v({-1})}));
    CHECK(f2[2] == Cone::zero(1));

    CHECK_THROWS_AS(quotient_fan(o, IntMat{{1, 1}, {2, 2}}), Error);
}

TEST_CASE("quotient fan of the orthant under a Gale dual matches the formula") {
    // Secondary-fan type example: p = [e1, e2, e1+e2] as the image of the 3-orthant.
    IntMat p{{1, 0, 1}, {0, 1, 1}};
    Fan q = quotient_fan(orthant_fan(3), p);
    CHECK(q.maximal_cones().size() == 2);
    CHECK(q.rays() == std::vector<IntVec>{v({0, 1}), v({1, 0}), v({1, 1})});
    CHECK(q.is_valid());
    for (const auto& c : q.maximal_cones())
        CHECK(tau_by_formula(orthant_fan(3), p, {c.interior_point()}).front() == c);
    CHECK(quotient_fan(orthant_fan(3), p, Exec::Parallel) == q);
}

TEST_CASE("iterated quotient refines the direct quotient") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-2, 2);
    int done = 0;
    while (done < 6) {
        IntMat p0(3, 4), p1(2, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) p0(i, j) = d(rng);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) p1(i, j) = d(rng);
        if (rank(p0) != 3 || rank(p1) != 2) continue;
        ++done;
        Fan direct = quotient_fan(orthant_fan(4), p1 * p0);
        Fan iterated = quotient_fan(quotient_fan(orthant_fan(4), p0), p1);
        CHECK(iterated.is_valid());
        CHECK(refines(iterated, direct));
    }
}

TEST_CASE("stellar subdivision") {
    Fan o = orthant_fan(2);
    Fan s = stellar_subdivision(o, v({1, 1}));
    CHECK(s.maximal_cones().size() == 2);
    CHECK(refines(s, o));
    CHECK_THROWS_AS(stellar_subdivision(o, v({-1, 0})), Error);
}

TEST_CASE("supports of refinements and quotients by sampling") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> d(-4, 4);
    auto point = [&](std::size_t n) {
        IntVec x(n);
        for (auto& e : x) e = d(rng);
        return x;
    };
    // Two incomplete fans in the plane with overlapping supports.
    Fan a = Fan::from_cones(2, {cone(2, {v({1, 0}), v({1, 1})}), cone(2, {v({1, 1}), v({-1, 2})})});
    Fan b = Fan::from_cones(2, {cone(2, {v({0, 1}), v({2, -1})}), cone(2, {v({0, 1}), v({-1, 0})})});
    Fan ab = common_refinement(a, b);
    CHECK(ab.is_valid());
    for (int t = 0; t < 300; ++t) {
        IntVec x = point(2);
        CHECK(ab.support_contains(x) == (a.support_contains(x) && b.support_contains(x)));
    }
    // The quotient fan covers the image of the support.
    const IntMat p{{1, 0, -1, 2}, {0, 1, -1, -1}};
    Fan f = stellar_subdivision(orthant_fan(4), v({1, 1, 1, 1}));
    Fan qf = quotient_fan(f, p);
    for (int t = 0; t < 100; ++t) {
        IntVec x = point(4);
        for (auto& e : x) e = abs(e);
        CHECK(qf.support_contains(p * x));
    }
    for (int t = 0; t < 100; ++t) {
        IntVec y = point(2);
        bool in_image = false;
        for (const auto& c : f.all_cones()) in_image = in_image || image(c, p).contains(y);
        CHECK(qf.support_contains(y) == in_image);
    }
}
