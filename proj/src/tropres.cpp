#include "chowq/tropres.hpp"

#include <algorithm>
#include <set>

namespace chowq {

namespace {

// All subsets of {0..n} with exactly k elements, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Fan delta_subfan(std::size_t n, std::size_t k) {
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "Delta(n) needs n >= 1");
    std::vector<Cone> cones;
    for (const auto& s : subsets(n, k)) {
        std::vector<IntVec> gens;
        for (std::size_t i : s) gens.push_back(delta_ray(n, i));
        cones.push_back(Cone::from_generators(n, gens));
    }
    return Fan::from_cones(n, std::move(cones));
}

std::vector<IntVec> newton_vertices(const LaurentPoly& g) {
    const std::size_t d = g.num_vars();
    std::vector<IntVec> lifted;
    for (const auto& [e, c] : g.terms()) {
        IntVec v = e;
        v.push_back(1);
        lifted.push_back(v);
    }
    if (lifted.empty()) return {};
    const Cone hull = Cone::from_generators(d + 1, lifted);
    std::set<IntVec> extreme(hull.rays().begin(), hull.rays().end());
    std::vector<IntVec> out;
    for (const auto& v : lifted)
        if (extreme.count(v)) out.push_back(IntVec(v.begin(), v.end() - 1));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

IntVec delta_ray(std::size_t n, std::size_t i) {
    IntVec e(n);
    if (i == 0)
        for (auto& x : e) x = -1;
    else
        e.at(i - 1) = 1;
    return e;
}

Fan delta_fan(std::size_t n) { return delta_subfan(n, n); }

Fan delta_prime_fan(std::size_t n) { return delta_subfan(n, n - 1); }

TropicalSetup newton_setup(const LaurentPoly& g1, const IntMat& p, const NewtonOptions& opts) {
    if (p.cols() != g1.num_vars()) throw Error(ErrorKind::DimensionMismatch, "polynomial and P disagree on the variable count");
    TropicalSetup s;
    s.g1 = g1;
    s.p = p;
    s.vertices = newton_vertices(g1);
    if (s.vertices.size() < 2) throw Error(ErrorKind::DegenerateNewton, "Newton polytope has fewer than two vertices");
    s.n = s.vertices.size() - 1;
    const std::size_t cols = p.cols();
    s.p_gr = IntMat(s.n, cols);
    for (std::size_t i = 1; i <= s.n; ++i)
        for (std::size_t k = 0; k < cols; ++k) s.p_gr(i - 1, k) = s.vertices[i][k] - s.vertices[0][k];
    if (rank(s.p_gr) != s.n) throw Error(ErrorKind::InconsistentDiagram, "vertex differences are linearly dependent");
    if (rank(p) != p.rows()) throw Error(ErrorKind::InconsistentDiagram, "P is not surjective");

    const IntMat pt = p.transpose();
    s.pi = IntMat(s.n, p.rows());
    for (std::size_t i = 0; i < s.n; ++i) {
        auto x = try_solve_diophantine(pt, s.p_gr.row(i));
        if (!x) throw Error(ErrorKind::InconsistentDiagram, "no integral map through P for row " + std::to_string(i + 1));
        s.pi.set_row(i, *x);
    }
    if (!(s.pi * p == s.p_gr)) throw Error(ErrorKind::InternalError, "pi * P differs from P_gr");
    s.lineality_dim = p.rows() - s.n;
    if (opts.compute_sigma)
        s.sigma = gkz_fan_bruteforce(VectorConfig::from_p(p), BruteForceOptions{true, opts.exec});
    return s;
}

Fan lifted_tropical_fan(const IntMat& pi) {
    const std::size_t n = pi.rows();
    const std::size_t dim = pi.cols();
    if (n == 0 || rank(pi) != n) throw Error(ErrorKind::NotSurjective, "projection is not surjective");
    std::vector<IntVec> lifts;
    for (std::size_t i = 0; i <= n; ++i) {
        auto x = solve_rational(pi, delta_ray(n, i));
        lifts.push_back(primitive_from_rational(*x));
    }
    const std::vector<IntVec> ker = kernel_basis(pi).row_list();
    std::vector<Cone> cones;
    for (const auto& s : subsets(n, n - 1)) {
        std::vector<IntVec> gens;
        for (std::size_t i : s) gens.push_back(lifts[i]);
        cones.push_back(Cone::from_generators(dim, gens, ker));
    }
    return Fan::from_cones(dim, std::move(cones));
}

Fan lifted_tropical_fan(const TropicalSetup& setup) { return lifted_tropical_fan(setup.pi); }

Fan weak_tropical_resolution(const TropicalSetup& setup, Exec exec) {
    if (!setup.sigma) throw Error(ErrorKind::InconsistentDiagram, "setup carries no GKZ fan");
    return common_refinement(*setup.sigma, lifted_tropical_fan(setup), exec);
}

ZeroQuotientData zero_quotient(const Fan& sigma_prime, const IntMat& pi) {
    if (pi.cols() != sigma_prime.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "projection does not match the fan");
    const std::size_t n = pi.rows();
    if (rank(pi) != n) throw Error(ErrorKind::NotSurjective, "projection is not surjective");
    std::set<IntVec> imgs;
    for (const auto& v : sigma_prime.rays()) {
        IntVec b = pi * v;
        if (!is_zero(b)) imgs.insert(primitive_part(b));
    }
    ZeroQuotientData out;
    out.projected_rays.assign(imgs.begin(), imgs.end());
    std::vector<Cone> cones{Cone::zero(n)};
    for (const auto& b : out.projected_rays) cones.push_back(Cone::from_generators(n, {b}));
    out.delta0 = Fan::from_cones(n, std::move(cones));
    return out;
}

std::string to_string(Verdict v) { return v == Verdict::Certified ? "Certified" : "Uncertified"; }

MdsReport mds_certificate(const WeightSystem& w, const MdsOptions& opts) {
    MdsReport out;
    out.zeta = w.zeta;
    const HypothesisReport hyp = validate_hypotheses(w);
    if (!hyp.pair_sum_zero || !hyp.q_rank_two)
        throw Error(ErrorKind::InvalidWeights, "weights are not in the quadric normal form with rank-two weight matrix");
    const std::size_t r = w.r();
    out.permutation = pair_sort_permutation(w.zeta);
    for (std::size_t k = 0; k <= r; ++k) out.zeta_reordered.push_back(w.zeta[out.permutation[k]]);
    const WeightSystem ws{out.zeta_reordered};

    const VectorConfig cfg = VectorConfig::from_q(ws.q());
    out.setup = newton_setup(quadric_normal_form(r), cfg.p, NewtonOptions{true, opts.exec});
    const TropicalSetup& s = out.setup;
    const std::size_t n = s.n;

    std::set<IntVec> column_rays;
    for (std::size_t k = 0; k < cfg.p.cols(); ++k) column_rays.insert(primitive_part(cfg.p.col(k)));
    for (const auto& v : s.sigma->rays())
        if (!column_rays.count(v)) out.sigma_new_rays.push_back(v);

    const Fan sigma_prime = weak_tropical_resolution(s, opts.exec);
    out.sigma_prime_rays = sigma_prime.rays().size();
    out.sigma_prime_cones = sigma_prime.maximal_cones().size();
    out.zero = zero_quotient(sigma_prime, s.pi);

    std::set<IntVec> delta_rays;
    for (std::size_t i = 0; i <= n; ++i) delta_rays.insert(delta_ray(n, i));

    // The images of the new GKZ rays lie in cone(e_0..e_{n-1}).
    std::vector<IntVec> base_gens;
    for (std::size_t i = 0; i < n; ++i) base_gens.push_back(delta_ray(n, i));
    const Cone base = Cone::from_generators(n, base_gens);
    out.sigma_images_in_base = true;
    for (const auto& v : out.sigma_new_rays)
        if (!base.contains(s.pi * v)) out.sigma_images_in_base = false;

    out.facet_claim_ok = true;
    for (const auto& v : sigma_prime.rays()) {
        IntVec b = s.pi * v;
        if (is_zero(b)) continue;
        FacetClaim fc;
        fc.ray = v;
        fc.image = primitive_part(b);
        fc.on_delta_ray = delta_rays.count(fc.image) > 0;
        if (base.contains(fc.image))
            for (const auto& u : base.facets().inequalities)
                if (sgn(dot(u, fc.image)) == 0) fc.in_facet = true;
        if (!fc.ok()) out.facet_claim_ok = false;
        out.facet_claim.push_back(std::move(fc));
    }
    if (!out.facet_claim_ok) out.notes.push_back("some projected ray lies in no facet of cone(e_0..e_{n-1})");

    std::vector<IntVec> fresh;
    for (const auto& b : out.zero.projected_rays)
        if (!delta_rays.count(b)) fresh.push_back(b);
    out.new_rays = IntMat::from_columns(fresh, n);
    try {
        out.common_cone = common_cone_certificate(out.new_rays, n);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotOnTropical) throw;
        out.common_cone.certified = false;
        out.common_cone.notes.push_back(e.what());
        out.common_cone.hypotheses.emplace_back("common_cone", false);
    }
    if (!out.common_cone.certified) out.notes.push_back("new projected rays share no maximal cone of Delta(n)");

    out.ambient = delta_fan(n);
    for (const auto& b : fresh) out.ambient = stellar_subdivision(out.ambient, b);

    if (out.facet_claim_ok && out.common_cone.certified) {
        out.h2 = lift_h1(out.new_rays, n);
        LaurentPoly h1(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            IntVec e(n + 1);
            e[i] = 1;
            h1.add_term(e, 1);
        }
        if (!(out.h2->set_trailing_to_one(n + 1) == h1)) throw Error(ErrorKind::InternalError, "h2 does not restrict to h1");
        out.verdict = Verdict::Certified;
    }
    return out;
}

}  // namespace chowq
