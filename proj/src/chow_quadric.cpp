#include "chowq/chow_quadric.hpp"

#include <algorithm>
#include <numeric>

namespace chowq {

WeightSystem WeightSystem::from(const IntVec& zeta) {
    if (zeta.size() < 2) throw Error(ErrorKind::InvalidWeights, "need at least two weights");
    return {zeta};
}

IntMat WeightSystem::q() const {
    IntMat m(2, zeta.size());
    for (std::size_t j = 0; j < zeta.size(); ++j) {
        m(0, j) = zeta[j];
        m(1, j) = 1;
    }
    return m;
}

HypothesisReport validate_hypotheses(const WeightSystem& w) {
    HypothesisReport rep;
    const std::size_t r = w.r();
    const IntVec& z = w.zeta;

    rep.pair_sum_zero = true;
    for (std::size_t i = 0; i + 1 <= r; i += 2)
        if (sgn(z[i] + z[i + 1]) != 0) {
            rep.pair_sum_zero = false;
            rep.failures.push_back("pair (" + std::to_string(i) + "," + std::to_string(i + 1) + ") does not sum to zero");
        }
    if (r % 2 == 0 && sgn(z[r]) != 0) {
        rep.pair_sum_zero = false;
        rep.failures.push_back("square-term weight zeta_" + std::to_string(r) + " is not zero");
    }

    const IntMat q = w.q();
    rep.q_rank_two = rank(q) == 2;
    if (!rep.q_rank_two) rep.failures.push_back("extended weight matrix has rank below two");
    rep.columns_generate = columns_generate_lattice(q);
    if (!rep.columns_generate) rep.failures.push_back("columns of Q do not generate Z^2");
    rep.r_subsets_generate = true;
    for (std::size_t drop = 0; drop <= r; ++drop) {
        std::vector<std::size_t> subset;
        for (std::size_t j = 0; j <= r; ++j)
            if (j != drop) subset.push_back(j);
        if (!columns_generate_lattice(q, subset)) {
            rep.r_subsets_generate = false;
            rep.r_subset_witness = subset;
            rep.failures.push_back("columns without index " + std::to_string(drop) + " do not generate Z^2");
            break;
        }
    }

    rep.min_abs_weight = abs(z[0]);
    for (const auto& x : z) rep.min_abs_weight = std::min(rep.min_abs_weight, Int(abs(x)));
    for (const auto& x : z)
        if (abs(x) == rep.min_abs_weight) ++rep.min_weight_count;
    const std::size_t need = r % 2 ? 4 : 3;
    rep.min_weight_statement = rep.min_weight_count >= need;
    if (!rep.min_weight_statement)
        rep.failures.push_back("only " + std::to_string(rep.min_weight_count) + " weights of minimal absolute value, need " +
                               std::to_string(need));
    if (r % 2) {
        rep.min_weight_proof_literal = rep.min_weight_statement;
    } else {
        std::size_t zero_pairs = 0;
        for (std::size_t i = 0; i + 1 < r; i += 2)
            if (sgn(z[i]) == 0 && sgn(z[i + 1]) == 0) ++zero_pairs;
        rep.min_weight_proof_literal = rep.pair_sum_zero && zero_pairs >= 2;
    }
    rep.min_weight_discrepancy = rep.min_weight_statement && !rep.min_weight_proof_literal;
    return rep;
}

std::vector<std::size_t> pair_sort_permutation(const IntVec& zeta) {
    const std::size_t r = zeta.size() - 1;
    std::vector<std::size_t> pairs;
    for (std::size_t i = 0; i + 1 <= r; i += 2) pairs.push_back(i);
    auto weight = [&](std::size_t i) { return std::max(Int(abs(zeta[i])), Int(abs(zeta[i + 1]))); };
    std::stable_sort(pairs.begin(), pairs.end(), [&](std::size_t a, std::size_t b) { return weight(a) > weight(b); });
    std::vector<std::size_t> perm;
    for (std::size_t i : pairs) {
        perm.push_back(i);
        perm.push_back(i + 1);
    }
    if (r % 2 == 0) perm.push_back(r);
    return perm;
}

std::pair<WeightSystem, std::vector<std::size_t>> reorder_weights(const WeightSystem& w) {
    HypothesisReport rep = validate_hypotheses(w);
    if (!rep.ok()) throw Error(ErrorKind::HypothesisViolated, rep.failures.empty() ? "hypotheses fail" : rep.failures.front());
    std::vector<std::size_t> perm = pair_sort_permutation(w.zeta);
    IntVec z(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) z[k] = w.zeta[perm[k]];
    return {WeightSystem{z}, perm};
}

std::vector<GkzRay> hyperplane_rays(const VectorConfig& cfg, std::string& source, Exec exec) {
    std::vector<GkzRay> out;
    if (check_ray_formula_hypotheses(cfg).ok()) {
        source = "corank2";
        for (auto& ray : gkz_rays_corank2(cfg))
            if (ray.origin == GkzRay::Origin::Hyperplane) out.push_back(std::move(ray));
    } else {
        source = "bruteforce";
        for (auto& ray : label_fan_rays(cfg, gkz_fan_bruteforce(cfg, {false, exec})))
            if (ray.origin == GkzRay::Origin::Hyperplane) out.push_back(std::move(ray));
    }
    std::sort(out.begin(), out.end(), [](const GkzRay& a, const GkzRay& b) { return a.generator < b.generator; });
    return out;
}

namespace {

[[noreturn]] void fault(const std::string& what) { throw Error(ErrorKind::InternalError, what); }

// Lifting column max(0, u.q) with u chosen nonpositive on the trailing minimal-weight columns.
IntVec certificate_column(const IntMat& q, std::size_t index, const std::vector<std::size_t>& trailing) {
    IntVec qi = q.col(index);
    IntVec u = primitive_part(IntVec{-qi[1], qi[0]});
    for (std::size_t k : trailing)
        if (sgn(dot(u, q.col(k))) > 0) {
            for (auto& x : u) x = -x;
            break;
        }
    for (std::size_t k : trailing)
        if (sgn(dot(u, q.col(k))) > 0) fault("no sign of the linear form vanishes on the trailing columns");
    IntVec alpha(q.cols());
    for (std::size_t i = 0; i < q.cols(); ++i) {
        Int v = dot(u, q.col(i));
        if (sgn(v) > 0) alpha[i] = v;
    }
    return alpha;
}

}  // namespace

CoxPresentation cox_ring_of_chow_quotient(const WeightSystem& w, const CoxOptions& opts) {
    CoxPresentation out;
    out.zeta = w.zeta;
    out.hypotheses = validate_hypotheses(w);
    if (!out.hypotheses.ok()) {
        std::string msg;
        for (const auto& f : out.hypotheses.failures) msg += (msg.empty() ? "" : "; ") + f;
        throw Error(ErrorKind::HypothesisViolated, msg);
    }
    const std::size_t r = w.r();
    const Parity parity = w.parity();
    auto [ws, perm] = reorder_weights(w);
    out.permutation = perm;

    const IntMat q = ws.q();
    const VectorConfig cfg = VectorConfig::from_q(q);
    const IntMat& p = cfg.p;
    const std::size_t n = p.rows();

    out.hyperplane_rays = hyperplane_rays(cfg, out.ray_source, opts.exec);
    const std::size_t l = out.hyperplane_rays.size();
    std::vector<IntVec> gens;
    for (const auto& ray : out.hyperplane_rays) gens.push_back(ray.generator);
    const IntMat b = IntMat::from_columns(gens, n);

    std::vector<std::size_t> trailing;
    for (std::size_t k = r + 1 - (parity == Parity::Odd ? 4 : 3); k <= r; ++k) trailing.push_back(k);
    IntMat a_cert(r + 1, l);
    for (std::size_t j = 0; j < l; ++j) {
        IntVec alpha = certificate_column(q, out.hyperplane_rays[j].index, trailing);
        IntVec img = p * alpha;
        if (is_zero(img)) fault("certificate lifting column is zero");
        Int c = content(img);
        if (primitive_part(img) != gens[j]) fault("certificate lifting does not map onto its ray");
        if (content(alpha) % c == 0)
            for (auto& x : alpha) x /= c;
        for (std::size_t i = 0; i <= r; ++i) a_cert(i, j) = alpha[i];
    }
    const WeakLifting cert_lift = lifting_from_columns(p, b, a_cert);
    cert_lift.verify();
    const WeakLifting dio_lift = weak_b_lifting(p, b);

    const LaurentPoly g1 = quadric_normal_form(r);
    const LaurentPoly g2 = transfer_with_lifting(g1, cert_lift);
    if (!(transfer_with_lifting(g1, dio_lift) == g2)) fault("transferred relation depends on the lifting");

    const bool cert_unit = std::all_of(cert_lift.m.begin(), cert_lift.m.end(), [](const Int& m) { return m == 1; });
    const bool dio_unit = std::all_of(dio_lift.m.begin(), dio_lift.m.end(), [](const Int& m) { return m == 1; });
    if (!cert_unit && !dio_unit) fault("no lifting with unit multipliers");
    out.eta = eta_rows(cert_unit ? cert_lift.a : dio_lift.a, r, parity);
    if (!(relation_from_eta(out.eta, r, parity) == g2)) fault("shifted row sums do not reproduce the transferred relation");

    out.certificate = prime_certificate_quadric(g2, r, parity);
    if (!out.certificate.certified)
        throw Error(ErrorKind::CertificateFailed, "primality certificate fails: " + out.certificate.notes.front());

    const IntMat pb = hstack(p, b);
    const IntMat grading = gale_dual(pb);
    if (grading.rows() != l + 2) fault("grading has unexpected rank");
    for (std::size_t i = 0; i < grading.rows(); ++i)
        if (!is_zero(pb * grading.row(i))) fault("grading is not orthogonal to [P, B]");
    const IntVec& first = g2.terms().begin()->first;
    for (const auto& [e, c] : g2.terms()) {
        IntVec d(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) d[i] = e[i] - first[i];
        if (!is_zero(grading * d)) fault("relation is not homogeneous for the grading");
    }
    out.relation_reordered = g2;

    // Back to the caller's numbering.
    const std::size_t total = r + 1 + l;
    LaurentPoly rel(total);
    for (const auto& [e, c] : g2.terms()) {
        IntVec f = e;
        for (std::size_t k = 0; k <= r; ++k) f[perm[k]] = e[k];
        rel.add_term(f, c);
    }
    out.relation = rel;
    out.grading = IntMat(grading.rows(), total);
    for (std::size_t i = 0; i < grading.rows(); ++i)
        for (std::size_t k = 0; k < total; ++k) out.grading(i, k < r + 1 ? perm[k] : k) = grading(i, k);
    out.p = IntMat(n, r + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= r; ++k) out.p(i, perm[k]) = p(i, k);
    out.a = IntMat(r + 1, l);
    for (std::size_t k = 0; k <= r; ++k)
        for (std::size_t j = 0; j < l; ++j) out.a(perm[k], j) = a_cert(k, j);
    out.q = w.q();
    out.b = b;
    for (auto& ray : out.hyperplane_rays) {
        IntVec c(r + 1);
        for (std::size_t k = 0; k <= r; ++k) c[perm[k]] = ray.coeffs[k];
        ray.coeffs = c;
        ray.index = perm[ray.index];
    }
    out.variables = default_var_names(r + 1, l);
    return out;
}

}  // namespace chowq
