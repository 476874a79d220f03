#include "chowq/gkz.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "parallel.hpp"

namespace chowq {

VectorConfig VectorConfig::from_q(const IntMat& q) { return {gale_dual(q), q}; }

VectorConfig VectorConfig::from_p(const IntMat& p) { return {p, gale_dual(p)}; }

std::string GkzRay::origin_label() const {
    return std::string(origin == Origin::Column ? "column:" : "hyperplane:") + std::to_string(index);
}

std::vector<Cone> p_cones(const VectorConfig& cfg, bool full_dimensional_only) {
    const std::size_t n = cfg.p.rows(), cols = cfg.p.cols();
    if (cols >= 8 * sizeof(unsigned long) - 1) throw Error(ErrorKind::ScaleExceeded, "too many columns for subset enumeration");
    const std::vector<IntVec> columns = cfg.p.column_list();
    std::vector<Cone> out;
    for (unsigned long mask = 0; mask < (1UL << cols); ++mask) {
        std::vector<IntVec> gens;
        for (std::size_t j = 0; j < cols; ++j)
            if (mask & (1UL << j)) gens.push_back(columns[j]);
        if (full_dimensional_only && rank(gens, n) < n) continue;
        out.push_back(Cone::from_generators(n, gens));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cone gkz_cone_at(const std::vector<Cone>& pcones, const IntVec& v) {
    std::vector<const Cone*> hit;
    for (const auto& c : pcones)
        if (c.relative_interior_contains(v)) hit.push_back(&c);
    if (hit.empty()) throw Error(ErrorKind::OutsideSupport, "point " + to_string(v) + " lies in no P-cone");
    return intersect_all(v.size(), hit);
}

Cone gkz_cone_at(const VectorConfig& cfg, const IntVec& v) {
    if (v.size() != cfg.p.rows()) throw Error(ErrorKind::DimensionMismatch, "point length does not match the configuration");
    if (!Cone::from_generators(cfg.p.rows(), cfg.p.column_list()).contains(v))
        throw Error(ErrorKind::OutsideSupport, "point " + to_string(v) + " is outside the cone of the columns");
    return gkz_cone_at(p_cones(cfg), v);
}

std::set<std::size_t> extremal_columns(const VectorConfig& cfg) {
    const std::size_t k = cfg.q.rows(), cols = cfg.q.cols();
    const std::vector<IntVec> qs = cfg.q.column_list();
    std::vector<Cone> drops;
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<IntVec> gens;
        for (std::size_t l = 0; l < cols; ++l)
            if (l != j) gens.push_back(qs[l]);
        drops.push_back(Cone::from_generators(k, gens));
    }
    std::vector<const Cone*> ptrs;
    for (const auto& c : drops) ptrs.push_back(&c);
    const Cone movable = intersect_all(k, ptrs);
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < cols; ++i)
        if (!movable.relative_interior_contains(qs[i])) out.insert(i);
    return out;
}

GkzRay rho(const VectorConfig& cfg, const IntVec& u) {
    const std::size_t k = cfg.q.rows(), cols = cfg.q.cols();
    if (u.size() != k) throw Error(ErrorKind::DimensionMismatch, "linear form length does not match q");
    if (is_zero(u)) throw Error(ErrorKind::ZeroVector, "linear form is zero");
    std::vector<IntVec> on_hyperplane;
    IntVec alpha(cols);
    std::size_t first = cols;
    for (std::size_t i = 0; i < cols; ++i) {
        Int val = dot(u, cfg.q.col(i));
        if (sgn(val) == 0) {
            on_hyperplane.push_back(cfg.q.col(i));
            if (first == cols) first = i;
        } else if (sgn(val) > 0) {
            alpha[i] = val;
        }
    }
    if (rank(on_hyperplane, k) + 1 != k)
        throw Error(ErrorKind::NotAHyperplane, "the columns of q on the kernel of " + to_string(u) + " do not span a hyperplane");
    IntVec image = cfg.p * alpha;
    if (is_zero(image)) throw Error(ErrorKind::DegenerateRay, "the hyperplane " + to_string(u) + " yields the zero vector");
    return {primitive_part(image), GkzRay::Origin::Hyperplane, first, alpha};
}

std::string RayFormulaCheck::failure() const {
    if (!columns_nonzero) return "a column of p is zero";
    if (!pairwise_independent) return "two columns of p are linearly dependent";
    if (!positively_spanning) return "the columns of p do not positively span";
    return "";
}

RayFormulaCheck check_ray_formula_hypotheses(const VectorConfig& cfg) {
    RayFormulaCheck out;
    const std::size_t n = cfg.p.rows();
    const std::vector<IntVec> cols = cfg.p.column_list();
    for (const auto& c : cols)
        if (is_zero(c)) out.columns_nonzero = false;
    for (std::size_t i = 0; i < cols.size() && out.columns_nonzero; ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            if (rank({cols[i], cols[j]}, n) < 2) out.pairwise_independent = false;
    out.positively_spanning = Cone::from_generators(n, cols).lineality_dim() == n;
    return out;
}

std::vector<GkzRay> gkz_rays_corank2(const VectorConfig& cfg) {
    if (cfg.q.rows() != 2) throw Error(ErrorKind::DimensionMismatch, "corank-2 ray formula needs a 2-row q");
    RayFormulaCheck hyp = check_ray_formula_hypotheses(cfg);
    if (!hyp.ok()) throw Error(ErrorKind::HypothesisViolated, hyp.failure());

    std::vector<GkzRay> out;
    std::set<IntVec> seen;
    for (std::size_t i = 0; i < cfg.p.cols(); ++i) {
        IntVec coeffs(cfg.p.cols());
        coeffs[i] = 1;
        GkzRay ray{primitive_part(cfg.p.col(i)), GkzRay::Origin::Column, i, coeffs};
        seen.insert(ray.generator);
        out.push_back(std::move(ray));
    }
    const std::set<std::size_t> extremal = extremal_columns(cfg);
    for (std::size_t i = 0; i < cfg.q.cols(); ++i) {
        if (extremal.count(i)) continue;
        const IntVec qi = cfg.q.col(i);
        IntVec u = primitive_part(IntVec{-qi[1], qi[0]});
        GkzRay ray = rho(cfg, u);
        ray.index = i;
        if (seen.insert(ray.generator).second) out.push_back(std::move(ray));
    }
    return out;
}

std::vector<GkzRay> label_fan_rays(const VectorConfig& cfg, const Fan& fan) {
    if (cfg.q.rows() != 2) throw Error(ErrorKind::DimensionMismatch, "ray labelling needs a 2-row q");
    std::vector<GkzRay> out;
    for (const auto& gen : fan.rays()) {
        bool found = false;
        for (std::size_t i = 0; i < cfg.p.cols() && !found; ++i) {
            const IntVec pi = cfg.p.col(i);
            if (is_zero(pi) || primitive_part(pi) != gen) continue;
            IntVec coeffs(cfg.p.cols());
            coeffs[i] = 1;
            out.push_back({gen, GkzRay::Origin::Column, i, coeffs});
            found = true;
        }
        for (std::size_t i = 0; i < cfg.q.cols() && !found; ++i) {
            const IntVec qi = cfg.q.col(i);
            if (is_zero(qi)) continue;
            try {
                GkzRay ray = rho(cfg, primitive_part(IntVec{-qi[1], qi[0]}));
                if (ray.generator == gen) {
                    ray.index = i;
                    out.push_back(std::move(ray));
                    found = true;
                }
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DegenerateRay) throw;
            }
        }
        if (!found) throw Error(ErrorKind::InternalError, "GKZ ray " + to_string(gen) + " is not attached to a Q-hyperplane");
    }
    return out;
}

namespace {

struct Base {
    Cone cone;
    std::vector<IntVec> normals;  // inward facet normals
};

std::vector<Base> simplicial_bases(const IntMat& p) {
    const std::size_t n = p.rows(), cols = p.cols();
    std::vector<Base> out;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        IntMat sub = p.select_columns(pick);
        if (sgn(determinant(sub)) != 0) {
            Cone c = Cone::from_generators(n, sub.column_list());
            out.push_back({c, c.facets().inequalities});
        }
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == cols - n + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

Cone chamber_of(const std::vector<Base>& bases, const std::vector<std::size_t>& members, std::size_t n) {
    std::vector<const Cone*> ptrs;
    for (std::size_t b : members) ptrs.push_back(&bases[b].cone);
    return intersect_all(n, ptrs);
}

}  // namespace

Fan gkz_fan_bruteforce(const VectorConfig& cfg, const BruteForceOptions& opts) {
    const std::size_t n = cfg.p.rows(), cols = cfg.p.cols();
    if (!opts.ignore_scale_limit && (cols > 10 || n > 6))
        throw Error(ErrorKind::ScaleExceeded, "brute-force GKZ fan is limited to 10 columns and 6 rows");
    if (rank(cfg.p) != n) throw Error(ErrorKind::RankDeficient, "p must have full row rank");

    const std::vector<Base> bases = simplicial_bases(cfg.p);
    const std::vector<IntVec> columns = cfg.p.column_list();

    // Moment-curve start point off every base wall.
    IntVec start(n);
    for (long t = 1;; ++t) {
        IntVec v(n);
        Int w = 1;
        for (const auto& c : columns) {
            w *= t;
            for (std::size_t i = 0; i < n; ++i) v[i] += w * c[i];
        }
        bool generic = std::all_of(bases.begin(), bases.end(), [&](const Base& b) {
            return std::none_of(b.normals.begin(), b.normals.end(), [&](const IntVec& u) { return sgn(dot(u, v)) == 0; });
        });
        if (generic) {
            start = v;
            break;
        }
    }

    std::vector<std::size_t> first;
    for (std::size_t b = 0; b < bases.size(); ++b)
        if (bases[b].cone.relative_interior_contains(start)) first.push_back(b);

    std::set<Cone> chambers;
    std::deque<Cone> queue;
    Cone c0 = chamber_of(bases, first, n);
    chambers.insert(c0);
    queue.push_back(c0);
    while (!queue.empty()) {
        Cone c = queue.front();
        queue.pop_front();
        for (const auto& u : c.facets().inequalities) {
            IntVec x(n);
            for (const auto& r : c.rays())
                if (sgn(dot(u, r)) == 0)
                    for (std::size_t i = 0; i < n; ++i) x[i] += r[i];
            std::vector<std::size_t> across;
            for (std::size_t b = 0; b < bases.size(); ++b) {
                bool inside = std::all_of(bases[b].normals.begin(), bases[b].normals.end(), [&](const IntVec& w) {
                    int sx = sgn(dot(w, x));
                    return sx > 0 || (sx == 0 && sgn(dot(w, u)) < 0);
                });
                if (inside) across.push_back(b);
            }
            if (across.empty()) continue;
            Cone next = chamber_of(bases, across, n);
            if (chambers.insert(next).second) queue.push_back(next);
        }
    }

    std::vector<Cone> maximal(chambers.begin(), chambers.end());
    const std::vector<Cone> pcones = p_cones(cfg);
    detail::parallel_for(maximal.size(), opts.exec, [&](std::size_t i) {
        if (!(gkz_cone_at(pcones, maximal[i].interior_point()) == maximal[i]))
            throw Error(ErrorKind::InternalError, "chamber does not match the GKZ cone at its interior point");
    });
    return Fan::from_cones(n, std::move(maximal), opts.exec);
}

Fan gkz_fan_via_quotient(const VectorConfig& cfg, Exec exec) {
    return quotient_fan(orthant_fan(cfg.p.cols()), cfg.p, exec);
}

}  // namespace chowq
