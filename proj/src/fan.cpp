#include "chowq/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parallel.hpp"

namespace chowq {

namespace {

void sort_unique(std::vector<Cone>& cones) {
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

IntVec sign_normalized(IntVec v) {
    v = primitive_part(v);
    auto it = std::find_if(v.begin(), v.end(), [](const Int& x) { return sgn(x) != 0; });
    if (it != v.end() && sgn(*it) < 0)
        for (auto& x : v) x = -x;
    return v;
}

}  // namespace

Fan Fan::from_cones(std::size_t dim, std::vector<Cone> cones, Exec exec) {
    for (const auto& c : cones)
        if (c.ambient_dim() != dim) throw Error(ErrorKind::DimensionMismatch, "cone does not live in the fan's space");
    sort_unique(cones);

    std::vector<char> keep(cones.size(), 1);
    detail::parallel_for(cones.size(), exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < cones.size(); ++j) {
            if (j == i || cones[j].dim() < cones[i].dim()) continue;
            if (cones[j].contains(cones[i])) {
                keep[i] = 0;
                return;
            }
        }
    });

    Fan f;
    f.dim_ = dim;
    std::vector<Cone> maximal;
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (keep[i]) maximal.push_back(std::move(cones[i]));
    if (!maximal.empty()) {
        f.lineality_ = maximal.front().lineality();
        for (const auto& c : maximal)
            if (c.lineality() != f.lineality_) throw Error(ErrorKind::InvalidFan, "cones have different lineality spaces");
    }
    std::set<IntVec> ray_set;
    for (const auto& c : maximal) ray_set.insert(c.rays().begin(), c.rays().end());
    f.rays_.assign(ray_set.begin(), ray_set.end());

    std::vector<std::pair<std::vector<std::size_t>, Cone>> indexed;
    for (auto& c : maximal) {
        std::vector<std::size_t> idx;
        for (const auto& r : c.rays())
            idx.push_back(static_cast<std::size_t>(std::lower_bound(f.rays_.begin(), f.rays_.end(), r) - f.rays_.begin()));
        std::sort(idx.begin(), idx.end());
        indexed.emplace_back(std::move(idx), std::move(c));
    }
    std::sort(indexed.begin(), indexed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, c] : indexed) {
        f.maximal_idx_.push_back(std::move(idx));
        f.maximal_.push_back(std::move(c));
    }
    return f;
}

Fan Fan::from_maximal_indices(std::size_t dim, const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality,
                              const std::vector<std::vector<std::size_t>>& maximal) {
    std::vector<Cone> cones;
    for (const auto& idx : maximal) {
        std::vector<IntVec> gens;
        for (std::size_t i : idx) {
            if (i >= rays.size()) throw Error(ErrorKind::InvalidFan, "ray index out of range");
            gens.push_back(rays[i]);
        }
        cones.push_back(Cone::from_generators(dim, gens, lineality));
    }
    return from_cones(dim, std::move(cones));
}

std::vector<Cone> Fan::all_cones() const {
    std::vector<Cone> out;
    for (const auto& c : maximal_) {
        auto fs = c.faces();
        out.insert(out.end(), fs.begin(), fs.end());
    }
    sort_unique(out);
    return out;
}

bool Fan::support_contains(const IntVec& v) const {
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Cone& c) { return c.contains(v); });
}

bool Fan::is_complete_candidate() const {
    return !maximal_.empty() &&
           std::all_of(maximal_.begin(), maximal_.end(), [&](const Cone& c) { return c.dim() == dim_; });
}

bool Fan::is_valid(Exec exec) const {
    const std::size_t n = maximal_.size();
    std::vector<char> ok(n, 1);
    detail::parallel_for(n, exec, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Cone meet = intersect(maximal_[i], maximal_[j]);
            if (!meet.is_face_of(maximal_[i]) || !meet.is_face_of(maximal_[j])) {
                ok[i] = 0;
                return;
            }
        }
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool refines(const Fan& fine, const Fan& coarse, Exec exec) {
    if (fine.ambient_dim() != coarse.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "fans live in different spaces");
    const auto& fc = fine.maximal_cones();
    const auto& cc = coarse.maximal_cones();

    std::vector<char> ok(fc.size(), 1);
    detail::parallel_for(fc.size(), exec, [&](std::size_t i) {
        ok[i] = std::any_of(cc.begin(), cc.end(), [&](const Cone& c) { return c.contains(fc[i]); });
    });
    if (std::any_of(ok.begin(), ok.end(), [](char c) { return c == 0; })) return false;

    // Each coarse cone must be covered by the full-dimensional fine cones inside it:
    // every facet of a piece that is not on the boundary is shared by exactly two pieces.
    std::vector<char> covered(cc.size(), 1);
    detail::parallel_for(cc.size(), exec, [&](std::size_t k) {
        const Cone& big = cc[k];
        const auto& normals = big.facets().inequalities;
        std::map<Cone, int> interior;
        bool any_piece = false;
        for (const auto& piece : fc) {
            if (piece.dim() != big.dim() || !big.contains(piece)) continue;
            any_piece = true;
            for (const auto& face : piece.faces()) {
                if (face.dim() + 1 != piece.dim()) continue;
                bool on_boundary = std::any_of(normals.begin(), normals.end(), [&](const IntVec& u) {
                    return std::all_of(face.rays().begin(), face.rays().end(),
                                       [&](const IntVec& r) { return sgn(dot(u, r)) == 0; });
                });
                if (!on_boundary) ++interior[face];
            }
        }
        if (!any_piece) {
            covered[k] = 0;
            return;
        }
        for (const auto& [face, count] : interior)
            if (count != 2) {
                covered[k] = 0;
                return;
            }
    });
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

Fan common_refinement(const Fan& a, const Fan& b, Exec exec) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "fans live in different spaces");
    const auto& ac = a.maximal_cones();
    const auto& bc = b.maximal_cones();
    std::vector<std::vector<Cone>> pieces(ac.size());
    detail::parallel_for(ac.size(), exec, [&](std::size_t i) {
        for (const auto& c : bc) pieces[i].push_back(intersect(ac[i], c));
    });
    std::vector<Cone> all;
    for (auto& p : pieces)
        for (auto& c : p) all.push_back(std::move(c));
    return Fan::from_cones(a.ambient_dim(), std::move(all), exec);
}

Fan quotient_fan(const Fan& f, const IntMat& p, Exec exec) {
    if (p.cols() != f.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "quotient map does not match the fan");
    const std::size_t m = p.rows();
    if (rank(p) != m) throw Error(ErrorKind::NotSurjective, "quotient map is not surjective over Q");

    const std::vector<Cone> cones = f.all_cones();
    std::vector<Cone> images(cones.size());
    detail::parallel_for(cones.size(), exec, [&](std::size_t i) { images[i] = image(cones[i], p); });
    sort_unique(images);

    std::size_t top_dim = 0;
    for (const auto& c : images) top_dim = std::max(top_dim, c.dim());
    std::vector<Cone> top;
    for (const auto& c : images)
        if (c.dim() == top_dim) top.push_back(c);

    std::set<IntVec> hyper;
    for (const auto& c : top) {
        for (const auto& u : c.facets().inequalities) hyper.insert(sign_normalized(u));
        for (const auto& e : c.facets().equations) hyper.insert(sign_normalized(e));
    }
    const std::vector<IntVec> hs(hyper.begin(), hyper.end());

    std::vector<std::vector<Cone>> cells(top.size());
    detail::parallel_for(top.size(), exec, [&](std::size_t t) {
        std::vector<Cone> cur{top[t]};
        for (const auto& h : hs) {
            std::vector<Cone> next;
            for (auto& c : cur) {
                bool pos = false, neg = false;
                for (const auto& r : c.rays()) {
                    int s = sgn(dot(h, r));
                    pos |= s > 0;
                    neg |= s < 0;
                }
                for (const auto& l : c.lineality())
                    if (sgn(dot(h, l)) != 0) pos = neg = true;
                if (!(pos && neg)) {
                    next.push_back(std::move(c));
                    continue;
                }
                const Facets& fc = c.facets();
                for (int side : {1, -1}) {
                    std::vector<IntVec> ineqs = fc.inequalities;
                    IntVec hh = h;
                    if (side < 0)
                        for (auto& x : hh) x = -x;
                    ineqs.push_back(hh);
                    Cone piece = Cone::from_inequalities(m, ineqs, fc.equations);
                    if (piece.dim() == top_dim) next.push_back(std::move(piece));
                }
            }
            cur = std::move(next);
        }
        cells[t] = std::move(cur);
    });
    std::vector<Cone> flat;
    for (auto& cs : cells)
        for (auto& c : cs) flat.push_back(std::move(c));
    sort_unique(flat);

    auto tau = [&](const IntVec& v) {
        std::vector<const Cone*> containing;
        for (const auto& c : top)
            if (c.contains(v)) containing.push_back(&c);
        return intersect_all(m, containing);
    };

    std::vector<Cone> taus(flat.size());
    detail::parallel_for(flat.size(), exec, [&](std::size_t i) { taus[i] = tau(flat[i].interior_point()); });
    sort_unique(taus);
    detail::parallel_for(taus.size(), exec, [&](std::size_t i) {
        if (!(tau(taus[i].interior_point()) == taus[i]))
            throw Error(ErrorKind::InternalError, "quotient fan cell is not stable under its interior point");
    });
    return Fan::from_cones(m, std::move(taus), exec);
}

Fan stellar_subdivision(const Fan& f, const IntVec& v) {
    if (!f.support_contains(v)) throw Error(ErrorKind::OutsideSupport, "subdivision point is outside the support");
    if (Cone::from_generators(f.ambient_dim(), {}, f.lineality()).contains(v)) return f;
    std::vector<Cone> out;
    for (const auto& c : f.maximal_cones()) {
        if (!c.contains(v)) {
            out.push_back(c);
            continue;
        }
        for (const auto& face : c.faces()) {
            if (face.contains(v)) continue;
            std::vector<IntVec> gens = face.rays();
            gens.push_back(v);
            out.push_back(Cone::from_generators(f.ambient_dim(), gens, face.lineality()));
        }
    }
    return Fan::from_cones(f.ambient_dim(), std::move(out));
}

Fan orthant_fan(std::size_t dim) { return Fan::from_cones(dim, {Cone::orthant(dim)}); }

}  // namespace chowq
