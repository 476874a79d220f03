#include "chowq/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <set>
#include <utility>

namespace chowq {

namespace {

using Bits = boost::dynamic_bitset<>;

void make_primitive(IntVec& v) {
    Int g = content(v);
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVec negated(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

// Primitive, nonzero, duplicate-free copy of a constraint list.
std::vector<IntVec> clean_rows(const std::vector<IntVec>& rows, std::size_t dim) {
    std::set<IntVec> seen;
    std::vector<IntVec> out;
    for (const auto& r : rows) {
        if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "constraint length does not match the ambient dimension");
        if (is_zero(r)) continue;
        IntVec p = primitive_part(r);
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

Generators double_description(std::size_t dim, const std::vector<IntVec>& ineqs_in, const std::vector<IntVec>& eqs_in) {
    const std::vector<IntVec> eqs = clean_rows(eqs_in, dim);
    const std::vector<IntVec> ineqs = clean_rows(ineqs_in, dim);
    const std::size_t m = ineqs.size();

    std::vector<IntVec> lin;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(dim);
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<IntVec> rays;
    std::vector<Bits> tight;

    auto process = [&](const IntVec& a, bool equality, std::size_t k) {
        // Lineality not orthogonal to a: split it off.
        for (std::size_t j = 0; j < lin.size(); ++j) {
            Int al = dot(a, lin[j]);
            if (sgn(al) == 0) continue;
            const IntVec pivot = lin[j];
            const int s = sgn(al);
            const Int abs_al = abs(al);
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(j));
            for (auto& l : lin) {
                Int al2 = dot(a, l);
                if (sgn(al2) == 0) continue;
                for (std::size_t c = 0; c < dim; ++c) l[c] = al * l[c] - al2 * pivot[c];
                make_primitive(l);
            }
            for (std::size_t r = 0; r < rays.size(); ++r) {
                Int ar = dot(a, rays[r]);
                if (sgn(ar) != 0) {
                    for (std::size_t c = 0; c < dim; ++c) rays[r][c] = abs_al * rays[r][c] - s * ar * pivot[c];
                    make_primitive(rays[r]);
                }
                if (!equality) tight[r].set(k);
            }
            if (!equality) {
                rays.push_back(s > 0 ? pivot : negated(pivot));
                Bits z(m);
                for (std::size_t i = 0; i < k; ++i) z.set(i);
                tight.push_back(std::move(z));
            }
            return;
        }

        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(a, rays[r]);
            if (sgn(val[r]) > 0) pos.push_back(r);
            else if (sgn(val[r]) < 0) neg.push_back(r);
        }
        if (neg.empty() && (!equality || pos.empty())) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (!equality && sgn(val[r]) == 0) tight[r].set(k);
            return;
        }
        std::vector<IntVec> new_rays;
        std::vector<Bits> new_tight;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            const int sg = sgn(val[r]);
            if (sg == 0 || (sg > 0 && !equality)) {
                new_rays.push_back(rays[r]);
                new_tight.push_back(tight[r]);
                if (!equality && sg == 0) new_tight.back().set(k);
            }
        }
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                Bits common = tight[p] & tight[n];
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if (common.is_subset_of(tight[r])) adjacent = false;
                }
                if (!adjacent) continue;
                IntVec v(dim);
                for (std::size_t c = 0; c < dim; ++c) v[c] = val[p] * rays[n][c] - val[n] * rays[p][c];
                make_primitive(v);
                new_rays.push_back(std::move(v));
                if (!equality) common.set(k);
                new_tight.push_back(std::move(common));
            }
        }
        rays = std::move(new_rays);
        tight = std::move(new_tight);
    };

    for (const auto& e : eqs) process(e, true, 0);
    for (std::size_t k = 0; k < m; ++k) process(ineqs[k], false, k);
    return {std::move(rays), std::move(lin)};
}

// ---------------------------------------------------------------------------

Cone Cone::canonical(std::size_t dim, const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality) {
    Cone c;
    c.dim_ = dim;
    c.lineality_ = canonical_subspace_basis(lineality, dim);
    std::set<IntVec> uniq;
    for (const auto& r : rays) {
        if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "generator length does not match the ambient dimension");
        IntVec p = project_to_complement(r, c.lineality_);
        if (!is_zero(p)) uniq.insert(std::move(p));
    }
    c.rays_.assign(uniq.begin(), uniq.end());
    c.cone_dim_ = c.lineality_.size() + rank(c.rays_, dim);
    return c;
}

Cone Cone::from_generators(std::size_t dim, const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality) {
    Generators dual = double_description(dim, rays, lineality);
    Facets f;
    f.equations = canonical_subspace_basis(dual.lineality, dim);
    {
        std::set<IntVec> uniq;
        for (const auto& u : dual.rays) {
            IntVec p = project_to_complement(u, f.equations);
            if (!is_zero(p)) uniq.insert(std::move(p));
        }
        f.inequalities.assign(uniq.begin(), uniq.end());
    }
    std::vector<IntVec> constraints = f.inequalities;
    constraints.insert(constraints.end(), f.equations.begin(), f.equations.end());
    std::vector<IntVec> lin = rational_nullspace(constraints, dim);

    // A generator is extreme iff its tight facets cut out a line modulo lineality.
    std::vector<IntVec> extreme;
    for (const auto& g : rays) {
        std::vector<IntVec> tight_rows = f.equations;
        for (const auto& u : f.inequalities)
            if (sgn(dot(u, g)) == 0) tight_rows.push_back(u);
        bool in_lineality = tight_rows.size() == f.equations.size() + f.inequalities.size();
        if (in_lineality) continue;
        if (rank(tight_rows, dim) + 1 + lin.size() == dim) extreme.push_back(g);
    }
    Cone c = canonical(dim, extreme, lin);
    std::call_once(c.cache_->once, [&] { c.cache_->facets = std::move(f); });
    return c;
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs) {
    Generators g = double_description(dim, ineqs, eqs);
    return canonical(dim, g.rays, g.lineality);
}

Cone Cone::zero(std::size_t dim) { return canonical(dim, {}, {}); }

Cone Cone::full(std::size_t dim) {
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(dim);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    return canonical(dim, {}, basis);
}

Cone Cone::orthant(std::size_t dim) {
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(dim);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    return from_generators(dim, basis);
}

const Facets& Cone::facets() const {
    std::call_once(cache_->once, [this] {
        Generators dual = double_description(dim_, rays_, lineality_);
        Facets f;
        f.equations = canonical_subspace_basis(dual.lineality, dim_);
        std::set<IntVec> uniq;
        for (const auto& u : dual.rays) {
            IntVec p = project_to_complement(u, f.equations);
            if (!is_zero(p)) uniq.insert(std::move(p));
        }
        f.inequalities.assign(uniq.begin(), uniq.end());
        cache_->facets = std::move(f);
    });
    return cache_->facets;
}

bool Cone::contains(const IntVec& v) const {
    if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "point length does not match the cone");
    const Facets& f = facets();
    for (const auto& e : f.equations)
        if (sgn(dot(e, v)) != 0) return false;
    for (const auto& u : f.inequalities)
        if (sgn(dot(u, v)) < 0) return false;
    return true;
}

bool Cone::contains(const Cone& other) const {
    if (other.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "cones live in different spaces");
    for (const auto& r : other.rays_)
        if (!contains(r)) return false;
    const Facets& f = facets();
    for (const auto& l : other.lineality_) {
        for (const auto& e : f.equations)
            if (sgn(dot(e, l)) != 0) return false;
        for (const auto& u : f.inequalities)
            if (sgn(dot(u, l)) != 0) return false;
    }
    return true;
}

bool Cone::relative_interior_contains(const IntVec& v) const {
    if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "point length does not match the cone");
    const Facets& f = facets();
    for (const auto& e : f.equations)
        if (sgn(dot(e, v)) != 0) return false;
    for (const auto& u : f.inequalities)
        if (sgn(dot(u, v)) <= 0) return false;
    return true;
}

IntVec Cone::interior_point() const {
    IntVec v(dim_);
    for (const auto& r : rays_)
        for (std::size_t i = 0; i < dim_; ++i) v[i] += r[i];
    return v;
}

bool Cone::is_face_of(const Cone& other) const {
    if (!other.contains(*this)) return false;
    const Facets& f = other.facets();
    std::vector<const IntVec*> zero_on_this;
    for (const auto& u : f.inequalities) {
        bool vanishes = std::all_of(rays_.begin(), rays_.end(), [&](const IntVec& r) { return sgn(dot(u, r)) == 0; });
        if (vanishes) zero_on_this.push_back(&u);
    }
    for (const auto& l : other.lineality_)
        if (!contains(l)) return false;
    for (const auto& r : other.rays_) {
        bool in_face = std::all_of(zero_on_this.begin(), zero_on_this.end(),
                                   [&](const IntVec* u) { return sgn(dot(*u, r)) == 0; });
        if (in_face && !contains(r)) return false;
    }
    return true;
}

std::vector<Cone> Cone::faces() const {
    const Facets& f = facets();
    const std::size_t nr = rays_.size();
    std::vector<Bits> ray_sets_by_facet;
    for (const auto& u : f.inequalities) {
        Bits b(nr);
        for (std::size_t r = 0; r < nr; ++r)
            if (sgn(dot(u, rays_[r])) == 0) b.set(r);
        ray_sets_by_facet.push_back(std::move(b));
    }
    Bits all(nr);
    all.set();
    std::set<Bits> seen{all};
    std::vector<Bits> stack{all};
    while (!stack.empty()) {
        Bits cur = std::move(stack.back());
        stack.pop_back();
        for (const auto& b : ray_sets_by_facet) {
            Bits child = cur & b;
            if (child == cur) continue;
            if (seen.insert(child).second) stack.push_back(child);
        }
    }
    std::vector<Cone> out;
    for (const auto& s : seen) {
        std::vector<IntVec> sub;
        for (std::size_t r = 0; r < nr; ++r)
            if (s.test(r)) sub.push_back(rays_[r]);
        Cone c;
        c.dim_ = dim_;
        c.lineality_ = lineality_;
        c.rays_ = std::move(sub);
        c.cone_dim_ = lineality_.size() + rank(c.rays_, dim_);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Cone::operator<(const Cone& other) const {
    if (dim_ != other.dim_) return dim_ < other.dim_;
    if (cone_dim_ != other.cone_dim_) return cone_dim_ < other.cone_dim_;
    if (lineality_ != other.lineality_) return lineality_ < other.lineality_;
    return rays_ < other.rays_;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "intersecting cones of different ambient dimension");
    const Facets& fa = a.facets();
    const Facets& fb = b.facets();
    std::vector<IntVec> ineqs = fa.inequalities;
    ineqs.insert(ineqs.end(), fb.inequalities.begin(), fb.inequalities.end());
    std::vector<IntVec> eqs = fa.equations;
    eqs.insert(eqs.end(), fb.equations.begin(), fb.equations.end());
    return Cone::from_inequalities(a.ambient_dim(), ineqs, eqs);
}

Cone intersect_all(std::size_t dim, const std::vector<const Cone*>& cones) {
    if (cones.empty()) return Cone::full(dim);
    std::vector<IntVec> ineqs, eqs;
    for (const Cone* c : cones) {
        if (c->ambient_dim() != dim) throw Error(ErrorKind::DimensionMismatch, "intersecting cones of different ambient dimension");
        const Facets& f = c->facets();
        ineqs.insert(ineqs.end(), f.inequalities.begin(), f.inequalities.end());
        eqs.insert(eqs.end(), f.equations.begin(), f.equations.end());
    }
    return Cone::from_inequalities(dim, ineqs, eqs);
}

Cone dualize(const Cone& c) {
    const Facets& f = c.facets();
    return Cone::from_generators(c.ambient_dim(), f.inequalities, f.equations);
}

Cone image(const Cone& c, const IntMat& m) {
    if (m.cols() != c.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "image: matrix does not match the cone");
    std::vector<IntVec> rays, lin;
    for (const auto& r : c.rays()) rays.push_back(m * r);
    for (const auto& l : c.lineality()) lin.push_back(m * l);
    return Cone::from_generators(m.rows(), rays, lin);
}

Cone preimage(const Cone& c, const IntMat& m) {
    if (m.rows() != c.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "preimage: matrix does not match the cone");
    const IntMat mt = m.transpose();
    const Facets& f = c.facets();
    std::vector<IntVec> ineqs, eqs;
    for (const auto& u : f.inequalities) ineqs.push_back(mt * u);
    for (const auto& e : f.equations) eqs.push_back(mt * e);
    return Cone::from_inequalities(m.cols(), ineqs, eqs);
}

}  // namespace chowq
