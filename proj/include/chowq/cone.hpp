#pragma once

// Rational polyhedral cones with exact generator and facet representations.

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "chowq/lattice.hpp"

namespace chowq {

struct Generators {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

/// Double description: generators of {x : a.x >= 0 for a in ineqs, e.x = 0 for e in eqs}.
/// Returned rays are extreme modulo the lineality space and primitive.
Generators double_description(std::size_t dim, const std::vector<IntVec>& ineqs,
                              const std::vector<IntVec>& eqs = {});

struct Facets {
    std::vector<IntVec> inequalities;  // irredundant facet normals u with u.x >= 0
    std::vector<IntVec> equations;     // basis of the orthogonal complement of the span
};

/// A cone  cone(rays) + span(lineality)  in Q^dim.
///
/// Both representations are canonical: the lineality basis is the reduced echelon
/// basis scaled to primitive rows, and rays are projected onto the orthogonal
/// complement of the lineality space, made primitive and sorted
/// lexicographically. Two cones are equal as sets iff they compare equal.
/// The facet representation is computed once on first use and shared between
/// copies; a Cone is immutable after construction.
class Cone {
public:
    Cone() = default;

    static Cone from_generators(std::size_t dim, const std::vector<IntVec>& rays,
                                const std::vector<IntVec>& lineality = {});
    static Cone from_inequalities(std::size_t dim, const std::vector<IntVec>& ineqs,
                                  const std::vector<IntVec>& eqs = {});
    static Cone zero(std::size_t dim);
    static Cone full(std::size_t dim);
    static Cone orthant(std::size_t dim);

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<IntVec>& rays() const noexcept { return rays_; }
    const std::vector<IntVec>& lineality() const noexcept { return lineality_; }
    std::size_t dim() const noexcept { return cone_dim_; }
    std::size_t lineality_dim() const noexcept { return lineality_.size(); }
    bool is_pointed() const noexcept { return lineality_.empty(); }
    bool is_full_dimensional() const noexcept { return cone_dim_ == dim_; }

    const Facets& facets() const;

    bool contains(const IntVec& v) const;
    bool contains(const Cone& other) const;
    bool relative_interior_contains(const IntVec& v) const;

    /// Sum of the extreme rays; lies in the relative interior.
    IntVec interior_point() const;

    bool is_face_of(const Cone& other) const;

    /// All faces, including the cone itself and the minimal face (the lineality space).
    std::vector<Cone> faces() const;

    bool operator==(const Cone& other) const {
        return dim_ == other.dim_ && lineality_ == other.lineality_ && rays_ == other.rays_;
    }
    bool operator<(const Cone& other) const;

private:
    struct FacetCache {
        std::once_flag once;
        Facets facets;
    };

    static Cone canonical(std::size_t dim, const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality);

    std::size_t dim_ = 0;
    std::size_t cone_dim_ = 0;
    std::vector<IntVec> rays_;
    std::vector<IntVec> lineality_;
    std::shared_ptr<FacetCache> cache_ = std::make_shared<FacetCache>();
};

Cone intersect(const Cone& a, const Cone& b);
Cone intersect_all(std::size_t dim, const std::vector<const Cone*>& cones);

/// Dual cone {u : u.x >= 0 for all x in c}.
Cone dualize(const Cone& c);

/// Linear image m(c).
Cone image(const Cone& c, const IntMat& m);

/// Preimage {x : m x in c}.
Cone preimage(const Cone& c, const IntMat& m);

}  // namespace chowq
