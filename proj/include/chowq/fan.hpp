#pragma once

// Polyhedral fans stored as a shared ray list plus maximal cones.

#include <cstddef>
#include <vector>

#include "chowq/cone.hpp"

namespace chowq {

enum class Exec { Serial, Parallel };

/// A fan in Q^dim. All cones share the same lineality space. Rays are sorted
/// and each maximal cone is a sorted list of ray indices; the list of maximal
/// cones is sorted too, so equal fans compare equal.
class Fan {
public:
    Fan() = default;

    /// Fan whose cones are the given cones and their faces. Cones contained in
    /// another input cone are dropped. Throws InvalidFan on mismatched lineality.
    static Fan from_cones(std::size_t dim, std::vector<Cone> cones, Exec exec = Exec::Serial);

    static Fan from_maximal_indices(std::size_t dim, const std::vector<IntVec>& rays,
                                    const std::vector<IntVec>& lineality,
                                    const std::vector<std::vector<std::size_t>>& maximal);

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<IntVec>& rays() const noexcept { return rays_; }
    const std::vector<IntVec>& lineality() const noexcept { return lineality_; }
    const std::vector<std::vector<std::size_t>>& maximal_indices() const noexcept { return maximal_idx_; }
    const std::vector<Cone>& maximal_cones() const noexcept { return maximal_; }

    /// Every cone of the fan, without repetition.
    std::vector<Cone> all_cones() const;

    bool support_contains(const IntVec& v) const;

    /// Pure of dimension ambient_dim().
    bool is_complete_candidate() const;

    /// Pairwise intersections of maximal cones are common faces.
    bool is_valid(Exec exec = Exec::Serial) const;

    bool operator==(const Fan& other) const {
        return dim_ == other.dim_ && lineality_ == other.lineality_ && rays_ == other.rays_ &&
               maximal_idx_ == other.maximal_idx_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<IntVec> lineality_;
    std::vector<IntVec> rays_;
    std::vector<std::vector<std::size_t>> maximal_idx_;
    std::vector<Cone> maximal_;
};

/// Every cone of `fine` lies in a cone of `coarse` and the supports agree.
bool refines(const Fan& fine, const Fan& coarse, Exec exec = Exec::Serial);

/// Fan of all intersections of cones of a and b.
Fan common_refinement(const Fan& a, const Fan& b, Exec exec = Exec::Serial);

/// Coarsest fan refining the images of all cones of f under p.
/// The image support is assumed pure. Throws NotSurjective if p has rank < rows.
Fan quotient_fan(const Fan& f, const IntMat& p, Exec exec = Exec::Serial);

/// Stellar subdivision at v, which must lie in the support (OutsideSupport).
Fan stellar_subdivision(const Fan& f, const IntVec& v);

/// Fan consisting of the positive orthant and its faces.
Fan orthant_fan(std::size_t dim);

}  // namespace chowq
