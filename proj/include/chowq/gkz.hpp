#pragma once

// GKZ decompositions of vector configurations.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "chowq/fan.hpp"

namespace chowq {

/// Mutually Gale dual configurations: columns p_0..p_r of p and q_0..q_r of q.
struct VectorConfig {
    IntMat p;
    IntMat q;

    static VectorConfig from_q(const IntMat& q);
    static VectorConfig from_p(const IntMat& p);
    std::size_t size() const noexcept { return p.cols(); }
};

struct GkzRay {
    enum class Origin { Column, Hyperplane };

    IntVec generator;  // primitive
    Origin origin = Origin::Column;
    std::size_t index = 0;  // column i, or the q-column whose perpendicular produced the ray
    IntVec coeffs;          // nonnegative alpha with generator parallel to p * alpha

    std::string origin_label() const;
    bool operator==(const GkzRay&) const = default;
};

/// Cones spanned by subsets of the p-columns, deduplicated and sorted.
std::vector<Cone> p_cones(const VectorConfig& cfg, bool full_dimensional_only = false);

/// Intersection of the P-cones whose relative interior contains v.
Cone gkz_cone_at(const VectorConfig& cfg, const IntVec& v);
Cone gkz_cone_at(const std::vector<Cone>& pcones, const IntVec& v);

/// Indices i with q_i outside the relative interior of the movable cone.
std::set<std::size_t> extremal_columns(const VectorConfig& cfg);

/// Ray attached to the Q-hyperplane u-perp. Throws NotAHyperplane or DegenerateRay.
GkzRay rho(const VectorConfig& cfg, const IntVec& u);

struct RayFormulaCheck {
    bool columns_nonzero = true;
    bool pairwise_independent = true;
    bool positively_spanning = true;
    bool ok() const { return columns_nonzero && pairwise_independent && positively_spanning; }
    std::string failure() const;
};

RayFormulaCheck check_ray_formula_hypotheses(const VectorConfig& cfg);

/// Rays of the GKZ fan for k = 2: the column rays plus rho(u_i) for the
/// non-extremal q_i, with u_i = primitive(-b, a) for q_i = (a, b).
/// Throws HypothesisViolated if the configuration hypotheses fail.
std::vector<GkzRay> gkz_rays_corank2(const VectorConfig& cfg);

struct BruteForceOptions {
    bool ignore_scale_limit = false;
    Exec exec = Exec::Serial;
};

/// Full GKZ fan by walking the chambers of the simplicial-base arrangement,
/// validated cone by cone against gkz_cone_at. Requires rank(p) = rows(p).
/// Throws ScaleExceeded beyond 10 columns or 6 rows unless overridden.
Fan gkz_fan_bruteforce(const VectorConfig& cfg, const BruteForceOptions& opts = {});

/// Labels the rays of a GKZ fan of a 2-row configuration: columns first by
/// index, the rest matched against rho of the perpendiculars of the q-columns.
/// Fan order is kept. Throws InternalError for an unmatched ray.
std::vector<GkzRay> label_fan_rays(const VectorConfig& cfg, const Fan& fan);

/// Same fan, computed as the quotient of the positive orthant under p.
Fan gkz_fan_via_quotient(const VectorConfig& cfg, Exec exec = Exec::Serial);

}  // namespace chowq
