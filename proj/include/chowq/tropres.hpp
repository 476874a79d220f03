#pragma once

// Weak tropical resolutions of quadric Chow quotients and the resulting
// Mori dream space certificate.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chowq/chow_quadric.hpp"

namespace chowq {

/// Delta(n): cones spanned by at most n of e_0..e_n, where e_0 = -(e_1 + ... + e_n).
Fan delta_fan(std::size_t n);

/// Delta'(n): the cones of Delta(n) of dimension at most n - 1.
Fan delta_prime_fan(std::size_t n);

/// e_i of Delta(n), i = 0..n.
IntVec delta_ray(std::size_t n, std::size_t i);

struct TropicalSetup {
    LaurentPoly g1;
    std::size_t n = 0;
    std::vector<IntVec> vertices;  // mu_0..mu_n, descending lexicographic
    IntMat p;
    IntMat p_gr;                   // rows mu_i - mu_0
    IntMat pi;                     // pi * p = p_gr
    std::optional<Fan> sigma;      // GKZ fan of the columns of p
    std::size_t lineality_dim = 0; // dim ker pi
    bool operator==(const TropicalSetup&) const = default;
};

struct NewtonOptions {
    bool compute_sigma = true;
    Exec exec = Exec::Serial;
};

/// Throws DegenerateNewton for fewer than two vertices, InconsistentDiagram if
/// pi does not exist or the rows are not exact.
TropicalSetup newton_setup(const LaurentPoly& g1, const IntMat& p, const NewtonOptions& opts = {});

/// Cones pi^{-1}(delta) for delta in Delta'(n), all with lineality ker pi.
Fan lifted_tropical_fan(const IntMat& pi);
Fan lifted_tropical_fan(const TropicalSetup& setup);

/// Coarsest common refinement of the GKZ fan and the lifted tropical fan.
Fan weak_tropical_resolution(const TropicalSetup& setup, Exec exec = Exec::Serial);

struct ZeroQuotientData {
    std::vector<IntVec> projected_rays;  // sorted, primitive, nonzero
    Fan delta0;                          // {0} and the projected rays
    bool operator==(const ZeroQuotientData&) const = default;
};

/// Throws NotSurjective if pi has rank below its row count.
ZeroQuotientData zero_quotient(const Fan& sigma_prime, const IntMat& pi);

struct FacetClaim {
    IntVec ray;    // ray of the resolved fan
    IntVec image;  // primitive image under pi
    bool on_delta_ray = false;  // image is one of e_0..e_n
    bool in_facet = false;      // image lies in a facet of cone(e_0..e_{n-1})
    bool ok() const { return on_delta_ray || in_facet; }
    bool operator==(const FacetClaim&) const = default;
};

enum class Verdict { Certified, Uncertified };
std::string to_string(Verdict v);

struct MdsReport {
    IntVec zeta;                           // as given
    std::vector<std::size_t> permutation;  // perm[new] = old
    IntVec zeta_reordered;
    TropicalSetup setup;                   // reordered numbering
    std::vector<IntVec> sigma_new_rays;    // GKZ rays not spanned by a column of setup.p
    bool sigma_images_in_base = false;     // their images lie in cone(e_0..e_{n-1})
    std::size_t sigma_prime_rays = 0;
    std::size_t sigma_prime_cones = 0;
    std::vector<FacetClaim> facet_claim;
    bool facet_claim_ok = false;
    ZeroQuotientData zero;
    IntMat new_rays;                       // projected rays other than e_0..e_n, as columns
    CertificateResult common_cone;
    Fan ambient;                           // Delta(n) subdivided at the new rays
    std::optional<LaurentPoly> h2;
    Verdict verdict = Verdict::Uncertified;
    std::vector<std::string> notes;
    bool operator==(const MdsReport&) const = default;
};

struct MdsOptions {
    Exec exec = Exec::Serial;
};

/// Throws InvalidWeights unless the pair-sum normal form holds.
MdsReport mds_certificate(const WeightSystem& w, const MdsOptions& opts = {});

}  // namespace chowq
