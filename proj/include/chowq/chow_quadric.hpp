#pragma once

// Cox rings of normalized Chow quotients of K*-actions on smooth quadrics.

#include <cstddef>
#include <string>
#include <vector>

#include "chowq/gkz.hpp"
#include "chowq/lifting.hpp"

namespace chowq {

struct WeightSystem {
    IntVec zeta;  // length r + 1

    static WeightSystem from(const IntVec& zeta);  // throws InvalidWeights if fewer than two weights
    std::size_t r() const noexcept { return zeta.size() - 1; }
    Parity parity() const noexcept { return parity_of(r()); }

    /// Extended weight matrix: zeta on top of the all-ones row.
    IntMat q() const;
};

struct HypothesisReport {
    bool pair_sum_zero = false;        // zeta_{2i} + zeta_{2i+1} = 0, and zeta_r = 0 for even r
    bool q_rank_two = false;
    bool columns_generate = false;     // all columns of q generate Z^2
    bool r_subsets_generate = false;   // every choice of r columns generates Z^2
    std::vector<std::size_t> r_subset_witness;  // a failing subset, if any

    Int min_abs_weight = 0;
    std::size_t min_weight_count = 0;
    bool min_weight_statement = false;      // at least four (odd r) or three (even r) minimal weights
    bool min_weight_proof_literal = false;  // even r: two zero pairs besides zeta_r; odd r: same as statement
    bool min_weight_discrepancy = false;    // statement holds but the literal even-r form does not

    std::vector<std::string> failures;
    bool operator==(const HypothesisReport&) const = default;

    /// Gating flags (the literal even-r form is reported only).
    bool ok() const {
        return pair_sum_zero && q_rank_two && columns_generate && r_subsets_generate && min_weight_statement;
    }
};

HypothesisReport validate_hypotheses(const WeightSystem& w);

/// perm[new] = old: pairs sorted by |zeta| descending (stable), pairs kept
/// adjacent, index r fixed for even r. Does not check hypotheses.
std::vector<std::size_t> pair_sort_permutation(const IntVec& zeta);

/// Throws HypothesisViolated if the hypotheses fail.
std::pair<WeightSystem, std::vector<std::size_t>> reorder_weights(const WeightSystem& w);

struct CoxPresentation {
    std::vector<std::string> variables;
    LaurentPoly relation;
    IntMat grading;

    // Provenance, in the original variable order.
    IntVec zeta;
    std::vector<std::size_t> permutation;  // perm[new] = old used internally
    IntMat q;
    IntMat p;
    IntMat b;
    IntMat a;
    EtaData eta;   // rows in the reordered numbering
    std::vector<GkzRay> hyperplane_rays;
    std::string ray_source;  // "corank2" or "bruteforce"
    HypothesisReport hypotheses;
    CertificateResult certificate;
    LaurentPoly relation_reordered;  // g2 in the reordered numbering
    bool operator==(const CoxPresentation&) const = default;
};

struct CoxOptions {
    Exec exec = Exec::Serial;
};

/// Full pipeline. Throws HypothesisViolated, or CertificateFailed / InternalError on
/// an internal consistency fault.
CoxPresentation cox_ring_of_chow_quotient(const WeightSystem& w, const CoxOptions& opts = {});

/// Hyperplane rays for a weight system's Gale dual, with a fallback to the
/// brute-force fan when the corank-2 formula's hypotheses fail.
std::vector<GkzRay> hyperplane_rays(const VectorConfig& cfg, std::string& source, Exec exec = Exec::Serial);

}  // namespace chowq
