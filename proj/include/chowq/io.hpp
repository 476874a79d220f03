#pragma once

// JSON serialization and text rendering of the public types.
//
// Integers and rational coefficients are written as decimal strings; counts,
// dimensions and indices as JSON numbers. Readers accept integers either way.
// Every reader throws Error(ParseError) naming the offending field.

#include <string>
#include <vector>

#include "json.hpp"

#include "chowq/tropres.hpp"

namespace chowq::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct NamedPoly {
    LaurentPoly poly;
    std::vector<std::string> vars;
    bool operator==(const NamedPoly&) const = default;
};

json to_json(const Int& x);
json to_json(const IntVec& v);
json to_json(const IntMat& m);
json to_json(const Fan& f);
json to_json(const GkzRay& r);
json to_json(const LaurentPoly& g, const std::vector<std::string>& vars);
json to_json(const WeakLifting& l);
json to_json(const EtaData& e);
json to_json(const CertificateResult& c);
json to_json(const HypothesisReport& h);
json to_json(const CoxPresentation& c);
json to_json(const TropicalSetup& s);
json to_json(const ZeroQuotientData& z);
json to_json(const FacetClaim& f);
json to_json(const MdsReport& m);

// `where` prefixes diagnostics, e.g. "input.q".
Int int_from_json(const json& j, const std::string& where);
IntVec intvec_from_json(const json& j, const std::string& where);
IntMat intmat_from_json(const json& j, const std::string& where);
Fan fan_from_json(const json& j, const std::string& where);
GkzRay gkz_ray_from_json(const json& j, const std::string& where);
NamedPoly poly_from_json(const json& j, const std::string& where);
WeakLifting lifting_from_json(const json& j, const std::string& where);
EtaData eta_from_json(const json& j, const std::string& where);
CertificateResult certificate_from_json(const json& j, const std::string& where);
HypothesisReport hypotheses_from_json(const json& j, const std::string& where);
CoxPresentation cox_from_json(const json& j, const std::string& where);
TropicalSetup setup_from_json(const json& j, const std::string& where);
ZeroQuotientData zero_quotient_from_json(const json& j, const std::string& where);
FacetClaim facet_claim_from_json(const json& j, const std::string& where);
MdsReport mds_from_json(const json& j, const std::string& where);

/// Parses JSON text; syntax errors carry line and column.
json parse_text(const std::string& text, const std::string& source);

/// Two-space indented with a trailing newline.
std::string dump(const json& j);

/// "-2,2,-1,1" or "[-2, 2, -1, 1]".
IntVec parse_int_list(const std::string& s, const std::string& where);
/// Rows separated by ';', entries by ','.
IntMat parse_int_rows(const std::string& s, const std::string& where);

std::string matrix_text(const IntMat& m, const std::string& indent = "  ");
std::string cox_text(const CoxPresentation& c);
std::string mds_text(const MdsReport& m);
std::string fan_text(const Fan& f);
std::string rays_text(const std::vector<GkzRay>& rays);

}  // namespace chowq::io
