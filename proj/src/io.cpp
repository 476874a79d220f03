#include "chowq/io.hpp"

#include <algorithm>
#include <sstream>

namespace chowq::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string sub(const std::string& where, const char* key) { return where + "." + key; }
std::string sub(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::size_t count_from_json(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

bool bool_from_json(const json& j, const std::string& where) {
    if (!j.is_boolean()) fail(where, "expected true or false");
    return j.get<bool>();
}

std::string string_from_json(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

const json& array_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

template <class T, class F>
std::vector<T> list_from_json(const json& j, const std::string& where, F read) {
    std::vector<T> out;
    const json& a = array_from_json(j, where);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read(a[i], sub(where, i)));
    return out;
}

template <class T, class F>
json list_to_json(const std::vector<T>& xs, F write) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(write(x));
    return a;
}

json counts_to_json(const std::vector<std::size_t>& xs) {
    json a = json::array();
    for (auto x : xs) a.push_back(x);
    return a;
}

std::vector<std::size_t> counts_from_json(const json& j, const std::string& where) {
    return list_from_json<std::size_t>(j, where, count_from_json);
}

std::vector<std::string> strings_from_json(const json& j, const std::string& where) {
    return list_from_json<std::string>(j, where, string_from_json);
}

json rat_to_json(const Rat& r) { return r.get_str(); }

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    if (!j.is_string()) fail(where, "expected a rational number string");
    const std::string s = j.get<std::string>();
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0) fail(where, "malformed rational '" + s + "'");
    if (r.get_den() == 0) fail(where, "zero denominator");
    r.canonicalize();
    return r;
}

std::string pad_left(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

std::string vec_text(const IntVec& v) { return to_string(v); }

}  // namespace

json to_json(const Int& x) { return x.get_str(); }

json to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json to_json(const IntMat& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(to_json(m.row(i)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

json to_json(const Fan& f) {
    json cones = json::array();
    for (const auto& idx : f.maximal_indices()) cones.push_back(counts_to_json(idx));
    return json{{"dim", f.ambient_dim()},
                {"rays", list_to_json(f.rays(), [](const IntVec& v) { return to_json(v); })},
                {"lineality", list_to_json(f.lineality(), [](const IntVec& v) { return to_json(v); })},
                {"cones", cones}};
}

json to_json(const GkzRay& r) {
    return json{{"gen", to_json(r.generator)}, {"origin", r.origin_label()}, {"coeffs", to_json(r.coeffs)}};
}

json to_json(const LaurentPoly& g, const std::vector<std::string>& vars) {
    if (vars.size() != g.num_vars()) throw Error(ErrorKind::DimensionMismatch, "variable names do not match the polynomial");
    json terms = json::array();
    // Same order as the text rendering: descending exponents.
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it)
        terms.push_back(json{{"coef", rat_to_json(it->second)}, {"exp", to_json(it->first)}});
    return json{{"vars", vars}, {"terms", terms}};
}

json to_json(const WeakLifting& l) {
    return json{{"p", to_json(l.p)}, {"b", to_json(l.b)}, {"a", to_json(l.a)}, {"m", to_json(IntVec(l.m.begin(), l.m.end()))}};
}

json to_json(const EtaData& e) {
    return json{{"term_index", counts_to_json(e.term_index)},
                {"eta", list_to_json(e.eta, [](const IntVec& v) { return to_json(v); })},
                {"mu", to_json(e.mu)}};
}

json to_json(const CertificateResult& c) {
    json hyp = json::array();
    for (const auto& [name, ok] : c.hypotheses) hyp.push_back(json{{"name", name}, {"holds", ok}});
    return json{{"certified", c.certified}, {"witness", counts_to_json(c.witness)}, {"notes", c.notes}, {"hypotheses", hyp}};
}

json to_json(const HypothesisReport& h) {
    return json{{"ok", h.ok()},
                {"pair_sum_zero", h.pair_sum_zero},
                {"q_rank_two", h.q_rank_two},
                {"columns_generate", h.columns_generate},
                {"r_subsets_generate", h.r_subsets_generate},
                {"r_subset_witness", counts_to_json(h.r_subset_witness)},
                {"min_abs_weight", to_json(h.min_abs_weight)},
                {"min_weight_count", h.min_weight_count},
                {"min_weight_statement", h.min_weight_statement},
                {"min_weight_proof_literal", h.min_weight_proof_literal},
                {"min_weight_discrepancy", h.min_weight_discrepancy},
                {"failures", h.failures}};
}

json to_json(const CoxPresentation& c) {
    const std::size_t t = c.zeta.size();
    return json{{"variables", c.variables},
                {"relation", to_json(c.relation, c.variables)},
                {"grading", to_json(c.grading)},
                {"provenance",
                 json{{"zeta", to_json(c.zeta)},
                      {"permutation", counts_to_json(c.permutation)},
                      {"q", to_json(c.q)},
                      {"p", to_json(c.p)},
                      {"b", to_json(c.b)},
                      {"a", to_json(c.a)},
                      {"eta", to_json(c.eta)},
                      {"hyperplane_rays", list_to_json(c.hyperplane_rays, [](const GkzRay& r) { return to_json(r); })},
                      {"ray_source", c.ray_source},
                      {"hypotheses", to_json(c.hypotheses)},
                      {"certificate", to_json(c.certificate)},
                      {"relation_reordered",
                       to_json(c.relation_reordered, default_var_names(t, c.relation_reordered.num_vars() - t))}}}};
}

json to_json(const TropicalSetup& s) {
    return json{{"g1", to_json(s.g1, default_var_names(s.g1.num_vars(), 0))},
                {"n", s.n},
                {"vertices", list_to_json(s.vertices, [](const IntVec& v) { return to_json(v); })},
                {"p", to_json(s.p)},
                {"p_gr", to_json(s.p_gr)},
                {"pi", to_json(s.pi)},
                {"sigma", s.sigma ? to_json(*s.sigma) : json(nullptr)},
                {"lineality_dim", s.lineality_dim}};
}

json to_json(const ZeroQuotientData& z) {
    return json{{"projected_rays", list_to_json(z.projected_rays, [](const IntVec& v) { return to_json(v); })},
                {"delta0", to_json(z.delta0)}};
}

json to_json(const FacetClaim& f) {
    return json{{"ray", to_json(f.ray)},
                {"image", to_json(f.image)},
                {"on_delta_ray", f.on_delta_ray},
                {"in_facet", f.in_facet},
                {"ok", f.ok()}};
}

json to_json(const MdsReport& m) {
    const std::size_t n = m.setup.n;
    return json{{"verdict", to_string(m.verdict)},
                {"zeta", to_json(m.zeta)},
                {"permutation", counts_to_json(m.permutation)},
                {"zeta_reordered", to_json(m.zeta_reordered)},
                {"facet_claim", list_to_json(m.facet_claim, [](const FacetClaim& f) { return to_json(f); })},
                {"facet_claim_ok", m.facet_claim_ok},
                {"common_cone", m.common_cone.certified},
                {"common_cone_detail", to_json(m.common_cone)},
                {"delta0", to_json(m.zero.delta0)},
                {"projected_rays", list_to_json(m.zero.projected_rays, [](const IntVec& v) { return to_json(v); })},
                {"new_rays", to_json(m.new_rays)},
                {"ambient", to_json(m.ambient)},
                {"h2", m.h2 ? to_json(*m.h2, default_var_names(n + 1, m.new_rays.cols())) : json(nullptr)},
                {"sigma_new_rays", list_to_json(m.sigma_new_rays, [](const IntVec& v) { return to_json(v); })},
                {"sigma_images_in_base", m.sigma_images_in_base},
                {"sigma_prime", json{{"rays", m.sigma_prime_rays}, {"cones", m.sigma_prime_cones}}},
                {"setup", to_json(m.setup)},
                {"notes", m.notes}};
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
    if (!j.is_string()) fail(where, "expected an integer or a decimal string");
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(where, "malformed integer '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s);
}

IntVec intvec_from_json(const json& j, const std::string& where) {
    return list_from_json<Int>(j, where, int_from_json);
}

IntMat intmat_from_json(const json& j, const std::string& where) {
    const json* data = &j;
    std::size_t rows = 0, cols = 0;
    bool sized = false;
    if (j.is_object()) {
        data = &field(j, "data", where);
        rows = count_from_json(field(j, "rows", where), sub(where, "rows"));
        cols = count_from_json(field(j, "cols", where), sub(where, "cols"));
        sized = true;
    }
    const std::string dw = j.is_object() ? sub(where, "data") : where;
    const std::vector<IntVec> rs = list_from_json<IntVec>(*data, dw, intvec_from_json);
    if (!sized) {
        rows = rs.size();
        cols = rs.empty() ? 0 : rs[0].size();
    }
    if (rs.size() != rows) fail(dw, "expected " + std::to_string(rows) + " rows, found " + std::to_string(rs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (rs[i].size() != cols)
            fail(sub(dw, i), "expected " + std::to_string(cols) + " entries, found " + std::to_string(rs[i].size()));
    if (rows == 0) return IntMat(0, cols);
    return IntMat::from_rows(rs, cols);
}


Fan fan_from_json(const json& j, const std::string& where) {
    const std::size_t dim = count_from_json(field(j, "dim", where), sub(where, "dim"));
    const auto rays = list_from_json<IntVec>(field(j, "rays", where), sub(where, "rays"), intvec_from_json);
    std::vector<IntVec> lin;
    if (j.contains("lineality")) lin = list_from_json<IntVec>(j["lineality"], sub(where, "lineality"), intvec_from_json);
    const auto cones = list_from_json<std::vector<std::size_t>>(field(j, "cones", where), sub(where, "cones"), counts_from_json);
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i].size() != dim) fail(sub(sub(where, "rays"), i), "expected " + std::to_string(dim) + " entries");
    for (std::size_t i = 0; i < lin.size(); ++i)
        if (lin[i].size() != dim) fail(sub(sub(where, "lineality"), i), "expected " + std::to_string(dim) + " entries");
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t k : cones[i])
            if (k >= rays.size()) fail(sub(sub(where, "cones"), i), "ray index " + std::to_string(k) + " out of range");
    try {
        return Fan::from_maximal_indices(dim, rays, lin, cones);
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

GkzRay gkz_ray_from_json(const json& j, const std::string& where) {
    GkzRay r;
    r.generator = intvec_from_json(field(j, "gen", where), sub(where, "gen"));
    r.coeffs = intvec_from_json(field(j, "coeffs", where), sub(where, "coeffs"));
    const std::string origin = string_from_json(field(j, "origin", where), sub(where, "origin"));
    const auto colon = origin.find(':');
    const std::string kind = origin.substr(0, colon);
    if (colon == std::string::npos || (kind != "column" && kind != "hyperplane"))
        fail(sub(where, "origin"), "expected 'column:i' or 'hyperplane:i'");
    r.origin = kind == "column" ? GkzRay::Origin::Column : GkzRay::Origin::Hyperplane;
    const std::string idx = origin.substr(colon + 1);
    if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(sub(where, "origin"), "malformed index in '" + origin + "'");
    r.index = std::stoul(idx);
    return r;
}

NamedPoly poly_from_json(const json& j, const std::string& where) {
    NamedPoly out;
    out.vars = strings_from_json(field(j, "vars", where), sub(where, "vars"));
    out.poly = LaurentPoly(out.vars.size());
    const json& terms = array_from_json(field(j, "terms", where), sub(where, "terms"));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string w = sub(sub(where, "terms"), i);
        IntVec e = intvec_from_json(field(terms[i], "exp", w), sub(w, "exp"));
        if (e.size() != out.vars.size()) fail(sub(w, "exp"), "expected " + std::to_string(out.vars.size()) + " exponents");
        Rat c = terms[i].contains("coef") ? rat_from_json(terms[i]["coef"], sub(w, "coef")) : Rat(1);
        out.poly.add_term(e, c);
    }
    return out;
}

WeakLifting lifting_from_json(const json& j, const std::string& where) {
    WeakLifting l;
    l.p = intmat_from_json(field(j, "p", where), sub(where, "p"));
    l.b = intmat_from_json(field(j, "b", where), sub(where, "b"));
    l.a = intmat_from_json(field(j, "a", where), sub(where, "a"));
    IntVec m = intvec_from_json(field(j, "m", where), sub(where, "m"));
    l.m.assign(m.begin(), m.end());
    return l;
}

EtaData eta_from_json(const json& j, const std::string& where) {
    EtaData e;
    e.term_index = counts_from_json(field(j, "term_index", where), sub(where, "term_index"));
    e.eta = list_from_json<IntVec>(field(j, "eta", where), sub(where, "eta"), intvec_from_json);
    e.mu = intvec_from_json(field(j, "mu", where), sub(where, "mu"));
    return e;
}

CertificateResult certificate_from_json(const json& j, const std::string& where) {
    CertificateResult c;
    c.certified = bool_from_json(field(j, "certified", where), sub(where, "certified"));
    c.witness = counts_from_json(field(j, "witness", where), sub(where, "witness"));
    c.notes = strings_from_json(field(j, "notes", where), sub(where, "notes"));
    const json& hyp = array_from_json(field(j, "hypotheses", where), sub(where, "hypotheses"));
    for (std::size_t i = 0; i < hyp.size(); ++i) {
        const std::string w = sub(sub(where, "hypotheses"), i);
        c.hypotheses.emplace_back(string_from_json(field(hyp[i], "name", w), sub(w, "name")),
                                  bool_from_json(field(hyp[i], "holds", w), sub(w, "holds")));
    }
    return c;
}

HypothesisReport hypotheses_from_json(const json& j, const std::string& where) {
    HypothesisReport h;
    auto flag = [&](const char* key) { return bool_from_json(field(j, key, where), sub(where, key)); };
    h.pair_sum_zero = flag("pair_sum_zero");
    h.q_rank_two = flag("q_rank_two");
    h.columns_generate = flag("columns_generate");
    h.r_subsets_generate = flag("r_subsets_generate");
    h.r_subset_witness = counts_from_json(field(j, "r_subset_witness", where), sub(where, "r_subset_witness"));
    h.min_abs_weight = int_from_json(field(j, "min_abs_weight", where), sub(where, "min_abs_weight"));
    h.min_weight_count = count_from_json(field(j, "min_weight_count", where), sub(where, "min_weight_count"));
    h.min_weight_statement = flag("min_weight_statement");
    h.min_weight_proof_literal = flag("min_weight_proof_literal");
    h.min_weight_discrepancy = flag("min_weight_discrepancy");
    h.failures = strings_from_json(field(j, "failures", where), sub(where, "failures"));
    return h;
}

CoxPresentation cox_from_json(const json& j, const std::string& where) {
    CoxPresentation c;
    c.variables = strings_from_json(field(j, "variables", where), sub(where, "variables"));
    c.relation = poly_from_json(field(j, "relation", where), sub(where, "relation")).poly;
    c.grading = intmat_from_json(field(j, "grading", where), sub(where, "grading"));
    const std::string pw = sub(where, "provenance");
    const json& p = field(j, "provenance", where);
    c.zeta = intvec_from_json(field(p, "zeta", pw), sub(pw, "zeta"));
    c.permutation = counts_from_json(field(p, "permutation", pw), sub(pw, "permutation"));
    c.q = intmat_from_json(field(p, "q", pw), sub(pw, "q"));
    c.p = intmat_from_json(field(p, "p", pw), sub(pw, "p"));
    c.b = intmat_from_json(field(p, "b", pw), sub(pw, "b"));
    c.a = intmat_from_json(field(p, "a", pw), sub(pw, "a"));
    c.eta = eta_from_json(field(p, "eta", pw), sub(pw, "eta"));
    c.hyperplane_rays = list_from_json<GkzRay>(field(p, "hyperplane_rays", pw), sub(pw, "hyperplane_rays"), gkz_ray_from_json);
    c.ray_source = string_from_json(field(p, "ray_source", pw), sub(pw, "ray_source"));
    c.hypotheses = hypotheses_from_json(field(p, "hypotheses", pw), sub(pw, "hypotheses"));
    c.certificate = certificate_from_json(field(p, "certificate", pw), sub(pw, "certificate"));
    c.relation_reordered = poly_from_json(field(p, "relation_reordered", pw), sub(pw, "relation_reordered")).poly;
    return c;
}

TropicalSetup setup_from_json(const json& j, const std::string& where) {
    TropicalSetup s;
    s.g1 = poly_from_json(field(j, "g1", where), sub(where, "g1")).poly;
    s.n = count_from_json(field(j, "n", where), sub(where, "n"));
    s.vertices = list_from_json<IntVec>(field(j, "vertices", where), sub(where, "vertices"), intvec_from_json);
    s.p = intmat_from_json(field(j, "p", where), sub(where, "p"));
    s.p_gr = intmat_from_json(field(j, "p_gr", where), sub(where, "p_gr"));
    s.pi = intmat_from_json(field(j, "pi", where), sub(where, "pi"));
    const json& sigma = field(j, "sigma", where);
    if (!sigma.is_null()) s.sigma = fan_from_json(sigma, sub(where, "sigma"));
    s.lineality_dim = count_from_json(field(j, "lineality_dim", where), sub(where, "lineality_dim"));
    return s;
}

ZeroQuotientData zero_quotient_from_json(const json& j, const std::string& where) {
    ZeroQuotientData z;
    z.projected_rays = list_from_json<IntVec>(field(j, "projected_rays", where), sub(where, "projected_rays"), intvec_from_json);
    z.delta0 = fan_from_json(field(j, "delta0", where), sub(where, "delta0"));
    return z;
}

FacetClaim facet_claim_from_json(const json& j, const std::string& where) {
    FacetClaim f;
    f.ray = intvec_from_json(field(j, "ray", where), sub(where, "ray"));
    f.image = intvec_from_json(field(j, "image", where), sub(where, "image"));
    f.on_delta_ray = bool_from_json(field(j, "on_delta_ray", where), sub(where, "on_delta_ray"));
    f.in_facet = bool_from_json(field(j, "in_facet", where), sub(where, "in_facet"));
    return f;
}

MdsReport mds_from_json(const json& j, const std::string& where) {
    MdsReport m;
    const std::string verdict = string_from_json(field(j, "verdict", where), sub(where, "verdict"));
    if (verdict != "Certified" && verdict != "Uncertified") fail(sub(where, "verdict"), "unknown verdict '" + verdict + "'");
    m.verdict = verdict == "Certified" ? Verdict::Certified : Verdict::Uncertified;
    m.zeta = intvec_from_json(field(j, "zeta", where), sub(where, "zeta"));
    m.permutation = counts_from_json(field(j, "permutation", where), sub(where, "permutation"));
    m.zeta_reordered = intvec_from_json(field(j, "zeta_reordered", where), sub(where, "zeta_reordered"));
    m.facet_claim = list_from_json<FacetClaim>(field(j, "facet_claim", where), sub(where, "facet_claim"), facet_claim_from_json);
    m.facet_claim_ok = bool_from_json(field(j, "facet_claim_ok", where), sub(where, "facet_claim_ok"));
    m.common_cone = certificate_from_json(field(j, "common_cone_detail", where), sub(where, "common_cone_detail"));
    m.zero.delta0 = fan_from_json(field(j, "delta0", where), sub(where, "delta0"));
    m.zero.projected_rays = list_from_json<IntVec>(field(j, "projected_rays", where), sub(where, "projected_rays"), intvec_from_json);
    m.new_rays = intmat_from_json(field(j, "new_rays", where), sub(where, "new_rays"));
    m.ambient = fan_from_json(field(j, "ambient", where), sub(where, "ambient"));
    const json& h2 = field(j, "h2", where);
    if (!h2.is_null()) m.h2 = poly_from_json(h2, sub(where, "h2")).poly;
    m.sigma_new_rays = list_from_json<IntVec>(field(j, "sigma_new_rays", where), sub(where, "sigma_new_rays"), intvec_from_json);
    m.sigma_images_in_base = bool_from_json(field(j, "sigma_images_in_base", where), sub(where, "sigma_images_in_base"));
    const json& sp = field(j, "sigma_prime", where);
    m.sigma_prime_rays = count_from_json(field(sp, "rays", sub(where, "sigma_prime")), sub(where, "sigma_prime.rays"));
    m.sigma_prime_cones = count_from_json(field(sp, "cones", sub(where, "sigma_prime")), sub(where, "sigma_prime.cones"));
    m.setup = setup_from_json(field(j, "setup", where), sub(where, "setup"));
    m.notes = strings_from_json(field(j, "notes", where), sub(where, "notes"));
    return m;
}

json parse_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

IntVec parse_int_list(const std::string& s, const std::string& where) {
    std::string t;
    for (char c : s)
        if (c != '[' && c != ']' && c != ' ' && c != '(' && c != ')') t += c;
    IntVec out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(int_from_json(json(item), sub(where, out.size())));
    if (out.empty()) fail(where, "empty integer list");
    return out;
}

IntMat parse_int_rows(const std::string& s, const std::string& where) {
    std::vector<IntVec> rows;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) rows.push_back(parse_int_list(item, sub(where, rows.size())));
    if (rows.empty()) fail(where, "empty matrix");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != rows[0].size()) fail(sub(where, i), "rows have different lengths");
    return IntMat::from_rows(rows, rows[0].size());
}

std::string matrix_text(const IntMat& m, const std::string& indent) {
    std::size_t w = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) w = std::max(w, m(i, k).get_str().size());
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += indent + "[";
        for (std::size_t k = 0; k < m.cols(); ++k) out += (k ? " " : "") + pad_left(m(i, k).get_str(), w);
        out += "]\n";
    }
    return out;
}

std::string cox_text(const CoxPresentation& c) {
    std::string vars;
    for (const auto& v : c.variables) vars += (vars.empty() ? "" : ",") + v;
    std::string out;
    out += "weights: " + vec_text(c.zeta) + "\n";
    out += "Cox ring: K[" + vars + "] / <" + c.relation.to_pretty_string(c.variables) + ">\n";
    out += "grading (columns " + vars + "):\n" + matrix_text(c.grading);
    out += "hyperplane rays (" + c.ray_source + "):\n";
    if (c.hyperplane_rays.empty()) out += "  none\n";
    for (std::size_t j = 0; j < c.hyperplane_rays.size(); ++j)
        out += "  S" + std::to_string(j + 1) + ": " + vec_text(c.hyperplane_rays[j].generator) + " = P * " +
               vec_text(c.a.col(j)) + " (" + c.hyperplane_rays[j].origin_label() + ")\n";
    out += "certificate: " + std::string(c.certificate.certified ? "certified" : "not certified") + "\n";
    if (c.hypotheses.min_weight_discrepancy)
        out += "note: the minimal-weight count holds, the stronger even-r normal form does not\n";
    return out;
}

std::string fan_text(const Fan& f) {
    std::string out = "dim " + std::to_string(f.ambient_dim()) + ", " + std::to_string(f.rays().size()) + " rays, " +
                      std::to_string(f.maximal_indices().size()) + " maximal cones\n";
    for (std::size_t i = 0; i < f.rays().size(); ++i) out += "  r" + std::to_string(i) + " = " + vec_text(f.rays()[i]) + "\n";
    if (!f.lineality().empty()) {
        out += "  lineality:";
        for (const auto& v : f.lineality()) out += " " + vec_text(v);
        out += "\n";
    }
    for (const auto& idx : f.maximal_indices()) {
        out += "  cone(";
        for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + std::string("r") + std::to_string(idx[k]);
        out += ")\n";
    }
    return out;
}

std::string rays_text(const std::vector<GkzRay>& rays) {
    std::string out;
    for (const auto& r : rays) out += r.origin_label() + ": " + vec_text(r.generator) + " coeffs " + vec_text(r.coeffs) + "\n";
    return out;
}

std::string mds_text(const MdsReport& m) {
    const std::size_t n = m.setup.n;
    std::string out;
    out += "weights: " + vec_text(m.zeta) + "\n";
    out += "verdict: MoriDream=" + to_string(m.verdict) + "\n";
    out += "n = " + std::to_string(n) + ", resolved fan: " + std::to_string(m.sigma_prime_rays) + " rays, " +
           std::to_string(m.sigma_prime_cones) + " maximal cones\n";
    out += "projected rays:";
    for (const auto& b : m.zero.projected_rays) out += " " + vec_text(b);
    out += "\n";
    std::string fresh;
    for (std::size_t j = 0; j < m.new_rays.cols(); ++j) fresh += (j ? ", " : "") + vec_text(m.new_rays.col(j));
    out += "Delta0: Delta(" + std::to_string(n) + ")" + (fresh.empty() ? "" : " subdivided at " + fresh) + "\n";
    std::size_t bad = 0;
    for (const auto& f : m.facet_claim) bad += f.ok() ? 0 : 1;
    out += "facet claim: " + std::to_string(m.facet_claim.size() - bad) + "/" + std::to_string(m.facet_claim.size()) + " rays\n";
    out += "common cone: " + std::string(m.common_cone.certified ? "yes" : "no") + "\n";
    if (m.h2) out += "h2 = " + m.h2->to_pretty_string(default_var_names(n + 1, m.new_rays.cols())) + "\n";
    for (const auto& note : m.notes) out += "note: " + note + "\n";
    return out;
}

}  // namespace chowq::io
