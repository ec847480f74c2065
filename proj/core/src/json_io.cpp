#include "kothe/json_io.hpp"

#include <stdexcept>
#include <utility>

namespace kothe {

namespace {

Json rat(const Rational& q) { return Json(to_canonical_string(q)); }

std::vector<std::pair<Index, Rational>> parse_term_array(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected a JSON array");
    std::vector<std::pair<Index, Rational>> terms;
    Index prev = 0;
    for (const Json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_string())
            throw std::invalid_argument(std::string(what) +
                                        ": each term must be [index, \"num/den\"]");
        const Index idx = entry[0].get<Index>();
        if (idx < 1) throw std::invalid_argument(std::string(what) + ": indices start at 1");
        if (idx <= prev)
            throw std::invalid_argument(std::string(what) +
                                        ": indices must be strictly increasing");
        Rational coeff = rational_from_string(entry[1].get<std::string>());
        if (coeff == 0)
            throw std::invalid_argument(std::string(what) + ": coefficients must be nonzero");
        terms.emplace_back(idx, std::move(coeff));
        prev = idx;
    }
    return terms;
}

Json dump_terms(const std::vector<std::pair<Index, Rational>>& terms) {
    Json j = Json::array();
    for (const auto& [idx, coeff] : terms) j.push_back(Json::array({idx, rat(coeff)}));
    return j;
}

} // namespace

void to_json(Json& j, const FinSeq& a) { j = dump_terms(a.terms()); }

void from_json(const Json& j, FinSeq& a) {
    a = FinSeq::from_terms(parse_term_array(j, "sequence"));
}

void to_json(Json& j, const BvSeq& x) { j = dump_terms(x.terms()); }

void from_json(const Json& j, BvSeq& x) {
    x = BvSeq::from_terms(parse_term_array(j, "bv sequence"));
}

void to_json(Json& j, const UnitalElement& x) {
    j = Json{{"scalar", rat(x.scalar)}, {"part", Json(x.part)}};
}

void from_json(const Json& j, UnitalElement& x) {
    if (!j.is_object() || j.size() != 2 || !j.contains("scalar") || !j.contains("part"))
        throw std::invalid_argument(
            "unital element: expected exactly {\"scalar\": ..., \"part\": ...}");
    if (!j["scalar"].is_string())
        throw std::invalid_argument("unital element: scalar must be a rational string");
    x.scalar = rational_from_string(j["scalar"].get<std::string>());
    x.part = j["part"].get<FinSeq>();
}

void to_json(Json& j, const Weight& p) { j = p.descriptor(); }

void to_json(Json& j, const KotheSet& set) {
    Json weights = Json::array();
    for (const Weight& p : set.members) weights.push_back(p.descriptor());
    j = Json{{"weights", std::move(weights)}, {"horizon", set.horizon}};
}

void to_json(Json& j, const AiCheck& check) {
    Json defects = Json::array();
    for (const Rational& d : check.defects) defects.push_back(rat(d));
    j = Json{{"pass", check.pass},
             {"defects", std::move(defects)},
             {"first_failure", check.first_failure ? Json(*check.first_failure) : Json(nullptr)}};
}

void to_json(Json& j, const LbaiCheck& check) {
    j = Json{{"pass", check.pass},
             {"defects", Json(check.defects)},
             {"candidate_norm", rat(check.candidate_norm)},
             {"norm_ok", check.norm_ok}};
}

void to_json(Json& j, const BaiCheck& check) {
    Json defect_checks = Json::array();
    for (const BaiDefectCheck& d : check.defect_checks)
        defect_checks.push_back(Json{{"weight", d.weight},
                                     {"eps", rat(d.eps)},
                                     {"defect_max", rat(d.defect_max)},
                                     {"ok", d.ok}});
    Json bound_checks = Json::array();
    for (const BaiBoundCheck& b : check.bound_checks)
        bound_checks.push_back(Json{{"weight", b.weight},
                                    {"norm", rat(b.norm)},
                                    {"bound", rat(b.bound)},
                                    {"ok", b.ok}});
    j = Json{{"pass", check.pass},
             {"defect_checks", std::move(defect_checks)},
             {"bound_checks", std::move(bound_checks)}};
}

void to_json(Json& j, const BaiNetResult& net) {
    Json bounds = Json::array();
    for (const BaiNetWeightBound& b : net.bounds)
        bounds.push_back(Json{{"weight", b.weight},
                              {"observed_sup", rat(b.observed_sup)},
                              {"attained_at", b.attained_at},
                              {"sup_at_end", b.sup_at_end}});
    j = Json{{"refused", net.refused},
             {"refusal_reason", net.refusal_reason},
             {"candidate", Json(net.candidate)},
             {"candidate_index", net.candidate_index},
             {"bounds", std::move(bounds)}};
}

void to_json(Json& j, const PerLevelReport& report) {
    Json levels = Json::array();
    for (const PerLevelEntry& e : report.levels) {
        Json level{{"weight", e.weight}, {"found", e.found}};
        level["witness"] = e.found ? Json(e.witness) : Json(nullptr);
        level["bound"] = e.found ? rat(e.bound) : Json(nullptr);
        level["defect_max"] = e.found ? rat(e.defect_max) : Json(nullptr);
        levels.push_back(std::move(level));
    }
    j = Json{{"all_found", report.all_found},
             {"window", report.window},
             {"levels", std::move(levels)}};
}

void to_json(Json& j, const DirectednessReport& report) {
    Json pairs = Json::array();
    for (const DirectednessPair& p : report.pairs) {
        Json first_bad = Json::array();
        for (const auto& [pos, idx] : p.first_bad) first_bad.push_back(Json::array({pos, idx}));
        pairs.push_back(Json{{"left", p.left},
                             {"right", p.right},
                             {"witness", p.witness ? Json(*p.witness) : Json(nullptr)},
                             {"first_bad", std::move(first_bad)}});
    }
    j = Json{{"directed", report.directed}, {"horizon", report.horizon},
             {"pairs", std::move(pairs)}};
}

} // namespace kothe

namespace kothe::lp {

namespace {

const char* kind_name(WindowKind kind) {
    switch (kind) {
    case WindowKind::Diagonals: return "diagonals";
    case WindowKind::IndexRange: return "index-range";
    case WindowKind::Explicit: return "explicit";
    }
    return "explicit";
}

} // namespace

void to_json(Json& j, const LowerBoundInstance& inst) {
    j = Json{{"delta", to_canonical_string(inst.delta)},
             {"kmax", inst.kmax},
             {"kind", kind_name(inst.kind)},
             {"lo", inst.lo},
             {"hi", inst.hi},
             {"window_size", inst.window.size()}};
    if (inst.kind == WindowKind::Explicit) j["window"] = inst.window;
}

void to_json(Json& j, const LowerBoundCertificate& cert) {
    Json duals = Json::array();
    for (const Rational& y : cert.duals) duals.push_back(to_canonical_string(y));
    j = Json{{"instance", Json(cert.instance)},
             {"value", to_canonical_string(cert.value)},
             {"optimizer", Json(cert.optimizer)},
             {"active_weights", cert.active_weights},
             {"duals", std::move(duals)},
             {"primal_feasible", cert.primal_feasible},
             {"dual_certified", cert.dual_certified},
             {"pointmass_bound", to_canonical_string(cert.pointmass_bound)},
             {"matches_pointmass", cert.matches_pointmass},
             {"omitted_floor",
              cert.omitted_floor ? Json(to_canonical_string(*cert.omitted_floor)) : Json(nullptr)},
             {"window_sound", cert.window_sound},
             {"widenings", cert.widenings},
             {"closed_form",
              cert.closed_form ? Json(to_canonical_string(*cert.closed_form)) : Json(nullptr)},
             {"reduction_note", cert.reduction_note},
             {"phi_convention", kPhiConventionTag}};
}

void to_json(Json& j, const GrowthCertificate& cert) {
    Json rows = Json::array();
    for (const GrowthRow& row : cert.rows)
        rows.push_back(Json{
            {"D", row.D},
            {"K", row.K},
            {"value", to_canonical_string(row.value)},
            {"floor", to_canonical_string(row.floor)},
            {"closed_form",
             row.closed_form ? Json(to_canonical_string(*row.closed_form)) : Json(nullptr)},
            {"matches_closed_form", row.matches_closed_form}});
    j = Json{{"delta", to_canonical_string(cert.delta)},
             {"pass", cert.pass},
             {"nondecreasing", cert.nondecreasing},
             {"meets_floor", cert.meets_floor},
             {"rows", std::move(rows)},
             {"phi_convention", kPhiConventionTag}};
}

} // namespace kothe::lp
