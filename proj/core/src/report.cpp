#include "kothe/report.hpp"

#include <stdexcept>
#include <utility>

namespace kothe {

namespace {

Json rat(const Rational& q) { return Json(to_canonical_string(q)); }

} // namespace

Json reproduce_counterexample(const ReproduceConfig& config) {
    if (config.kmax < 1) throw std::invalid_argument("reproduction requires kmax >= 1");
    if (config.dmax < 3) throw std::invalid_argument("reproduction requires dmax >= 3");
    if (config.horizon < 1) throw std::invalid_argument("reproduction requires horizon >= 1");

    KotheSet set;
    set.horizon = config.horizon;
    for (Index k = 1; k <= config.kmax; ++k) set.members.push_back(cex_weight(k));

    Json report;
    report["config"] =
        Json{{"kmax", config.kmax}, {"dmax", config.dmax}, {"horizon", config.horizon}};
    report["phi_convention"] = kPhiConventionTag;
    report["family"] = Json(set);

    // the family is a legal weight set: every value >= 1 up to the horizon
    bool all_ge_one = true;
    Json floor_checks = Json::array();
    for (const Weight& p : set.members) {
        const auto violation = check_ge_one(p, set.horizon);
        if (violation) all_ge_one = false;
        floor_checks.push_back(Json{{"weight", p.descriptor()},
                                    {"ok", !violation},
                                    {"first_violation", violation ? Json(*violation) : Json(nullptr)}});
    }
    report["weight_floor"] = Json{{"all_ge_one", all_ge_one}, {"checks", std::move(floor_checks)}};

    const DirectednessReport directed = check_directed(set);
    report["directedness"] = Json(directed);

    // each weight sits at the constant k+1 along its witness row while its
    // first row grows without bound, so only a subsequence is bounded
    const Index count = 10;
    bool rows_ok = true;
    Json rows = Json::array();
    for (Index k = 1; k <= config.kmax; ++k) {
        const Weight& p = set.members[static_cast<std::size_t>(k - 1)];
        const std::vector<Index> witness = bounded_subsequence_witness(k, count);
        bool constant_ok = true;
        Json values = Json::array();
        for (Index n : witness) {
            const Rational v = p(n);
            if (v != k + 1) constant_ok = false;
            values.push_back(rat(v));
        }
        bool unbounded_ok = true;
        Json row_one_indices = Json::array();
        Json row_one_values = Json::array();
        for (Index j = 1; j <= count; ++j) {
            const Index n = phi(1, j);
            const Rational v = p(n);
            if (v != j) unbounded_ok = false;
            row_one_indices.push_back(n);
            row_one_values.push_back(rat(v));
        }
        if (!constant_ok || !unbounded_ok) rows_ok = false;
        rows.push_back(Json{{"k", k},
                            {"witness_indices", witness},
                            {"witness_values", std::move(values)},
                            {"constant", rat(Rational(k + 1))},
                            {"constant_ok", constant_ok},
                            {"row_one_indices", std::move(row_one_indices)},
                            {"row_one_values", std::move(row_one_values)},
                            {"row_one_unbounded", unbounded_ok}});
    }
    report["bounded_subsequences"] = Json{{"all_ok", rows_ok}, {"rows", std::move(rows)}};

    // locally bounded a.i. certificates: for each level the constructed
    // witness answers the fixed test family with exact defect 0 and norm
    // bound k+1 in that level's own seminorm
    std::vector<FinSeq> family;
    for (Index i = 1; i <= 10; ++i) family.push_back(FinSeq::basis(i));
    bool all_lbai = true;
    Json lbai_entries = Json::array();
    for (Index k = 1; k <= config.kmax; ++k) {
        const Weight& p = set.members[static_cast<std::size_t>(k - 1)];
        const FinSeq b = construct_lbai_element(family, k);
        const LbaiCheck check = check_lbai_witness(family, b, p, Rational(0), Rational(k + 1));
        if (!check.pass) all_lbai = false;
        lbai_entries.push_back(Json{{"k", k},
                                    {"weight", p.descriptor()},
                                    {"witness_index", leading_index(b)},
                                    {"bound", rat(Rational(k + 1))},
                                    {"check", Json(check)}});
    }
    report["lbai_certificates"] = Json{{"all_pass", all_lbai},
                                       {"test_family", "e_1..e_10"},
                                       {"eps", "0/1"},
                                       {"entries", std::move(lbai_entries)}};

    // the obstruction: mass delta = 1 pushed past diagonal D costs at least
    // min(D, D-1) = D-1 in some seminorm of the family, growing without end
    std::vector<Index> d_list;
    for (Index d = 3; d <= config.dmax; ++d) d_list.push_back(d);
    const lp::GrowthCertificate growth =
        lp::growth_certificate(Rational(1), d_list, [](Index d) { return d; });
    report["growth"] = Json(growth);

    report["verdicts"] = Json{{"family_legal", all_ge_one},
                              {"family_directed", directed.directed},
                              {"bounded_subsequence_rows", rows_ok},
                              {"locally_bounded_ai", all_lbai},
                              {"bounded_ai_obstruction", growth.pass},
                              {"overall", all_ge_one && directed.directed && rows_ok &&
                                              all_lbai && growth.pass}};
    return report;
}

} // namespace kothe
