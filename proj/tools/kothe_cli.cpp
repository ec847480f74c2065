#include "kothe/json_io.hpp"
#include "kothe/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using kothe::FinSeq;
using kothe::Index;
using kothe::Json;
using kothe::Rational;

Index parse_index(const std::string& raw) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(raw, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + raw + "'");
    }
    if (used != raw.size()) throw std::invalid_argument("not an integer: '" + raw + "'");
    return value;
}

Index env_horizon() {
    const char* raw = std::getenv("KOTHE_HORIZON");
    if (raw == nullptr || *raw == '\0') return 10000;
    const Index h = parse_index(raw);
    if (h < 1) throw std::invalid_argument("KOTHE_HORIZON must be a positive integer");
    return h;
}

FinSeq parse_fin_seq(const std::string& raw) { return Json::parse(raw).get<FinSeq>(); }

// either one sequence or a JSON array of them
std::vector<FinSeq> parse_test_family(const std::string& raw) {
    const Json j = Json::parse(raw);
    std::vector<FinSeq> family;
    const bool list_of_seqs =
        j.is_array() && !j.empty() && j[0].is_array() && (j[0].empty() || j[0][0].is_array());
    if (list_of_seqs) {
        for (const Json& entry : j) family.push_back(entry.get<FinSeq>());
    } else {
        family.push_back(j.get<FinSeq>());
    }
    return family;
}

std::vector<std::pair<std::string, Rational>> parse_bounds(const std::string& raw) {
    const Json j = Json::parse(raw);
    if (!j.is_object())
        throw std::invalid_argument("bounds must be a JSON object mapping weight specs to rationals");
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw std::invalid_argument("bounds values must be rational strings");
        out.emplace_back(kothe::parse_weight_spec(key).descriptor(),
                         kothe::rational_from_string(value.get<std::string>()));
    }
    return out;
}

std::vector<Index> parse_dlist(const std::string& raw) {
    const auto sep = raw.find("..");
    std::vector<Index> out;
    if (sep == std::string::npos) {
        out.push_back(parse_index(raw));
        return out;
    }
    const Index a = parse_index(raw.substr(0, sep));
    const Index b = parse_index(raw.substr(sep + 2));
    if (b < a) throw std::invalid_argument("diagonal range must be increasing");
    for (Index d = a; d <= b; ++d) out.push_back(d);
    return out;
}

Json rat(const Rational& q) { return Json(kothe::to_canonical_string(q)); }

struct Output {
    std::string path;

    void emit(const Json& j) const {
        std::string text = j.dump(2);
        text.push_back('\n');
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        file << text;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"exact certificates for the min-product Koethe algebra and its approximate identities"};
    app.require_subcommand(1);

    Output output;
    app.add_option("-o,--out", output.path, "write the JSON output to this file instead of stdout");

    const Index horizon = env_horizon();
    int rc = 0;

    auto* product = app.add_subcommand("product", "min-product of two sequences");
    product->fallthrough();
    struct {
        std::string a, b;
    } product_opts;
    product->add_option("--a", product_opts.a, "left factor, JSON [[index,\"num/den\"],...]")
        ->required();
    product->add_option("--b", product_opts.b, "right factor, same format")->required();
    product->callback([&] {
        const FinSeq a = parse_fin_seq(product_opts.a);
        const FinSeq b = parse_fin_seq(product_opts.b);
        output.emit(Json(kothe::min_product(a, b)));
    });

    auto* norm = app.add_subcommand("norm", "weighted l1 seminorm of a sequence");
    norm->fallthrough();
    struct {
        std::string a, weight;
    } norm_opts;
    norm->add_option("--a", norm_opts.a, "sequence, JSON [[index,\"num/den\"],...]")->required();
    norm->add_option("--weight", norm_opts.weight, "weight spec: const:<q> | list:<json>[;tail=<q>] | cex:<k>")
        ->required();
    norm->callback([&] {
        const FinSeq a = parse_fin_seq(norm_opts.a);
        const kothe::Weight p = kothe::parse_weight_spec(norm_opts.weight);
        output.emit(rat(kothe::seminorm(a, p)));
    });

    auto* cex = app.add_subcommand("cex", "the staircase weight family and its index bijection");
    cex->require_subcommand(1);
    cex->fallthrough();

    auto* cex_phi = cex->add_subcommand("phi", "diagonal enumeration index of (i, j)");
    cex_phi->fallthrough();
    struct {
        Index i = 0, j = 0;
    } phi_opts;
    cex_phi->add_option("--i", phi_opts.i)->required();
    cex_phi->add_option("--j", phi_opts.j)->required();
    cex_phi->callback([&] { output.emit(Json(kothe::phi(phi_opts.i, phi_opts.j))); });

    auto* cex_phi_inv = cex->add_subcommand("phi-inv", "pair (i, j) at enumeration index n");
    cex_phi_inv->fallthrough();
    Index phi_inv_n = 0;
    cex_phi_inv->add_option("--n", phi_inv_n)->required();
    cex_phi_inv->callback([&] {
        const auto [i, j] = kothe::phi_inv(phi_inv_n);
        output.emit(Json{{"i", i}, {"j", j}});
    });

    auto* cex_weight_cmd = cex->add_subcommand("weight", "p^(k) evaluated at index n");
    cex_weight_cmd->fallthrough();
    struct {
        Index k = 0, n = 0;
    } cw_opts;
    cex_weight_cmd->add_option("--k", cw_opts.k)->required();
    cex_weight_cmd->add_option("--n", cw_opts.n)->required();
    cex_weight_cmd->callback([&] { output.emit(rat(kothe::cex_weight(cw_opts.k)(cw_opts.n))); });

    auto* cex_prefix = cex->add_subcommand("weight-prefix", "first values of p^(k)");
    cex_prefix->fallthrough();
    struct {
        Index k = 0, len = 0;
    } prefix_opts;
    cex_prefix->add_option("--k", prefix_opts.k)->required();
    cex_prefix->add_option("--len", prefix_opts.len)->required();
    cex_prefix->callback([&] {
        Json values = Json::array();
        for (const Rational& v : kothe::cex_weight(prefix_opts.k).prefix(prefix_opts.len))
            values.push_back(rat(v));
        output.emit(values);
    });

    auto* cex_witness = cex->add_subcommand(
        "witness", "indices where p^(k) sits at the constant k+1");
    cex_witness->fallthrough();
    struct {
        Index k = 0, count = 0;
    } witness_opts;
    cex_witness->add_option("--k", witness_opts.k)->required();
    cex_witness->add_option("--count", witness_opts.count)->required();
    cex_witness->callback([&] {
        const std::vector<Index> indices =
            kothe::bounded_subsequence_witness(witness_opts.k, witness_opts.count);
        const kothe::Weight p = kothe::cex_weight(witness_opts.k);
        bool constant_ok = true;
        Json values = Json::array();
        for (Index n : indices) {
            const Rational v = p(n);
            if (v != witness_opts.k + 1) constant_ok = false;
            values.push_back(rat(v));
        }
        output.emit(Json{{"k", witness_opts.k},
                         {"count", witness_opts.count},
                         {"indices", indices},
                         {"values", std::move(values)},
                         {"constant", rat(Rational(witness_opts.k + 1))},
                         {"constant_ok", constant_ok},
                         {"phi_convention", kothe::kPhiConventionTag}});
    });

    auto* certify = app.add_subcommand("certify", "approximate-identity certificates");
    certify->require_subcommand(1);
    certify->fallthrough();
    struct {
        std::string family;
        std::string test = "[]";
        std::string eps = "0/1";
        std::string bounds;
        Index window = 0;
    } cert_opts;

    auto add_cert_common = [&](CLI::App* sub, bool with_bounds) {
        sub->fallthrough();
        sub->add_option("--family", cert_opts.family,
                        "weight family: JSON array of specs, or {\"weights\":[...],\"horizon\":N}")
            ->required();
        sub->add_option("--test", cert_opts.test,
                        "test element or JSON array of test elements (default: empty family)");
        sub->add_option("--eps", cert_opts.eps, "defect tolerance, closed inequality (default 0/1)");
        sub->add_option("--window", cert_opts.window,
                        "candidate search window (default: the family horizon)");
        if (with_bounds)
            sub->add_option("--bounds", cert_opts.bounds,
                            "JSON object mapping weight specs to declared norm bounds");
    };

    auto* certify_ai = certify->add_subcommand("ai", "plain approximate-identity witnesses");
    add_cert_common(certify_ai, false);
    certify_ai->callback([&] {
        const kothe::KotheSet set = kothe::parse_kothe_spec(cert_opts.family, horizon);
        const std::vector<FinSeq> family = parse_test_family(cert_opts.test);
        const Rational eps = kothe::rational_from_string(cert_opts.eps);
        const Index window = cert_opts.window > 0 ? cert_opts.window : set.horizon;
        bool all_found = true;
        Json entries = Json::array();
        for (const kothe::Weight& p : set.members) {
            bool found = false;
            Index witness = 0;
            Rational defect_max;
            for (Index n = 1; n <= window && !found; ++n) {
                const FinSeq cand = FinSeq::basis(n);
                Rational worst(0);
                bool ok = true;
                for (const FinSeq& a : family) {
                    const Rational d = kothe::ai_defect(a, cand, p);
                    if (d > worst) worst = d;
                    if (d > eps) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = true;
                    witness = n;
                    defect_max = worst;
                }
            }
            if (!found) all_found = false;
            entries.push_back(Json{{"weight", p.descriptor()},
                                   {"found", found},
                                   {"witness_index", found ? Json(witness) : Json(nullptr)},
                                   {"defect_max", found ? rat(defect_max) : Json(nullptr)}});
        }
        if (!all_found) rc = 3;
        output.emit(Json{{"command", "certify ai"},
                         {"family", Json(set)},
                         {"test", Json(family)},
                         {"eps", rat(eps)},
                         {"window", window},
                         {"pass", all_found},
                         {"entries", std::move(entries)}});
    });

    auto* certify_lbai =
        certify->add_subcommand("lbai", "per-seminorm bounded witnesses (same-norm bound only)");
    add_cert_common(certify_lbai, false);
    certify_lbai->callback([&] {
        const kothe::KotheSet set = kothe::parse_kothe_spec(cert_opts.family, horizon);
        const std::vector<FinSeq> family = parse_test_family(cert_opts.test);
        const Rational eps = kothe::rational_from_string(cert_opts.eps);
        const Index window = cert_opts.window > 0 ? cert_opts.window : set.horizon;
        const kothe::PerLevelReport report = kothe::per_level_report(set, family, eps, window);
        if (!report.all_found) rc = 3;
        output.emit(Json{{"command", "certify lbai"},
                         {"family", Json(set)},
                         {"test", Json(family)},
                         {"eps", rat(eps)},
                         {"pass", report.all_found},
                         {"report", Json(report)}});
    });

    auto* certify_bai =
        certify->add_subcommand("bai", "witnesses bounded in every seminorm simultaneously");
    add_cert_common(certify_bai, true);
    certify_bai->callback([&] {
        const kothe::KotheSet set = kothe::parse_kothe_spec(cert_opts.family, horizon);
        const std::vector<FinSeq> family = parse_test_family(cert_opts.test);
        const Rational eps = kothe::rational_from_string(cert_opts.eps);
        const Index window = cert_opts.window > 0 ? cert_opts.window : set.horizon;
        std::vector<Index> common;
        for (Index n = 1; n <= window; ++n) common.push_back(n);
        const kothe::BaiNetResult net = kothe::construct_bai_net(common, family, set);

        Json check_json(nullptr);
        Json bounds_json(nullptr);
        bool pass = false;
        if (!net.refused) {
            std::vector<std::pair<std::string, Rational>> bounds;
            std::string bounds_source;
            if (cert_opts.bounds.empty()) {
                for (const kothe::BaiNetWeightBound& b : net.bounds)
                    bounds.emplace_back(b.weight, b.observed_sup);
                bounds_source = "observed";
            } else {
                bounds = parse_bounds(cert_opts.bounds);
                bounds_source = "given";
            }
            std::vector<std::pair<std::string, Rational>> eps_per_weight;
            for (const kothe::Weight& p : set.members) eps_per_weight.emplace_back(p.descriptor(), eps);
            const kothe::BaiCheck check =
                kothe::check_bai_witness(family, net.candidate, set, eps_per_weight, bounds);
            pass = check.pass;
            check_json = Json(check);
            bounds_json = Json::object();
            bounds_json["source"] = bounds_source;
            Json map = Json::object();
            for (const auto& [weight, bound] : bounds) map[weight] = rat(bound);
            bounds_json["values"] = std::move(map);
        } else {
            rc = 3;
        }
        output.emit(Json{{"command", "certify bai"},
                         {"family", Json(set)},
                         {"test", Json(family)},
                         {"eps", rat(eps)},
                         {"net", Json(net)},
                         {"bounds", std::move(bounds_json)},
                         {"check", std::move(check_json)},
                         {"pass", pass}});
    });

    auto* lp_bound = app.add_subcommand("lp-bound", "exact minimax lower bound past a support floor");
    lp_bound->fallthrough();
    struct {
        std::string delta;
        Index diagonal = 0;
        Index dmax = 0;
        Index floor = 0;
        Index max_index = 0;
        Index kmax = 0;
    } lp_opts;
    lp_bound->add_option("--delta", lp_opts.delta, "mass floor, positive rational")->required();
    auto* diag_opt = lp_bound->add_option("--diagonal", lp_opts.diagonal,
                                          "support constraint i+j >= D (window covers D..dmax)");
    lp_bound->add_option("--dmax", lp_opts.dmax, "last diagonal in the window (default D+3)")
        ->needs(diag_opt);
    auto* floor_opt = lp_bound->add_option("--floor", lp_opts.floor,
                                           "raw index floor m (window covers [m, max-index])");
    lp_bound->add_option("--max-index", lp_opts.max_index,
                         "last index in the window (default m+199)")
        ->needs(floor_opt);
    diag_opt->excludes(floor_opt);
    lp_bound->add_option("--kmax", lp_opts.kmax, "weights p^(1)..p^(K)")->required();
    lp_bound->callback([&] {
        const Rational delta = kothe::rational_from_string(lp_opts.delta);
        kothe::lp::LowerBoundInstance inst;
        if (lp_opts.diagonal > 0) {
            const Index dmax = lp_opts.dmax > 0 ? lp_opts.dmax : lp_opts.diagonal + 3;
            inst = kothe::lp::diagonal_instance(delta, lp_opts.diagonal, dmax, lp_opts.kmax);
        } else if (lp_opts.floor > 0) {
            const Index top = lp_opts.max_index > 0 ? lp_opts.max_index : lp_opts.floor + 199;
            inst = kothe::lp::index_instance(delta, lp_opts.floor, top, lp_opts.kmax);
        } else {
            throw std::invalid_argument("one of --diagonal or --floor is required");
        }
        const kothe::lp::LowerBoundCertificate cert = kothe::lp::solve_minimax(std::move(inst));
        if (!cert.window_sound) rc = 3;
        output.emit(Json(cert));
    });

    auto* lp_sweep = app.add_subcommand("lp-sweep", "lower-bound growth across diagonals");
    lp_sweep->fallthrough();
    struct {
        std::string delta;
        std::string dlist;
        std::string krule = "D";
    } sweep_opts;
    lp_sweep->add_option("--delta", sweep_opts.delta, "mass floor, positive rational")->required();
    lp_sweep->add_option("--dlist", sweep_opts.dlist, "diagonals, e.g. 3..12")->required();
    lp_sweep->add_option("--krule", sweep_opts.krule, "K per diagonal: D (match) or const:<K>");
    lp_sweep->callback([&] {
        const Rational delta = kothe::rational_from_string(sweep_opts.delta);
        const std::vector<Index> d_list = parse_dlist(sweep_opts.dlist);
        std::function<Index(Index)> k_rule;
        if (sweep_opts.krule == "D") {
            k_rule = [](Index d) { return d; };
        } else if (sweep_opts.krule.rfind("const:", 0) == 0) {
            const Index k = parse_index(sweep_opts.krule.substr(6));
            k_rule = [k](Index) { return k; };
        } else {
            throw std::invalid_argument("krule must be D or const:<K>");
        }
        output.emit(Json(kothe::lp::growth_certificate(delta, d_list, k_rule)));
    });

    auto* bv0 = app.add_subcommand("bv0", "the suffix-sum transform onto the bv0 model");
    bv0->require_subcommand(1);
    bv0->fallthrough();

    auto* bv0_to = bv0->add_subcommand("to", "suffix-sum image of a sequence");
    bv0_to->fallthrough();
    std::string bv0_to_x;
    bv0_to->add_option("--x", bv0_to_x, "sequence, JSON [[index,\"num/den\"],...]")->required();
    bv0_to->callback([&] { output.emit(Json(kothe::to_bv0(parse_fin_seq(bv0_to_x)))); });

    auto* bv0_from = bv0->add_subcommand("from", "difference transform back from the image side");
    bv0_from->fallthrough();
    std::string bv0_from_x;
    bv0_from->add_option("--x", bv0_from_x, "image-side sequence, same format")->required();
    bv0_from->callback([&] {
        const kothe::BvSeq x = Json::parse(bv0_from_x).get<kothe::BvSeq>();
        output.emit(Json(kothe::from_bv0(x)));
    });

    auto* bv0_check = bv0->add_subcommand("check", "transform multiplicativity on a pair");
    bv0_check->fallthrough();
    struct {
        std::string a, b;
    } bv0_check_opts;
    bv0_check->add_option("--a", bv0_check_opts.a)->required();
    bv0_check->add_option("--b", bv0_check_opts.b)->required();
    bv0_check->callback([&] {
        const FinSeq a = parse_fin_seq(bv0_check_opts.a);
        const FinSeq b = parse_fin_seq(bv0_check_opts.b);
        const kothe::MultiplicativityCheck check = kothe::check_multiplicative(a, b);
        output.emit(Json{{"ok", check.ok},
                         {"image_of_product", Json(check.image_of_product)},
                         {"product_of_images", Json(check.product_of_images)}});
    });

    auto* reproduce = app.add_subcommand(
        "reproduce-counterexample",
        "end-to-end record: directed family, bounded rows, lbai certificates, growth sweep");
    reproduce->fallthrough();
    kothe::ReproduceConfig config;
    config.horizon = horizon;
    reproduce->add_option("--kmax", config.kmax, "weights p^(1)..p^(kmax)")
        ->capture_default_str();
    reproduce->add_option("--dmax", config.dmax, "last diagonal of the growth sweep")
        ->capture_default_str();
    reproduce->add_option("--horizon", config.horizon, "finite-check horizon")
        ->capture_default_str();
    reproduce->callback([&] { output.emit(kothe::reproduce_counterexample(config)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
