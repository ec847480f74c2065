#include "kothe/weight.hpp"

#include "kothe/counterexample.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kothe {

Weight::Weight(std::string descriptor, std::function<Rational(Index)> eval)
    : impl_(std::make_shared<Impl>(Impl{std::move(descriptor), std::move(eval)})) {}

Weight Weight::constant(const Rational& value) {
    return Weight("const:" + to_canonical_string(value), [value](Index) { return value; });
}

Weight Weight::from_list(std::vector<Rational> head, Rational tail) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : head) arr.push_back(to_canonical_string(v));
    std::string desc = "list:" + arr.dump() + ";tail=" + to_canonical_string(tail);
    auto values = std::make_shared<const std::vector<Rational>>(std::move(head));
    return Weight(std::move(desc), [values, tail](Index i) {
        return i <= static_cast<Index>(values->size()) ? (*values)[static_cast<std::size_t>(i - 1)] : tail;
    });
}

Rational Weight::operator()(Index i) const {
    if (i < 1) {
        throw std::invalid_argument("weight index must be >= 1, got " + std::to_string(i));
    }
    return impl_->eval(i);
}

std::vector<Rational> Weight::prefix(Index len) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(len));
    for (Index i = 1; i <= len; ++i) out.push_back((*this)(i));
    return out;
}

Rational seminorm(const FinSeq& a, const Weight& p) {
    Rational total(0);
    for (const auto& [idx, val] : a.terms()) total += abs(val) * p(idx);
    return total;
}

std::optional<Index> check_ge_one(const Weight& p, Index horizon) {
    for (Index i = 1; i <= horizon; ++i) {
        if (p(i) < 1) return i;
    }
    return std::nullopt;
}

WeightOrder compare_weights(const Weight& p, const Weight& q, Index horizon) {
    bool p_leq = true;
    bool q_leq = true;
    for (Index i = 1; i <= horizon && (p_leq || q_leq); ++i) {
        Rational pi = p(i);
        Rational qi = q(i);
        if (pi > qi) p_leq = false;
        if (qi > pi) q_leq = false;
    }
    if (p_leq && q_leq) return WeightOrder::Equal;
    if (p_leq) return WeightOrder::LeftLeq;
    if (q_leq) return WeightOrder::RightLeq;
    return WeightOrder::Incomparable;
}

namespace {

// First index <= horizon where r < max(p, q), or nullopt if r majorizes.
std::optional<Index> first_majorant_failure(const Weight& r, const Weight& p, const Weight& q,
                                            Index horizon) {
    for (Index i = 1; i <= horizon; ++i) {
        Rational bound = std::max(p(i), q(i));
        if (r(i) < bound) return i;
    }
    return std::nullopt;
}

} // namespace

DirectednessReport check_directed(const KotheSet& set) {
    if (set.members.empty()) {
        throw std::invalid_argument("directedness check requires a nonempty family");
    }
    DirectednessReport report;
    report.horizon = set.horizon;
    for (std::size_t a = 0; a < set.members.size(); ++a) {
        for (std::size_t b = a + 1; b < set.members.size(); ++b) {
            DirectednessPair pair;
            pair.left = a;
            pair.right = b;
            std::vector<std::pair<std::size_t, Index>> failures;
            for (std::size_t r = 0; r < set.members.size(); ++r) {
                auto bad = first_majorant_failure(set.members[r], set.members[a], set.members[b],
                                                  set.horizon);
                if (!bad) {
                    pair.witness = r;
                    break;
                }
                failures.emplace_back(r, *bad);
            }
            if (!pair.witness) {
                pair.first_bad = std::move(failures);
                report.directed = false;
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

Weight parse_weight_spec(const std::string& spec) {
    if (spec.rfind("const:", 0) == 0) {
        return Weight::constant(rational_from_string(spec.substr(6)));
    }
    if (spec.rfind("cex:", 0) == 0) {
        std::string arg = spec.substr(4);
        // tolerate the long form "cex:k=3"
        if (arg.rfind("k=", 0) == 0) arg = arg.substr(2);
        std::size_t pos = 0;
        long long k;
        try {
            k = std::stoll(arg, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed weight spec: '" + spec + "'");
        }
        if (pos != arg.size() || k < 1) {
            throw std::invalid_argument("malformed weight spec: '" + spec + "'");
        }
        return cex_weight(k);
    }
    if (spec.rfind("list:", 0) == 0) {
        std::string body = spec.substr(5);
        Rational tail(1);
        if (auto sep = body.rfind(";tail="); sep != std::string::npos) {
            tail = rational_from_string(body.substr(sep + 6));
            body = body.substr(0, sep);
        }
        nlohmann::json arr;
        try {
            arr = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception&) {
            throw std::invalid_argument("malformed weight spec: '" + spec + "'");
        }
        if (!arr.is_array()) {
            throw std::invalid_argument("list weight body must be a JSON array: '" + spec + "'");
        }
        std::vector<Rational> head;
        head.reserve(arr.size());
        for (const auto& item : arr) {
            if (item.is_string()) {
                head.push_back(rational_from_string(item.get<std::string>()));
            } else if (item.is_number_integer()) {
                head.push_back(Rational(Int(item.get<long long>())));
            } else {
                throw std::invalid_argument("list weight entries must be rational strings or integers");
            }
        }
        return Weight::from_list(std::move(head), std::move(tail));
    }
    throw std::invalid_argument("unknown weight spec: '" + spec + "'");
}

KotheSet parse_kothe_spec(const std::string& spec, Index default_horizon) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed family spec: ") + e.what());
    }
    KotheSet set;
    set.horizon = default_horizon;
    const nlohmann::json* weights = &doc;
    if (doc.is_object()) {
        if (!doc.contains("weights")) {
            throw std::invalid_argument("family spec object requires a \"weights\" array");
        }
        weights = &doc["weights"];
        if (doc.contains("horizon")) {
            if (!doc["horizon"].is_number_integer() || doc["horizon"].get<long long>() < 1) {
                throw std::invalid_argument("family horizon must be a positive integer");
            }
            set.horizon = doc["horizon"].get<Index>();
        }
    }
    if (!weights->is_array() || weights->empty()) {
        throw std::invalid_argument("family spec requires a nonempty array of weight specs");
    }
    for (const auto& item : *weights) {
        if (!item.is_string()) {
            throw std::invalid_argument("weight specs must be strings");
        }
        set.members.push_back(parse_weight_spec(item.get<std::string>()));
    }
    return set;
}

} // namespace kothe
