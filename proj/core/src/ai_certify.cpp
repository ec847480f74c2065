#include "kothe/ai_certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace kothe {

namespace {

void require_nonnegative_eps(const Rational& eps) {
    if (eps < 0) throw std::invalid_argument("eps must be >= 0");
}

Index max_support(const std::vector<FinSeq>& family) {
    Index m = 0;
    for (const auto& a : family) m = std::max(m, a.max_index());
    return m;
}

const Rational* lookup(const std::vector<std::pair<std::string, Rational>>& table,
                       const std::string& key) {
    for (const auto& [name, value] : table) {
        if (name == key) return &value;
    }
    return nullptr;
}

} // namespace

Rational ai_defect(const FinSeq& a, const FinSeq& b, const Weight& p) {
    return seminorm(a - min_product(a, b), p);
}

Rational tail_defect_formula(const FinSeq& a, Index n, const Weight& p) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Rational spill = suffix_sum(a, n + 1); // mass of a beyond n, collapsed onto e_n
    Rational total = p(n) * abs(spill);
    const auto& terms = a.terms();
    auto it = std::lower_bound(terms.begin(), terms.end(), n + 1,
                               [](const FinSeq::Term& t, Index v) { return t.first < v; });
    for (; it != terms.end(); ++it) total += p(it->first) * abs(it->second);
    return total;
}

AiCheck check_ai_witness(const std::vector<FinSeq>& family, const FinSeq& b, const Weight& p,
                         const Rational& eps) {
    require_nonnegative_eps(eps);
    AiCheck check;
    check.defects.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        Rational defect = ai_defect(family[i], b, p);
        if (defect > eps && check.pass) {
            check.pass = false;
            check.first_failure = i;
        }
        check.defects.push_back(std::move(defect));
    }
    return check;
}

LbaiCheck check_lbai_witness(const std::vector<FinSeq>& family, const FinSeq& b, const Weight& p,
                             const Rational& eps, const Rational& bound) {
    if (bound <= 0) throw std::invalid_argument("bound must be > 0");
    LbaiCheck check;
    check.defects = check_ai_witness(family, b, p, eps);
    check.candidate_norm = seminorm(b, p);
    check.norm_ok = check.candidate_norm <= bound;
    check.pass = check.defects.pass && check.norm_ok;
    return check;
}

BaiCheck check_bai_witness(const std::vector<FinSeq>& family, const FinSeq& b, const KotheSet& set,
                           const std::vector<std::pair<std::string, Rational>>& eps_per_weight,
                           const std::vector<std::pair<std::string, Rational>>& bounds) {
    BaiCheck check;
    check.pass = true;
    for (const auto& [desc, eps] : eps_per_weight) {
        require_nonnegative_eps(eps);
        const Weight* weight = nullptr;
        for (const auto& member : set.members) {
            if (member.descriptor() == desc) {
                weight = &member;
                break;
            }
        }
        if (weight == nullptr) {
            throw std::invalid_argument("designated eps-weight '" + desc + "' is not in the family");
        }
        BaiDefectCheck dc;
        dc.weight = desc;
        dc.eps = eps;
        dc.defect_max = Rational(0);
        for (const auto& a : family) {
            dc.defect_max = std::max(dc.defect_max, ai_defect(a, b, *weight));
        }
        dc.ok = dc.defect_max <= eps;
        check.pass = check.pass && dc.ok;
        check.defect_checks.push_back(std::move(dc));
    }
    for (const auto& member : set.members) {
        const Rational* bound = lookup(bounds, member.descriptor());
        if (bound == nullptr) {
            throw std::invalid_argument("missing bound for member weight '" + member.descriptor() + "'");
        }
        BaiBoundCheck bc;
        bc.weight = member.descriptor();
        bc.norm = seminorm(b, member);
        bc.bound = *bound;
        bc.ok = bc.norm <= bc.bound;
        check.pass = check.pass && bc.ok;
        check.bound_checks.push_back(std::move(bc));
    }
    return check;
}

FinSeq construct_lbai_element(const std::vector<FinSeq>& family, Index k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    Index support_top = max_support(family);
    for (Index j = 1;; ++j) {
        Index n = phi(k + 1, j);
        if (n > support_top) return FinSeq::basis(n);
    }
}

BaiNetResult construct_bai_net(const std::vector<Index>& common_indices,
                               const std::vector<FinSeq>& family, const KotheSet& set) {
    for (std::size_t i = 1; i < common_indices.size(); ++i) {
        if (common_indices[i] <= common_indices[i - 1]) {
            throw std::invalid_argument("common indices must be strictly increasing");
        }
    }
    BaiNetResult result;
    Index support_top = max_support(family);
    Index chosen = 0;
    for (Index n : common_indices) {
        if (n > support_top && n <= set.horizon) {
            chosen = n;
            break;
        }
    }
    if (chosen == 0) {
        result.refused = true;
        result.refusal_reason = "no common index beyond the family supports within horizon " +
                                std::to_string(set.horizon);
        return result;
    }
    result.candidate = FinSeq::basis(chosen);
    result.candidate_index = chosen;
    for (const auto& member : set.members) {
        BaiNetWeightBound bound;
        bound.weight = member.descriptor();
        Index last_usable = 0;
        std::size_t usable = 0;
        for (Index n : common_indices) {
            if (n > set.horizon) break;
            last_usable = n;
            ++usable;
            Rational value = member(n);
            if (bound.attained_at == 0 || value > bound.observed_sup) {
                bound.observed_sup = std::move(value);
                bound.attained_at = n;
            }
        }
        bound.sup_at_end = bound.attained_at == last_usable && usable > 1;
        result.bounds.push_back(std::move(bound));
    }
    return result;
}

PerLevelReport per_level_report(const KotheSet& set, const std::vector<FinSeq>& family,
                                const Rational& eps, Index window) {
    require_nonnegative_eps(eps);
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    PerLevelReport report;
    report.window = window;
    for (const auto& member : set.members) {
        PerLevelEntry entry;
        entry.weight = member.descriptor();
        for (Index n = 1; n <= window; ++n) {
            Rational defect_max(0);
            bool feasible = true;
            for (const auto& a : family) {
                Rational defect = tail_defect_formula(a, n, member);
                if (defect > eps) {
                    feasible = false;
                    break;
                }
                defect_max = std::max(defect_max, defect);
            }
            if (!feasible) continue;
            Rational norm = member(n);
            if (!entry.found || norm < entry.bound) {
                entry.found = true;
                entry.witness = n;
                entry.bound = std::move(norm);
                entry.defect_max = std::move(defect_max);
            }
        }
        report.all_found = report.all_found && entry.found;
        report.levels.push_back(std::move(entry));
    }
    return report;
}

} // namespace kothe
