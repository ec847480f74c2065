#pragma once

#include "kothe/counterexample.hpp"
#include "kothe/weight.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kothe {

// Approximate-identity certification. A witness request is a finite test
// family F, a weight, and an eps; a candidate b answers it when
// ||a - ab||_p <= eps for all a in F. The bounded flavors differ in where the
// norm bound on b lives: a locally bounded witness needs ||b||_p <= C_p in
// the SAME seminorm only, a bounded witness needs ||b||_mu <= C_mu across the
// whole family simultaneously.
//
// Defect comparisons are closed (<= eps) so eps = 0 expresses exact
// identities.

// ||a - ab||_p, exact.
Rational ai_defect(const FinSeq& a, const FinSeq& b, const Weight& p);

// Closed form of ai_defect(a, e_n, p):
//   p_n * |sum_{i>n} a_i| + sum_{i>n} p_i |a_i|.
// Vanishes exactly once n >= max supp(a).
Rational tail_defect_formula(const FinSeq& a, Index n, const Weight& p);

struct AiCheck {
    bool pass = true;
    std::vector<Rational> defects; // one per family element, in order
    std::optional<std::size_t> first_failure;
};

// Pass iff ai_defect(a, b, p) <= eps for every a in the family. Empty
// families pass vacuously. Requires eps >= 0.
AiCheck check_ai_witness(const std::vector<FinSeq>& family, const FinSeq& b, const Weight& p,
                         const Rational& eps);

struct LbaiCheck {
    AiCheck defects;
    Rational candidate_norm;
    bool norm_ok = false;
    bool pass = false;
};

// check_ai_witness plus the same-seminorm bound ||b||_p <= bound.
// Requires eps >= 0 and bound > 0.
LbaiCheck check_lbai_witness(const std::vector<FinSeq>& family, const FinSeq& b, const Weight& p,
                             const Rational& eps, const Rational& bound);

struct BaiDefectCheck {
    std::string weight;
    Rational eps;
    Rational defect_max;
    bool ok = false;
};

struct BaiBoundCheck {
    std::string weight;
    Rational norm;
    Rational bound;
    bool ok = false;
};

struct BaiCheck {
    std::vector<BaiDefectCheck> defect_checks;
    std::vector<BaiBoundCheck> bound_checks;
    bool pass = false;
};

// Designated defect requirements are (weight descriptor, eps) pairs; the
// bound family must cover every member of the set (missing bound -> throws
// std::invalid_argument, as does a designated descriptor not in the set).
BaiCheck check_bai_witness(const std::vector<FinSeq>& family, const FinSeq& b, const KotheSet& set,
                           const std::vector<std::pair<std::string, Rational>>& eps_per_weight,
                           const std::vector<std::pair<std::string, Rational>>& bounds);

// e_n with n = phi(k+1, j) for the smallest j pushing n past every support
// index in the family. The witness has exact defect 0 against cex_weight(k)
// and norm exactly k+1, independent of the family.
FinSeq construct_lbai_element(const std::vector<FinSeq>& family, Index k);

struct BaiNetWeightBound {
    std::string weight;
    Rational observed_sup; // max of the weight over the common indices (<= horizon)
    Index attained_at = 0;
    // the running max was still growing at the last usable index; the
    // observed sup is then a record of growth, not a certificate bound
    bool sup_at_end = false;
};

struct BaiNetResult {
    bool refused = false;
    std::string refusal_reason;
    FinSeq candidate;
    Index candidate_index = 0;
    std::vector<BaiNetWeightBound> bounds;
};

// Picks b = e_n with n the first common index past all supports in the
// family; bounds are the observed suprema of each member weight over the
// common indices up to the set's horizon. Refuses when no common index
// clears the supports.
BaiNetResult construct_bai_net(const std::vector<Index>& common_indices,
                               const std::vector<FinSeq>& family, const KotheSet& set);

struct PerLevelEntry {
    std::string weight;
    bool found = false;
    Index witness = 0;      // b = e_witness
    Rational bound;         // ||e_witness||_p, minimal over the window
    Rational defect_max;
};

struct PerLevelReport {
    std::vector<PerLevelEntry> levels;
    bool all_found = true;
    Index window = 0;
};

// Single-seminorm bounded witnesses, one per member weight: exhaustive scan
// of candidates e_n, n <= window, keeping the feasible candidate of least
// norm. This is the per-level face of the locally-bounded condition.
PerLevelReport per_level_report(const KotheSet& set, const std::vector<FinSeq>& family,
                                const Rational& eps, Index window);

} // namespace kothe
