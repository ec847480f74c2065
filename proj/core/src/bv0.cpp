#include "kothe/bv0.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kothe {

BvSeq BvSeq::from_terms(std::vector<Term> terms) {
    std::map<Index, Rational> acc;
    for (auto& [idx, coef] : terms) {
        if (idx < 1) {
            throw std::invalid_argument("sequence index must be >= 1, got " + std::to_string(idx));
        }
        acc[idx] += coef;
    }
    BvSeq out;
    out.terms_.reserve(acc.size());
    for (auto& [idx, coef] : acc) {
        if (coef != 0) out.terms_.emplace_back(idx, std::move(coef));
    }
    return out;
}

Rational BvSeq::coeff(Index i) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                               [](const Term& t, Index v) { return t.first < v; });
    if (it != terms_.end() && it->first == i) return it->second;
    return Rational(0);
}

BvSeq to_bv0(const FinSeq& a) {
    std::vector<BvSeq::Term> out;
    Rational running(0); // suffix sum from the top down
    Index upper = a.max_index();
    const auto& terms = a.terms();
    auto it = terms.rbegin();
    for (Index k = upper; k >= 1; --k) {
        if (it != terms.rend() && it->first == k) {
            running += it->second;
            ++it;
        }
        if (running != 0) out.emplace_back(k, running);
    }
    std::reverse(out.begin(), out.end());
    return BvSeq::from_terms(std::move(out));
}

FinSeq from_bv0(const BvSeq& x) {
    std::vector<FinSeq::Term> out;
    for (const auto& [idx, val] : x.terms()) {
        out.emplace_back(idx, val - x.coeff(idx + 1));
        if (idx > 1 && x.coeff(idx - 1) == 0) {
            out.emplace_back(idx - 1, -val);
        }
    }
    return FinSeq::from_terms(std::move(out));
}

Rational bv_norm(const BvSeq& x) {
    // x_k - x_{k+1} is nonzero only when k or k+1 carries an entry
    Rational total(0);
    Index prev = 0; // last k already accounted for
    for (const auto& [idx, val] : x.terms()) {
        if (idx - 1 >= 1 && idx - 1 > prev) {
            total += abs(x.coeff(idx - 1) - val);
            prev = idx - 1;
        }
        if (idx > prev) {
            total += abs(val - x.coeff(idx + 1));
            prev = idx;
        }
    }
    return total;
}

BvSeq pointwise_product(const BvSeq& x, const BvSeq& y) {
    std::vector<BvSeq::Term> out;
    auto ix = x.terms().begin();
    auto iy = y.terms().begin();
    while (ix != x.terms().end() && iy != y.terms().end()) {
        if (ix->first < iy->first) {
            ++ix;
        } else if (iy->first < ix->first) {
            ++iy;
        } else {
            out.emplace_back(ix->first, ix->second * iy->second);
            ++ix;
            ++iy;
        }
    }
    return BvSeq::from_terms(std::move(out));
}

MultiplicativityCheck check_multiplicative(const FinSeq& a, const FinSeq& b) {
    MultiplicativityCheck check;
    check.image_of_product = to_bv0(min_product(a, b));
    check.product_of_images = pointwise_product(to_bv0(a), to_bv0(b));
    check.ok = check.image_of_product == check.product_of_images;
    return check;
}

} // namespace kothe
