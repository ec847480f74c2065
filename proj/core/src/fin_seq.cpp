#include "kothe/fin_seq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kothe {

FinSeq FinSeq::basis(Index i) {
    if (i < 1) {
        throw std::invalid_argument("basis index must be >= 1, got " + std::to_string(i));
    }
    return FinSeq(Trusted{}, {{i, Rational(1)}});
}

FinSeq FinSeq::from_terms(std::vector<Term> terms) {
    std::map<Index, Rational> acc;
    for (auto& [idx, coef] : terms) {
        if (idx < 1) {
            throw std::invalid_argument("sequence index must be >= 1, got " + std::to_string(idx));
        }
        acc[idx] += coef;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [idx, coef] : acc) {
        if (coef != 0) out.emplace_back(idx, std::move(coef));
    }
    return FinSeq(Trusted{}, std::move(out));
}

Rational FinSeq::coeff(Index i) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                               [](const Term& t, Index v) { return t.first < v; });
    if (it != terms_.end() && it->first == i) return it->second;
    return Rational(0);
}

FinSeq FinSeq::operator+(const FinSeq& other) const {
    return lin_comb({{Rational(1), *this}, {Rational(1), other}});
}

FinSeq FinSeq::operator-(const FinSeq& other) const {
    return lin_comb({{Rational(1), *this}, {Rational(-1), other}});
}

FinSeq FinSeq::operator-() const { return scale(Rational(-1), *this); }

FinSeq lin_comb(const std::vector<std::pair<Rational, FinSeq>>& terms) {
    std::map<Index, Rational> acc;
    for (const auto& [coef, seq] : terms) {
        if (coef == 0) continue;
        for (const auto& [idx, val] : seq.terms()) {
            acc[idx] += coef * val;
        }
    }
    std::vector<FinSeq::Term> out;
    out.reserve(acc.size());
    for (auto& [idx, val] : acc) {
        if (val != 0) out.emplace_back(idx, std::move(val));
    }
    return FinSeq(FinSeq::Trusted{}, std::move(out));
}

FinSeq scale(const Rational& c, const FinSeq& a) {
    if (c == 0) return FinSeq();
    std::vector<FinSeq::Term> out;
    out.reserve(a.terms().size());
    for (const auto& [idx, val] : a.terms()) {
        out.emplace_back(idx, c * val);
    }
    return FinSeq(FinSeq::Trusted{}, std::move(out));
}

FinSeq min_product(const FinSeq& a, const FinSeq& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<FinSeq::Term> out; // built in descending index order
    Rational tail_a(0), tail_b(0); // sums over indices strictly above the cursor
    auto ia = ta.rbegin();
    auto ib = tb.rbegin();
    while (ia != ta.rend() || ib != tb.rend()) {
        Index k;
        if (ia == ta.rend()) {
            k = ib->first;
        } else if (ib == tb.rend()) {
            k = ia->first;
        } else {
            k = std::max(ia->first, ib->first);
        }
        Rational ak(0), bk(0);
        if (ia != ta.rend() && ia->first == k) {
            ak = ia->second;
            ++ia;
        }
        if (ib != tb.rend() && ib->first == k) {
            bk = ib->second;
            ++ib;
        }
        Rational ck = ak * bk + ak * tail_b + bk * tail_a;
        if (ck != 0) out.emplace_back(k, std::move(ck));
        tail_a += ak;
        tail_b += bk;
    }
    std::reverse(out.begin(), out.end());
    return FinSeq(FinSeq::Trusted{}, std::move(out));
}

FinSeq brute_product(const FinSeq& a, const FinSeq& b) {
    std::map<Index, Rational> acc;
    for (const auto& [i, ai] : a.terms()) {
        for (const auto& [j, bj] : b.terms()) {
            acc[std::min(i, j)] += ai * bj;
        }
    }
    std::vector<FinSeq::Term> terms;
    terms.reserve(acc.size());
    for (auto& [idx, val] : acc) terms.emplace_back(idx, std::move(val));
    return FinSeq::from_terms(std::move(terms));
}

Rational weight_of(const FinSeq& a) {
    Rational total(0);
    for (const auto& [idx, val] : a.terms()) total += abs(val);
    return total;
}

Index leading_index(const FinSeq& a) {
    if (a.is_zero()) {
        throw std::domain_error("leading index is undefined for the zero sequence");
    }
    return a.terms().front().first;
}

Rational suffix_sum(const FinSeq& a, Index k) {
    Rational total(0);
    const auto& terms = a.terms();
    auto it = std::lower_bound(terms.begin(), terms.end(), k,
                               [](const FinSeq::Term& t, Index v) { return t.first < v; });
    for (; it != terms.end(); ++it) total += it->second;
    return total;
}

UnitalElement unital_identity() { return {Rational(1), FinSeq()}; }

UnitalElement embed(FinSeq a) { return {Rational(0), std::move(a)}; }

UnitalElement unital_product(const UnitalElement& x, const UnitalElement& y) {
    FinSeq part = lin_comb({{x.scalar, y.part}, {y.scalar, x.part}, {Rational(1), min_product(x.part, y.part)}});
    return {x.scalar * y.scalar, std::move(part)};
}

} // namespace kothe
