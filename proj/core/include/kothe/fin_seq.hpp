#pragma once

#include "kothe/rational.hpp"

#include <utility>
#include <vector>

namespace kothe {

// Finitely supported sequence of exact rationals indexed from 1, the element
// type of the min-product algebra: the product extends e_i * e_j = e_min(i,j)
// bilinearly. Terms are kept sorted by index with no stored zeros, so
// operator== is coefficientwise equality.
class FinSeq {
public:
    using Term = std::pair<Index, Rational>;

    FinSeq() = default;

    // e_i: coefficient 1 at index i. Throws std::invalid_argument if i < 1.
    static FinSeq basis(Index i);

    // Canonicalizes: merges duplicate indices, drops zero coefficients.
    // Throws std::invalid_argument on an index < 1.
    static FinSeq from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    Rational coeff(Index i) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    // Largest support index; 0 for the zero sequence.
    Index max_index() const { return terms_.empty() ? 0 : terms_.back().first; }

    bool operator==(const FinSeq&) const = default;

    FinSeq operator+(const FinSeq& other) const;
    FinSeq operator-(const FinSeq& other) const;
    FinSeq operator-() const;

private:
    struct Trusted {};
    FinSeq(Trusted, std::vector<Term> sorted) : terms_(std::move(sorted)) {}

    std::vector<Term> terms_;

    friend FinSeq lin_comb(const std::vector<std::pair<Rational, FinSeq>>&);
    friend FinSeq min_product(const FinSeq&, const FinSeq&);
    friend FinSeq scale(const Rational&, const FinSeq&);
};

FinSeq lin_comb(const std::vector<std::pair<Rational, FinSeq>>& terms);
FinSeq scale(const Rational& c, const FinSeq& a);

// One-pass closed form over the union of supports:
//   (ab)_k = a_k b_k + a_k S_{>k}(b) + b_k S_{>k}(a),  S_{>k}(x) = sum_{j>k} x_j.
FinSeq min_product(const FinSeq& a, const FinSeq& b);

// Reference oracle: sum a_i b_j e_min(i,j) over all support pairs. Kept
// independent of min_product so the two routes can be checked against each
// other.
FinSeq brute_product(const FinSeq& a, const FinSeq& b);

// w(a) = sum_i |a_i|.
Rational weight_of(const FinSeq& a);

// Smallest support index. Throws std::domain_error on the zero sequence.
Index leading_index(const FinSeq& a);

// S_k(a) = sum_{j >= k} a_j.
Rational suffix_sum(const FinSeq& a, Index k);

// Element of the unitization: scalar * 1 + part, with
// (s,a)(t,b) = (st, sb + ta + ab).
struct UnitalElement {
    Rational scalar;
    FinSeq part;

    bool operator==(const UnitalElement&) const = default;
};

UnitalElement unital_identity();
UnitalElement embed(FinSeq a);
UnitalElement unital_product(const UnitalElement& x, const UnitalElement& y);

} // namespace kothe
