#pragma once

#include "kothe/fin_seq.hpp"

#include <utility>
#include <vector>

namespace kothe {

// Finitely supported sequence on the image side of the suffix-sum transform,
// where multiplication is coordinatewise. Canonical sparse form, same
// conventions as FinSeq.
class BvSeq {
public:
    using Term = std::pair<Index, Rational>;

    BvSeq() = default;
    static BvSeq from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    Rational coeff(Index i) const;
    bool is_zero() const { return terms_.empty(); }
    Index max_index() const { return terms_.empty() ? 0 : terms_.back().first; }

    bool operator==(const BvSeq&) const = default;

private:
    std::vector<Term> terms_;
};

// (T a)_k = sum_{i >= k} a_i. Sends e_n to the step sequence 1,...,1 (n ones).
BvSeq to_bv0(const FinSeq& a);

// a_k = x_k - x_{k+1}; two-sided inverse of to_bv0 on finitely supported
// sequences.
FinSeq from_bv0(const BvSeq& x);

// Total variation sum_k |x_k - x_{k+1}|; finite since x is finitely
// supported and the tail vanishes.
Rational bv_norm(const BvSeq& x);

BvSeq pointwise_product(const BvSeq& x, const BvSeq& y);

struct MultiplicativityCheck {
    bool ok = false;
    BvSeq image_of_product;  // T(a * b)
    BvSeq product_of_images; // T(a) . T(b) coordinatewise
};

// T intertwines the min-product with the coordinatewise product; this is the
// telescoping identity S_k(ab) = S_k(a) S_k(b) checked coefficientwise.
MultiplicativityCheck check_multiplicative(const FinSeq& a, const FinSeq& b);

} // namespace kothe
