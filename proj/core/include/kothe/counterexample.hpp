#pragma once

#include "kothe/weight.hpp"

#include <utility>
#include <vector>

namespace kothe {

// Weight family with a staircase profile: the matrix alpha^(k) holds i*j on
// rows i <= k and i below them, and the weight p^(k) reads alpha^(k) along a
// diagonal enumeration of N^2. Row k+1 is constant k+1 along its diagonal
// trace, so every p^(k) has a bounded subsequence while the full sequence is
// unbounded (row 1 grows like j). The family is a pointwise chain in k.

// Tag recorded in serialized reports: anti-diagonals are enumerated in order
// of i+j and each is walked by increasing i. Numeric indices in all outputs
// depend on this convention.
inline constexpr const char* kPhiConventionTag = "antidiagonal:increasing-i";

// Diagonal pairing bijection N^2 -> N. With d = i + j:
//   phi(i, j) = (d-2)(d-1)/2 + i.
// phi(i,j) < phi(k,l) whenever i+j < k+l. Throws on i < 1 or j < 1.
Index phi(Index i, Index j);

// Exact inverse of phi. Throws on n < 1.
std::pair<Index, Index> phi_inv(Index n);

// alpha^(k)_{ij} = i*j for i <= k, i for i > k. Throws on k, i, or j < 1.
Int alpha(Index k, Index i, Index j);

// p^(k): n -> alpha^(k) at phi_inv(n). Descriptor "cex:<k>".
Weight cex_weight(Index k);

// Indices phi(k+1, 1), ..., phi(k+1, count): strictly increasing, and
// cex_weight(k) is constant k+1 on them.
std::vector<Index> bounded_subsequence_witness(Index k, Index count);

} // namespace kothe
