#include "kothe/counterexample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kothe {

namespace {

void require_positive(Index value, const char* name) {
    if (value < 1) {
        throw std::invalid_argument(std::string(name) + " must be >= 1, got " + std::to_string(value));
    }
}

Index triangular(Index m) { return m * (m + 1) / 2; }

} // namespace

Index phi(Index i, Index j) {
    require_positive(i, "i");
    require_positive(j, "j");
    Index d = i + j;
    return (d - 2) * (d - 1) / 2 + i;
}

std::pair<Index, Index> phi_inv(Index n) {
    require_positive(n, "n");
    // smallest m >= 1 with m(m+1)/2 >= n; the float estimate is corrected below
    Index m = static_cast<Index>(std::floor((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0));
    if (m < 1) m = 1;
    while (triangular(m) < n) ++m;
    while (m > 1 && triangular(m - 1) >= n) --m;
    Index d = m + 1;
    Index i = n - triangular(m - 1);
    return {i, d - i};
}

Int alpha(Index k, Index i, Index j) {
    require_positive(k, "k");
    require_positive(i, "i");
    require_positive(j, "j");
    if (i <= k) return Int(i) * Int(j);
    return Int(i);
}

Weight cex_weight(Index k) {
    require_positive(k, "k");
    return Weight("cex:" + std::to_string(k), [k](Index n) {
        auto [i, j] = phi_inv(n);
        return Rational(alpha(k, i, j));
    });
}

std::vector<Index> bounded_subsequence_witness(Index k, Index count) {
    require_positive(k, "k");
    require_positive(count, "count");
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Index j = 1; j <= count; ++j) out.push_back(phi(k + 1, j));
    return out;
}

} // namespace kothe
