#pragma once

#include "kothe/fin_seq.hpp"

#include <random>
#include <utility>
#include <vector>

namespace kothe::testing {

// Uniformly random finitely supported sequence. Duplicate indices drawn by
// the generator are merged by from_terms, so the support size is at most
// max_support rather than exactly equal to it.
inline FinSeq random_fin_seq(std::mt19937& rng, int max_support = 30,
                             Index max_index = 200) {
    std::uniform_int_distribution<int> support_dist(0, max_support);
    std::uniform_int_distribution<Index> index_dist(1, max_index);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 9);

    std::vector<FinSeq::Term> terms;
    const int draws = support_dist(rng);
    for (int t = 0; t < draws; ++t) {
        int num = num_dist(rng);
        if (num == 0) num = 1;
        terms.emplace_back(index_dist(rng),
                           make_rational(num, den_dist(rng)));
    }
    return FinSeq::from_terms(std::move(terms));
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num_dist(-99, 99);
    std::uniform_int_distribution<int> den_dist(1, 99);
    return make_rational(num_dist(rng), den_dist(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
    Rational q = random_rational(rng);
    return q == 0 ? Rational(1) : q;
}

}  // namespace kothe::testing
