#include "kothe/fin_seq.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using namespace kothe;
using kothe::testing::random_fin_seq;
using kothe::testing::random_rational;

namespace {

FinSeq seq(std::vector<FinSeq::Term> terms) {
    return FinSeq::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("construction canonicalizes terms") {
    CHECK(FinSeq::basis(3).terms() ==
          std::vector<FinSeq::Term>{{3, Rational(1)}});
    CHECK_THROWS_AS(FinSeq::basis(0), std::invalid_argument);
    CHECK_THROWS_AS(FinSeq::basis(-2), std::invalid_argument);

    const FinSeq merged = seq({{5, Rational(2)}, {1, Rational(1)},
                               {5, Rational(-2)}, {2, Rational(3)}});
    CHECK(merged == seq({{1, Rational(1)}, {2, Rational(3)}}));
    CHECK(merged.coeff(5) == 0);
    CHECK(merged.coeff(2) == 3);
    CHECK(merged.max_index() == 2);
    CHECK_THROWS_AS(seq({{0, Rational(1)}}), std::invalid_argument);

    const FinSeq cancel = seq({{4, Rational(1)}, {4, Rational(-1)}});
    CHECK(cancel.is_zero());
    CHECK(cancel.max_index() == 0);
}

TEST_CASE("linear structure") {
    const FinSeq a = seq({{1, Rational(1)}, {3, Rational(-2)}});
    const FinSeq b = seq({{3, Rational(2)}, {7, Rational(5)}});
    CHECK(a + b == seq({{1, Rational(1)}, {7, Rational(5)}}));
    CHECK(a - a == FinSeq{});
    CHECK(-a == seq({{1, Rational(-1)}, {3, Rational(2)}}));
    CHECK(scale(make_rational(1, 2), b) ==
          seq({{3, Rational(1)}, {7, make_rational(5, 2)}}));
    CHECK(scale(Rational(0), b).is_zero());
    CHECK(lin_comb({{Rational(2), a}, {Rational(-1), b}, {Rational(1), b}}) ==
          scale(Rational(2), a));
}

TEST_CASE("product on basis vectors picks the smaller index") {
    CHECK(min_product(FinSeq::basis(2), FinSeq::basis(3)) == FinSeq::basis(2));
    CHECK(min_product(FinSeq::basis(3), FinSeq::basis(2)) == FinSeq::basis(2));
    CHECK(min_product(FinSeq::basis(5), FinSeq::basis(5)) == FinSeq::basis(5));
    CHECK(brute_product(FinSeq::basis(5), FinSeq::basis(5)) ==
          FinSeq::basis(5));
}

TEST_CASE("product worked examples") {
    const FinSeq a = seq({{1, Rational(1)}, {2, Rational(1)}});
    CHECK(min_product(a, FinSeq::basis(2)) == a);
    CHECK(min_product(a, FinSeq{}).is_zero());
    CHECK(min_product(FinSeq{}, a).is_zero());
    CHECK(brute_product(a, a) == seq({{1, Rational(3)}, {2, Rational(1)}}));
    CHECK(min_product(a, a) == seq({{1, Rational(3)}, {2, Rational(1)}}));
}

TEST_CASE("closed-form product agrees with the pairwise oracle") {
    std::mt19937 rng(911);
    for (int trial = 0; trial < 1000; ++trial) {
        const FinSeq a = random_fin_seq(rng);
        const FinSeq b = random_fin_seq(rng);
        const FinSeq fast = min_product(a, b);
        CHECK(fast == brute_product(a, b));
        CHECK(fast == min_product(b, a));
    }
}

TEST_CASE("product is associative") {
    std::mt19937 rng(912);
    for (int trial = 0; trial < 500; ++trial) {
        const FinSeq a = random_fin_seq(rng, 12, 60);
        const FinSeq b = random_fin_seq(rng, 12, 60);
        const FinSeq c = random_fin_seq(rng, 12, 60);
        CHECK(min_product(min_product(a, b), c) ==
              min_product(a, min_product(b, c)));
    }
}

TEST_CASE("weight sums absolute coefficients") {
    CHECK(weight_of(FinSeq{}) == 0);
    CHECK(weight_of(FinSeq::basis(9)) == 1);
    CHECK(weight_of(seq({{1, Rational(1)}, {2, Rational(-2)},
                         {3, Rational(3)}})) == 6);
    CHECK(weight_of(seq({{4, make_rational(-1, 2)}, {8, make_rational(1, 3)}}))
          == make_rational(5, 6));
}

TEST_CASE("leading index") {
    CHECK(leading_index(FinSeq::basis(7)) == 7);
    CHECK(leading_index(seq({{2, Rational(-1)}, {9, Rational(5)}})) == 2);
    CHECK_THROWS_AS(leading_index(FinSeq{}), std::domain_error);
}

TEST_CASE("suffix sums are multiplicative for the product") {
    std::mt19937 rng(913);
    for (int trial = 0; trial < 300; ++trial) {
        const FinSeq a = random_fin_seq(rng, 15, 50);
        const FinSeq b = random_fin_seq(rng, 15, 50);
        const FinSeq ab = min_product(a, b);
        for (Index k = 1; k <= 52; ++k) {
            CHECK(suffix_sum(ab, k) == suffix_sum(a, k) * suffix_sum(b, k));
        }
    }
}

TEST_CASE("weight is submultiplicative") {
    std::mt19937 rng(914);
    for (int trial = 0; trial < 500; ++trial) {
        const FinSeq a = random_fin_seq(rng);
        const FinSeq b = random_fin_seq(rng);
        CHECK(weight_of(min_product(a, b)) <= weight_of(a) * weight_of(b));
    }
}

TEST_CASE("leading index of a product is at least the smaller factor's") {
    std::mt19937 rng(915);
    int nonzero_products = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const FinSeq a = random_fin_seq(rng, 8, 40);
        const FinSeq b = random_fin_seq(rng, 8, 40);
        const FinSeq ab = min_product(a, b);
        if (a.is_zero() || b.is_zero() || ab.is_zero()) continue;
        ++nonzero_products;
        CHECK(leading_index(ab) >=
              std::min(leading_index(a), leading_index(b)));
    }
    CHECK(nonzero_products > 100);
}

TEST_CASE("unitization") {
    const UnitalElement one = unital_identity();
    CHECK(one.scalar == 1);
    CHECK(one.part.is_zero());

    const UnitalElement x{make_rational(-1, 2),
                          seq({{2, Rational(1)}, {4, Rational(-3)}})};
    CHECK(unital_product(one, x) == x);
    CHECK(unital_product(x, one) == x);

    std::mt19937 rng(916);
    for (int trial = 0; trial < 300; ++trial) {
        const FinSeq a = random_fin_seq(rng, 10, 40);
        const FinSeq b = random_fin_seq(rng, 10, 40);
        CHECK(unital_product(embed(a), embed(b)) == embed(min_product(a, b)));

        const UnitalElement u{random_rational(rng), a};
        const UnitalElement v{random_rational(rng), b};
        const UnitalElement w{random_rational(rng),
                              random_fin_seq(rng, 10, 40)};
        CHECK(unital_product(unital_product(u, v), w) ==
              unital_product(u, unital_product(v, w)));
    }

    // 1 - e_2 is idempotent: its square multiplies out to itself.
    const UnitalElement p{Rational(1), -FinSeq::basis(2)};
    CHECK(unital_product(p, p) == p);
}
