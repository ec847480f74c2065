#pragma once

#include "kothe/fin_seq.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kothe {

// A weight sequence p = (p_1, p_2, ...), evaluated on demand up to any
// horizon. Weights are immutable and carry a human-readable descriptor
// ("const:1/1", "cex:3", "list:[...];tail=1/1") so reports are
// self-describing. All shipped kinds evaluate in O(1); nothing is cached.
class Weight {
public:
    Weight(std::string descriptor, std::function<Rational(Index)> eval);

    static Weight constant(const Rational& value);
    static Weight from_list(std::vector<Rational> head, Rational tail);

    // p_i for i >= 1; throws std::invalid_argument otherwise.
    Rational operator()(Index i) const;

    const std::string& descriptor() const { return impl_->descriptor; }

    std::vector<Rational> prefix(Index len) const;

private:
    struct Impl {
        std::string descriptor;
        std::function<Rational(Index)> eval;
    };
    std::shared_ptr<const Impl> impl_;
};

// Finite ordered family of weights together with the horizon used for all
// finite universally-quantified checks. Every verdict produced from a
// KotheSet is relative to this horizon.
struct KotheSet {
    std::vector<Weight> members;
    Index horizon = 10000;
};

// ||a||_p = sum over supp(a) of |a_i| p_i. Exact; finite since a is finitely
// supported.
Rational seminorm(const FinSeq& a, const Weight& p);

// First index i <= horizon with p_i < 1, or nullopt when none exists.
std::optional<Index> check_ge_one(const Weight& p, Index horizon);

enum class WeightOrder { Equal, LeftLeq, RightLeq, Incomparable };

// Pointwise comparison on indices <= horizon. This is the computable
// sufficient form of the seminorm ordering: p <= q pointwise forces
// ||a||_p <= ||a||_q for every a.
WeightOrder compare_weights(const Weight& p, const Weight& q, Index horizon);

struct DirectednessPair {
    std::size_t left = 0;
    std::size_t right = 0;
    std::optional<std::size_t> witness; // member position of a majorant
    // populated when no witness exists: candidate position -> first index
    // where the candidate falls below max(p, q)
    std::vector<std::pair<std::size_t, Index>> first_bad;
};

struct DirectednessReport {
    bool directed = true;
    Index horizon = 0;
    std::vector<DirectednessPair> pairs;
};

// For each unordered member pair, searches the family in order for a member
// r with r_i >= max(p_i, q_i) for all i <= horizon.
DirectednessReport check_directed(const KotheSet& set);

// "const:<rational>" | "list:<json array>[;tail=<rational>]" | "cex:<k>".
// The returned descriptor is the canonicalized spec string.
Weight parse_weight_spec(const std::string& spec);

// Either a JSON array of weight spec strings, or an object
// {"weights": [...], "horizon": N}. Absent horizon falls back to
// default_horizon.
KotheSet parse_kothe_spec(const std::string& spec, Index default_horizon);

} // namespace kothe
