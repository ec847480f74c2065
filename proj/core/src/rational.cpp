#include "kothe/rational.hpp"

#include <stdexcept>

namespace kothe {

std::string to_canonical_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

} // namespace

Rational rational_from_string(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num_part.empty() && num_part.front() == '-') {
        negative = true;
        num_part.remove_prefix(1);
    }
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Int num{std::string(num_part)};
    Int den{std::string(den_part)};
    if (negative) num = -num;
    return make_rational(std::move(num), std::move(den));
}

Rational make_rational(Int num, Int den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

} // namespace kothe
