#pragma once

#include "kothe/ai_certify.hpp"
#include "kothe/bv0.hpp"
#include "kothe/fin_seq.hpp"
#include "kothe/lp.hpp"
#include "kothe/weight.hpp"

#include <nlohmann/json.hpp>

namespace kothe {

// All machine-readable output goes through ordered_json so key order, and
// with it the whole byte stream, is a function of the data alone. Every
// rational serializes as the canonical "num/den" string; indices and counts
// stay plain integers.
using Json = nlohmann::ordered_json;

// FinSeq <-> [[index, "num/den"], ...], indices strictly increasing,
// coefficients nonzero. from_json rejects anything else.
void to_json(Json& j, const FinSeq& a);
void from_json(const Json& j, FinSeq& a);

// BvSeq uses the same pair-array shape.
void to_json(Json& j, const BvSeq& x);
void from_json(const Json& j, BvSeq& x);

// UnitalElement <-> {"scalar": "num/den", "part": [...]}.
void to_json(Json& j, const UnitalElement& x);
void from_json(const Json& j, UnitalElement& x);

// Weights appear in reports by descriptor only; the descriptor is a parseable
// spec string, so this loses nothing.
void to_json(Json& j, const Weight& p);
void to_json(Json& j, const KotheSet& set);

void to_json(Json& j, const AiCheck& check);
void to_json(Json& j, const LbaiCheck& check);
void to_json(Json& j, const BaiCheck& check);
void to_json(Json& j, const BaiNetResult& net);
void to_json(Json& j, const PerLevelReport& report);
void to_json(Json& j, const DirectednessReport& report);

} // namespace kothe

namespace kothe::lp {

void to_json(Json& j, const LowerBoundInstance& inst);
void to_json(Json& j, const LowerBoundCertificate& cert);
void to_json(Json& j, const GrowthCertificate& cert);

} // namespace kothe::lp
