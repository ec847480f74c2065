#pragma once

#include "kothe/json_io.hpp"

namespace kothe {

struct ReproduceConfig {
    Index kmax = 6;
    Index dmax = 12;
    Index horizon = 10000;
};

// End-to-end record for the staircase family p^(1)..p^(kmax): legality and
// directedness of the family, the bounded-subsequence rows with their
// unbounded first rows, locally bounded a.i. certificates with constants
// k+1, and the growth sweep showing the lower bound L(D) climbing without
// end. Fully deterministic: identical configs produce byte-identical JSON.
Json reproduce_counterexample(const ReproduceConfig& config);

} // namespace kothe
