#pragma once

#include "result.hpp"
#include "sample.hpp"

namespace tstar::naive {

// O(n^4) U-statistic: classify every 4-subset and weight it by lemmaB.
// Throws ErrorCode::Size when n < 4.
TStarResult naiveU(const PairedSample& sample);

// O(n^4) V-statistic via the collapsed sum over index multisets: distinct
// 4-subsets at weight 1, one repeated index at weight 1/2 and two repeated
// pairs at weight 1/4 (tallied in quarter units so everything stays integral).
TStarResult naiveV(const PairedSample& sample);

// Literal kernel sums over ordered index tuples, without any classification.
// enumerateU sums over distinct tuples; enumerateV over all n^4 tuples.
ExactRatio enumerateU(const PairedSample& sample);
ExactRatio enumerateV(const PairedSample& sample);

}  // namespace tstar::naive
