// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "hoi/assignment.hpp"
#include "hoi/scene.hpp"

namespace hoi {

enum class QueryLabel {
    kSeenMatch,       // stage-1 matched to a seen pair
    kPotential,       // stage-2 matched, gated in by interactive score
    kNonInteractive,  // stage-2 matched, gated out
    kNoPair,          // unmatched in both stages
    kOmitted          // unmatched but overlapping an unknown pair; loss skipped
};

enum class IsTarget { kPositive, kNegative, kIgnore };

const char* to_string(QueryLabel label);
const char* to_string(IsTarget target);

/// Output of the two-stage matcher for one scene.
struct MatchResult {
    std::vector<std::pair<int, int>> stage1;  // (query, seen pair index)
    std::vector<std::pair<int, int>> stage2;  // (query, unknown pair index)
    std::vector<QueryLabel> labels;           // one per query
    std::vector<IsTarget> is_targets;         // one per query
};

struct MatchParams {
    CostWeights weights;
    int topk = 3;
    double thres_is = 0.5;
    double iou_thresh = 0.5;  // strict: IoU must exceed this
};

/// All human-object pairings over the scene's boxes (self-pairing excluded)
/// that are absent from the seen labels Y, ordered human index major,
/// object index minor.
std::vector<std::pair<int, int>> enumerate_unknown_pairs(const GroundTruthScene& scene);

/// Box-pair view of enumerate_unknown_pairs.
std::vector<BoxPair> enumerate_unknown_box_pairs(const GroundTruthScene& scene);

/// Matching targets for the scene's seen pairs, in Y order.
std::vector<PairTarget> seen_targets(const GroundTruthScene& scene);

/// Matching targets for the scene's unknown pairs (no action labels),
/// in enumerate_unknown_pairs order.
std::vector<PairTarget> unknown_targets(const GroundTruthScene& scene);

/// Stage 1 matches every prediction against the M seen pairs with the full
/// cost; stage 2 matches the leftover predictions against the K unknown
/// pairs action-agnostically. Stage-2 matches with interactive score
/// strictly above thres_is, ranked by descending score (ties to the lower
/// query index), are labeled potential up to topk; the rest of the stage-2
/// matches are non-interactive, everything unmatched is no-pair. Interactive
/// supervision targets are filled in and omit-rule queries relabeled.
/// Throws std::invalid_argument when M > N or inputs are inconsistent.
MatchResult two_stage_match(const GroundTruthScene& scene, const PredictionSet& preds,
                            const MatchParams& params);

/// Interactive-score supervision targets for an existing match result:
/// matched (seen or potential) queries with both IoUs above iou_thresh are
/// positive; everything else is negative, except unmatched queries lying on
/// any unknown pair with both IoUs above iou_thresh, which are ignored.
/// Throws std::invalid_argument when result does not fit scene/preds.
std::vector<IsTarget> interactive_supervision(const GroundTruthScene& scene,
                                              const PredictionSet& preds, const MatchResult& result,
                                              double iou_thresh = 0.5);

}  // namespace hoi
