// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hoi/distillation.hpp"
#include "hoi/matching.hpp"
#include "hoi/scene.hpp"

namespace hoi {

struct LossWeights {
    double bbox = 2.5;
    double giou = 1.0;
    double obj_class = 1.0;
    double interactive = 1.0;
    double action = 1.6;
    double clip = 700.0;
};

struct LossBreakdown {
    double box = 0.0;          // L_b
    double giou = 0.0;         // L_u
    double obj_class = 0.0;    // L_c
    double action = 0.0;       // L_a
    double interactive = 0.0;  // L_is
    double clip = 0.0;         // L_clip
    double total = 0.0;
};

struct LossOptions {
    bool sum_normalization = false;  // sums instead of means over elements
    bool focal_action = false;       // focal variant of the action loss
    double focal_alpha = 0.25;
    double focal_gamma = 2.0;
};

/// One matched prediction/ground-truth box pair for the regression losses.
struct MatchedBoxes {
    CenterBox pred_human_center, pred_object_center;
    CenterBox gt_human_center, gt_object_center;
    Box pred_human, pred_object;
    Box gt_human, gt_object;
};

/// One query's object-class supervision: a score distribution over C+1
/// slots and the target slot (background last).
struct ObjectClassExample {
    std::span<const double> scores;
    int target = -1;
};

/// One seen-matched query's action supervision over the seen slots.
struct ActionExample {
    std::span<const double> scores;          // at least |A_S| long
    std::span<const std::uint8_t> targets;   // multi-hot, length |A_S|
};

/// One query's interactive-score supervision.
struct IsExample {
    double score = 0.0;
    IsTarget target = IsTarget::kNegative;
};

/// One matched pair's distillation supervision.
struct DistillExample {
    std::span<const double> scores;  // per-action, full vocabulary length
    const ActionDistribution* target = nullptr;
};

/// L_b (L1 in center form) and L_u (1 - giou) means over the matched
/// pairs; both zero for an empty match set.
std::pair<double, double> box_losses(std::span<const MatchedBoxes> matches,
                                     const LossOptions& options = {});

/// Cross-entropy toward the target slot, mean over the examples. Throws
/// std::invalid_argument when a score vector does not sum to 1 within 1e-4.
double object_class_loss(std::span<const ObjectClassExample> examples,
                         const LossOptions& options = {});

/// Element-wise binary cross-entropy over the seen action slots, mean over
/// (query, slot) elements. Zero for an empty set.
double action_loss(std::span<const ActionExample> examples, const LossOptions& options = {});

/// Two-class cross-entropy on the interactive score, mean over the
/// non-ignored queries; ignored queries contribute nothing.
double interactive_score_loss(std::span<const IsExample> examples, const LossOptions& options = {});

/// Soft-label binary cross-entropy between the action scores and the
/// distillation target, restricted to the target's valid support; mean over
/// all (pair, support slot) elements. Throws std::invalid_argument on a
/// score/target length mismatch.
double clip_distill_loss(std::span<const DistillExample> examples, const LossOptions& options = {});

/// Weighted sum of the parts per the breakdown's invariant.
LossBreakdown total_loss(double box, double giou, double obj_class, double action,
                         double interactive, double clip, const LossWeights& weights);

/// Assembles every loss term for one scene from a match result: box and
/// giou losses over the seen-match and potential queries, object-class
/// supervision of all queries (background for everything unmatched),
/// action supervision of the seen matches, interactive-score supervision
/// per the match targets, and distillation toward the provided targets
/// (one per seen-match/potential query, keyed by query index; missing
/// targets throw std::invalid_argument).
LossBreakdown scene_loss(const GroundTruthScene& scene, const PredictionSet& preds,
                         const MatchResult& result,
                         const std::vector<std::pair<int, ActionDistribution>>& distill_targets,
                         const LossWeights& weights, const LossOptions& options = {});

}  // namespace hoi
