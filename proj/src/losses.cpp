// SPDX-License-Identifier: Apache-2.0
#include "hoi/losses.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hoi {

namespace {

constexpr double kEps = 1e-7;

double safe_log(double x) { return std::log(std::max(x, kEps)); }

/// Soft-label BCE with exact zeros at the hard endpoints: a zero
/// coefficient suppresses its clamped log term entirely.
double soft_bce(double target, double score) {
    double loss = 0.0;
    if (target > 0.0) loss -= target * safe_log(score);
    if (target < 1.0) loss -= (1.0 - target) * safe_log(1.0 - score);
    return loss;
}

double normalize(double sum, std::size_t count, const LossOptions& options) {
    if (count == 0) return 0.0;
    return options.sum_normalization ? sum : sum / static_cast<double>(count);
}

}  // namespace

std::pair<double, double> box_losses(std::span<const MatchedBoxes> matches,
                                     const LossOptions& options) {
    double l1_sum = 0.0;
    double giou_sum = 0.0;
    for (const auto& m : matches) {
        l1_sum += l1_box_cost(m.pred_human_center, m.gt_human_center) +
                  l1_box_cost(m.pred_object_center, m.gt_object_center);
        giou_sum += (1.0 - giou(m.pred_human, m.gt_human)) + (1.0 - giou(m.pred_object, m.gt_object));
    }
    return {normalize(l1_sum, matches.size(), options), normalize(giou_sum, matches.size(), options)};
}

double object_class_loss(std::span<const ObjectClassExample> examples, const LossOptions& options) {
    double sum = 0.0;
    for (const auto& ex : examples) {
        if (ex.target < 0 || ex.target >= static_cast<int>(ex.scores.size())) {
            throw std::invalid_argument("object-class target outside the score vector");
        }
        const double mass = std::accumulate(ex.scores.begin(), ex.scores.end(), 0.0);
        if (std::abs(mass - 1.0) > 1e-4) {
            throw std::invalid_argument("object scores are not a distribution");
        }
        sum -= safe_log(ex.scores[ex.target]);
    }
    return normalize(sum, examples.size(), options);
}

double action_loss(std::span<const ActionExample> examples, const LossOptions& options) {
    double sum = 0.0;
    std::size_t elements = 0;
    for (const auto& ex : examples) {
        if (ex.targets.empty()) {
            throw std::invalid_argument("action example without ground-truth labels");
        }
        if (ex.scores.size() < ex.targets.size()) {
            throw std::invalid_argument("action scores shorter than the seen action set");
        }
        for (std::size_t a = 0; a < ex.targets.size(); ++a) {
            const double y = ex.targets[a] ? 1.0 : 0.0;
            const double q = ex.scores[a];
            if (options.focal_action) {
                const double pt = y > 0.5 ? q : 1.0 - q;
                const double alpha = y > 0.5 ? options.focal_alpha : 1.0 - options.focal_alpha;
                sum += -alpha * std::pow(1.0 - pt, options.focal_gamma) * safe_log(pt);
            } else {
                sum += soft_bce(y, q);
            }
            ++elements;
        }
    }
    return normalize(sum, elements, options);
}

double interactive_score_loss(std::span<const IsExample> examples, const LossOptions& options) {
    double sum = 0.0;
    std::size_t counted = 0;
    for (const auto& ex : examples) {
        switch (ex.target) {
            case IsTarget::kPositive:
                sum -= safe_log(ex.score);
                ++counted;
                break;
            case IsTarget::kNegative:
                sum -= safe_log(1.0 - ex.score);
                ++counted;
                break;
            case IsTarget::kIgnore:
                break;
        }
    }
    return normalize(sum, counted, options);
}

double clip_distill_loss(std::span<const DistillExample> examples, const LossOptions& options) {
    double sum = 0.0;
    std::size_t elements = 0;
    for (const auto& ex : examples) {
        if (ex.target == nullptr) throw std::invalid_argument("distill example without a target");
        if (ex.scores.size() != ex.target->p.size()) {
            throw std::invalid_argument("action scores and distillation target differ in length");
        }
        for (int a : ex.target->support) {
            sum += soft_bce(ex.target->p[a], ex.scores[a]);
            ++elements;
        }
    }
    return normalize(sum, elements, options);
}

LossBreakdown total_loss(double box, double giou, double obj_class, double action,
                         double interactive, double clip, const LossWeights& weights) {
    LossBreakdown b;
    b.box = box;
    b.giou = giou;
    b.obj_class = obj_class;
    b.action = action;
    b.interactive = interactive;
    b.clip = clip;
    b.total = weights.bbox * b.box + weights.giou * b.giou + weights.obj_class * b.obj_class +
              weights.action * b.action + weights.interactive * b.interactive + weights.clip * b.clip;
    return b;
}

LossBreakdown scene_loss(const GroundTruthScene& scene, const PredictionSet& preds,
                         const MatchResult& result,
                         const std::vector<std::pair<int, ActionDistribution>>& distill_targets,
                         const LossWeights& weights, const LossOptions& options) {
    const int n = preds.size();
    if (static_cast<int>(result.labels.size()) != n || static_cast<int>(result.is_targets.size()) != n) {
        throw std::invalid_argument("match result does not cover the prediction set");
    }

    const auto seen = seen_targets(scene);
    const auto unknown = unknown_targets(scene);

    auto target_of = [&](int query) -> const PairTarget* {
        for (const auto& [q, t] : result.stage1) {
            if (q == query) return &seen[t];
        }
        for (const auto& [q, t] : result.stage2) {
            if (q == query) return &unknown[t];
        }
        return nullptr;
    };

    const int background = static_cast<int>(preds.preds.front().object_scores.size()) - 1;

    std::vector<MatchedBoxes> boxes;
    std::vector<ObjectClassExample> obj_examples;
    std::vector<ActionExample> action_examples;
    std::vector<IsExample> is_examples;
    std::vector<DistillExample> distill_examples;

    for (int q = 0; q < n; ++q) {
        const Prediction& p = preds.preds[q];
        const QueryLabel label = result.labels[q];
        const bool trained_pair =
            label == QueryLabel::kSeenMatch || label == QueryLabel::kPotential;

        ObjectClassExample oc;
        oc.scores = p.object_scores;
        oc.target = background;

        if (trained_pair) {
            const PairTarget* t = target_of(q);
            if (t == nullptr) throw std::invalid_argument("matched query without an assignment");
            boxes.push_back({p.human_center, p.object_center, t->human_center, t->object_center,
                             p.human, p.object, t->human, t->object});
            oc.target = t->object_category;
            if (label == QueryLabel::kSeenMatch) {
                action_examples.push_back({p.action_scores, t->actions});
            }
            const auto it = std::find_if(distill_targets.begin(), distill_targets.end(),
                                         [&](const auto& kv) { return kv.first == q; });
            if (it == distill_targets.end()) {
                throw std::invalid_argument("missing distillation target for a matched query");
            }
            distill_examples.push_back({p.action_scores, &it->second});
        }
        obj_examples.push_back(oc);
        is_examples.push_back({p.interactive_score, result.is_targets[q]});
    }

    const auto [l_box, l_giou] = box_losses(boxes, options);
    return total_loss(l_box, l_giou, object_class_loss(obj_examples, options),
                      action_loss(action_examples, options),
                      interactive_score_loss(is_examples, options),
                      clip_distill_loss(distill_examples, options), weights);
}

}  // namespace hoi
