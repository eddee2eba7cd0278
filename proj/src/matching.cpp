// SPDX-License-Identifier: Apache-2.0
#include "hoi/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoi {

namespace {

PairTarget make_target(const GroundTruthScene& scene, int human_idx, int object_idx) {
    PairTarget t;
    t.human = scene.boxes[human_idx].box;
    t.object = scene.boxes[object_idx].box;
    t.human_center = to_center_form(t.human, scene.width, scene.height);
    t.object_center = to_center_form(t.object, scene.width, scene.height);
    t.object_category = scene.boxes[object_idx].category;
    return t;
}

void validate_predictions(const PredictionSet& preds) {
    if (preds.preds.empty()) throw std::invalid_argument("prediction set is empty");
    const std::size_t n_obj = preds.preds.front().object_scores.size();
    const std::size_t n_act = preds.preds.front().action_scores.size();
    for (const auto& p : preds.preds) {
        if (p.object_scores.size() != n_obj || p.action_scores.size() != n_act) {
            throw std::invalid_argument("ragged prediction score vectors");
        }
        if (p.interactive_score < 0.0 || p.interactive_score > 1.0) {
            throw std::invalid_argument("interactive score outside [0,1]");
        }
    }
}

CostMatrix build_cost(const std::vector<const Prediction*>& preds,
                      const std::vector<PairTarget>& targets, const CostWeights& weights,
                      CostMode mode, bool targets_as_rows) {
    const int n_preds = static_cast<int>(preds.size());
    const int n_targets = static_cast<int>(targets.size());
    CostMatrix m = targets_as_rows ? CostMatrix::zeros(n_targets, n_preds)
                                   : CostMatrix::zeros(n_preds, n_targets);
    for (int p = 0; p < n_preds; ++p) {
        for (int t = 0; t < n_targets; ++t) {
            const double c = pair_cost(*preds[p], targets[t], weights, mode);
            if (targets_as_rows) {
                m.at(t, p) = c;
            } else {
                m.at(p, t) = c;
            }
        }
    }
    return m;
}

}  // namespace

const char* to_string(QueryLabel label) {
    switch (label) {
        case QueryLabel::kSeenMatch: return "seen_match";
        case QueryLabel::kPotential: return "potential";
        case QueryLabel::kNonInteractive: return "non_interactive";
        case QueryLabel::kNoPair: return "no_pair";
        case QueryLabel::kOmitted: return "omitted";
    }
    return "unknown";
}

const char* to_string(IsTarget target) {
    switch (target) {
        case IsTarget::kPositive: return "positive";
        case IsTarget::kNegative: return "negative";
        case IsTarget::kIgnore: return "ignore";
    }
    return "unknown";
}

std::vector<std::pair<int, int>> enumerate_unknown_pairs(const GroundTruthScene& scene) {
    validate_scene(scene);
    std::vector<std::pair<int, int>> out;
    for (int h : scene.humans) {
        for (int o = 0; o < static_cast<int>(scene.boxes.size()); ++o) {
            if (o == h) continue;  // a box never pairs with itself
            const bool annotated = std::any_of(
                scene.seen.begin(), scene.seen.end(),
                [&](const SeenTriplet& t) { return t.human == h && t.object == o; });
            if (!annotated) out.emplace_back(h, o);
        }
    }
    return out;
}

std::vector<BoxPair> enumerate_unknown_box_pairs(const GroundTruthScene& scene) {
    std::vector<BoxPair> out;
    for (const auto& [h, o] : enumerate_unknown_pairs(scene)) {
        out.push_back({scene.boxes[h].box, scene.boxes[o].box, scene.boxes[o].category});
    }
    return out;
}

std::vector<PairTarget> seen_targets(const GroundTruthScene& scene) {
    std::vector<PairTarget> out;
    out.reserve(scene.seen.size());
    for (const auto& t : scene.seen) {
        PairTarget target = make_target(scene, t.human, t.object);
        target.actions = t.actions;
        out.push_back(std::move(target));
    }
    return out;
}

std::vector<PairTarget> unknown_targets(const GroundTruthScene& scene) {
    std::vector<PairTarget> out;
    for (const auto& [h, o] : enumerate_unknown_pairs(scene)) {
        out.push_back(make_target(scene, h, o));
    }
    return out;
}

MatchResult two_stage_match(const GroundTruthScene& scene, const PredictionSet& preds,
                            const MatchParams& params) {
    validate_scene(scene);
    validate_predictions(preds);
    if (params.topk < 0) throw std::invalid_argument("topk must be >= 0");
    if (params.thres_is < 0.0 || params.thres_is > 1.0) {
        throw std::invalid_argument("thres_is must lie in [0,1]");
    }

    const int n = preds.size();
    const int m = scene.num_seen_pairs();
    if (m > n) throw std::invalid_argument("more seen pairs than queries");

    MatchResult result;
    result.labels.assign(n, QueryLabel::kNoPair);

    // Stage 1: all N predictions against the M seen pairs, full cost.
    const auto seen = seen_targets(scene);
    std::vector<char> matched(n, 0);
    if (m > 0) {
        std::vector<const Prediction*> all;
        all.reserve(n);
        for (const auto& p : preds.preds) all.push_back(&p);
        const CostMatrix cost = build_cost(all, seen, params.weights, CostMode::kFull, false);
        for (const auto& [q, t] : hungarian(cost).pairs) {
            result.stage1.emplace_back(q, t);
            result.labels[q] = QueryLabel::kSeenMatch;
            matched[q] = 1;
        }
    }

    // Stage 2: leftover predictions against the K unknown pairs, action-free.
    // When K exceeds the leftover count the matrix is oriented with pairs as
    // rows so that every leftover prediction still receives a match.
    const auto unknown = unknown_targets(scene);
    const int k_unknown = static_cast<int>(unknown.size());
    std::vector<int> rest;
    for (int q = 0; q < n; ++q) {
        if (!matched[q]) rest.push_back(q);
    }
    if (k_unknown > 0 && !rest.empty()) {
        std::vector<const Prediction*> rest_preds;
        rest_preds.reserve(rest.size());
        for (int q : rest) rest_preds.push_back(&preds.preds[q]);
        const bool targets_as_rows = k_unknown > static_cast<int>(rest.size());
        const CostMatrix cost =
            build_cost(rest_preds, unknown, params.weights, CostMode::kActionFree, targets_as_rows);
        for (const auto& [r, c] : hungarian(cost).pairs) {
            const int q = rest[targets_as_rows ? c : r];
            const int t = targets_as_rows ? r : c;
            result.stage2.emplace_back(q, t);
        }
        std::sort(result.stage2.begin(), result.stage2.end());
    }

    // Thresholded top-k gating of the stage-2 matches by interactive score.
    std::vector<int> above;
    for (const auto& [q, t] : result.stage2) {
        result.labels[q] = QueryLabel::kNonInteractive;
        if (preds.preds[q].interactive_score > params.thres_is) above.push_back(q);
    }
    std::sort(above.begin(), above.end(), [&](int a, int b) {
        const double sa = preds.preds[a].interactive_score;
        const double sb = preds.preds[b].interactive_score;
        if (sa != sb) return sa > sb;
        return a < b;
    });
    if (static_cast<int>(above.size()) > params.topk) above.resize(params.topk);
    for (int q : above) result.labels[q] = QueryLabel::kPotential;

    result.is_targets = interactive_supervision(scene, preds, result, params.iou_thresh);
    for (int q = 0; q < n; ++q) {
        if (result.is_targets[q] == IsTarget::kIgnore) result.labels[q] = QueryLabel::kOmitted;
    }
    return result;
}

std::vector<IsTarget> interactive_supervision(const GroundTruthScene& scene,
                                              const PredictionSet& preds, const MatchResult& result,
                                              double iou_thresh) {
    const int n = preds.size();
    if (static_cast<int>(result.labels.size()) != n) {
        throw std::invalid_argument("match result does not cover the prediction set");
    }
    for (const auto& [q, t] : result.stage1) {
        if (q < 0 || q >= n || t < 0 || t >= scene.num_seen_pairs()) {
            throw std::invalid_argument("stage-1 assignment out of range for scene");
        }
    }

    const auto unknown = enumerate_unknown_pairs(scene);
    for (const auto& [q, t] : result.stage2) {
        if (q < 0 || q >= n || t < 0 || t >= static_cast<int>(unknown.size())) {
            throw std::invalid_argument("stage-2 assignment out of range for scene");
        }
    }

    auto overlaps = [&](const Prediction& p, const Box& h, const Box& o) {
        return iou(p.human, h) > iou_thresh && iou(p.object, o) > iou_thresh;
    };

    std::vector<IsTarget> targets(n, IsTarget::kNegative);

    for (const auto& [q, t] : result.stage1) {
        const auto& gt = scene.seen[t];
        if (overlaps(preds.preds[q], scene.boxes[gt.human].box, scene.boxes[gt.object].box)) {
            targets[q] = IsTarget::kPositive;
        }
    }
    for (const auto& [q, t] : result.stage2) {
        if (result.labels[q] != QueryLabel::kPotential) continue;
        if (overlaps(preds.preds[q], scene.boxes[unknown[t].first].box,
                     scene.boxes[unknown[t].second].box)) {
            targets[q] = IsTarget::kPositive;
        }
    }

    // Omit rule: an unmatched query sitting on any unknown pair is ignored
    // rather than penalized (matched or not by stage 2).
    for (int q = 0; q < n; ++q) {
        if (result.labels[q] != QueryLabel::kNoPair && result.labels[q] != QueryLabel::kOmitted) {
            continue;
        }
        for (const auto& [h, o] : unknown) {
            if (overlaps(preds.preds[q], scene.boxes[h].box, scene.boxes[o].box)) {
                targets[q] = IsTarget::kIgnore;
                break;
            }
        }
    }
    return targets;
}

}  // namespace hoi
