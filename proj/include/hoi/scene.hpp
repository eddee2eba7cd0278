// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoi/geometry.hpp"

namespace hoi {

/// One annotated box of a scene's box set B.
struct SceneBox {
    Box box;
    int category = -1;
};

/// A training-label pair: references into the scene's box set plus a
/// multi-hot action vector over the seen action set A_S.
struct SeenTriplet {
    int human = -1;
    int object = -1;
    std::vector<std::uint8_t> actions;  // multi-hot, length = |A_S|
};

/// A full-annotation triplet used by the evaluation protocol. Actions are
/// indices over the whole action vocabulary (seen and unseen).
struct HoiTriplet {
    int human = -1;
    int object = -1;
    std::vector<int> actions;
};

/// Annotated scene: boxes, the indices usable as humans, the seen training
/// labels Y, and (optionally) the full evaluation ground truth.
struct GroundTruthScene {
    std::string id;
    double width = 0.0;
    double height = 0.0;
    std::vector<SceneBox> boxes;
    std::vector<int> humans;          // indices into boxes
    std::vector<SeenTriplet> seen;    // Y; unique (human, object)
    std::vector<HoiTriplet> eval_gt;  // full annotations; may be empty

    int num_seen_pairs() const { return static_cast<int>(seen.size()); }
};

/// Throws std::invalid_argument when the scene violates its invariants:
/// box references out of range, inverted boxes, duplicate seen pairs,
/// empty or ragged action vectors, or a human index that is not a box.
void validate_scene(const GroundTruthScene& scene);

/// One detector query's output for a scene.
struct Prediction {
    int query = -1;
    CenterBox human_center;  // normalized center form
    CenterBox object_center;
    Box human;  // corner form, image frame
    Box object;
    std::vector<double> object_scores;  // C+1 slots, background last
    std::vector<double> action_scores;  // over A_S then A_U, each in [0,1]
    double interactive_score = 0.0;     // s_is in [0,1]
};

/// All N queries of one scene.
struct PredictionSet {
    std::string scene_id;
    std::vector<Prediction> preds;

    int size() const { return static_cast<int>(preds.size()); }
};

/// A matching target: ground-truth box pair in both coordinate forms plus
/// the object category. Seen targets carry the multi-hot action vector;
/// unknown targets leave it empty.
struct PairTarget {
    Box human;
    Box object;
    CenterBox human_center;
    CenterBox object_center;
    int object_category = -1;
    std::vector<std::uint8_t> actions;  // empty for unknown pairs

    bool has_actions() const { return !actions.empty(); }
};

}  // namespace hoi
