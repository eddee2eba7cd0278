// SPDX-License-Identifier: Apache-2.0
#include "hoi/scene.hpp"

#include <algorithm>
#include <set>

namespace hoi {

void validate_scene(const GroundTruthScene& scene) {
    const int n_boxes = static_cast<int>(scene.boxes.size());
    auto check_box_ref = [&](int idx, const char* what) {
        if (idx < 0 || idx >= n_boxes) {
            throw std::invalid_argument("scene " + scene.id + ": " + what + " index out of range");
        }
    };
    if (scene.width <= 0.0 || scene.height <= 0.0) {
        throw std::invalid_argument("scene " + scene.id + ": non-positive image dimensions");
    }
    for (const auto& sb : scene.boxes) {
        if (!sb.box.valid()) {
            throw std::invalid_argument("scene " + scene.id + ": inverted box coordinates");
        }
    }
    for (int h : scene.humans) check_box_ref(h, "human");

    std::set<std::pair<int, int>> seen_pairs;
    std::size_t action_len = 0;
    for (const auto& t : scene.seen) {
        check_box_ref(t.human, "seen triplet human");
        check_box_ref(t.object, "seen triplet object");
        if (t.human == t.object) {
            throw std::invalid_argument("scene " + scene.id + ": seen triplet pairs a box with itself");
        }
        if (std::find(scene.humans.begin(), scene.humans.end(), t.human) == scene.humans.end()) {
            throw std::invalid_argument("scene " + scene.id + ": seen triplet human is not a human box");
        }
        if (!seen_pairs.insert({t.human, t.object}).second) {
            throw std::invalid_argument("scene " + scene.id + ": duplicate seen pair");
        }
        if (t.actions.empty() ||
            std::none_of(t.actions.begin(), t.actions.end(), [](std::uint8_t v) { return v != 0; })) {
            throw std::invalid_argument("scene " + scene.id + ": seen pair with empty action set");
        }
        if (action_len == 0) action_len = t.actions.size();
        if (t.actions.size() != action_len) {
            throw std::invalid_argument("scene " + scene.id + ": ragged seen action vectors");
        }
    }
    for (const auto& t : scene.eval_gt) {
        check_box_ref(t.human, "eval triplet human");
        check_box_ref(t.object, "eval triplet object");
        if (t.actions.empty()) {
            throw std::invalid_argument("scene " + scene.id + ": eval triplet with no actions");
        }
    }
}

}  // namespace hoi
