// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hoi {

/// Action/object/HOI vocabulary. Actions are ordered seen-first, then
/// unseen; HOI categories are (action, object) index pairs.
struct Vocabulary {
    std::vector<std::string> actions;
    std::vector<std::uint8_t> action_unseen;  // 0 = seen, 1 = unseen
    std::vector<std::string> objects;
    std::vector<std::pair<int, int>> hois;  // (action index, object index)

    int num_actions() const { return static_cast<int>(actions.size()); }
    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_hois() const { return static_cast<int>(hois.size()); }
    int num_seen_actions() const;
    bool is_unseen_action(int action) const { return action_unseen[action] != 0; }

    /// Index into hois for (action, object), or -1.
    int hoi_index(int action, int object) const;
};

/// Throws std::invalid_argument on duplicate HOIs, out-of-range indices,
/// or a seen action listed after an unseen one.
void validate_vocabulary(const Vocabulary& vocab);

/// Prior knowledge: which action-object combinations form a valid HOI.
struct ValidityMatrix {
    int num_actions = 0;
    int num_objects = 0;
    std::vector<std::uint8_t> valid;  // row-major [action][object]

    static ValidityMatrix all_valid(int num_actions, int num_objects);

    bool is_valid(int action, int object) const {
        return valid[static_cast<std::size_t>(action) * num_objects + object] != 0;
    }
    void set(int action, int object, bool v) {
        valid[static_cast<std::size_t>(action) * num_objects + object] = v ? 1 : 0;
    }
    /// True when no action may interact with the object.
    bool interaction_free(int object) const;
};

/// Unit-norm embedding of one cropped union region, tagged with the
/// (scene, query) it describes.
struct PairEmbedding {
    std::string scene_id;
    int query = -1;
    std::vector<double> vec;
};

/// Unit-norm text embeddings, one row per HOI category in vocabulary order.
struct TextEmbeddingSet {
    std::vector<std::vector<double>> rows;
};

/// Masked temperature-softmax distribution over all actions. Entries off
/// the valid support are exactly zero.
struct ActionDistribution {
    std::vector<double> p;
    std::vector<int> support;  // action indices with nonzero mass allowed
};

enum class Restriction { kAll, kUnseenOnly };

struct DistillConfig {
    double gamma = 100.0;
    Restriction restriction = Restriction::kAll;
};

/// The fixed prompt template with verbatim substitution.
/// Throws std::invalid_argument on an empty name.
std::string hoi_prompt(const std::string& action_name, const std::string& object_name);

/// Plain cosine similarity. Throws std::invalid_argument on dimension
/// mismatch or a zero-norm vector.
double cosine_similarity(std::span<const double> v, std::span<const double> t);

/// Per-HOI similarities for one pair embedding against every text row.
std::vector<double> hoi_similarities(const PairEmbedding& v, const TextEmbeddingSet& t);

/// Masked temperature softmax over the HOI entries of the given object:
/// support is every action valid for the object (intersected with the
/// unseen set under unseen-only restriction); within the support
/// p = softmax(gamma * s), outside it exactly zero.
/// Throws std::domain_error when the support is empty (interaction-free
/// object under the current restriction) and std::invalid_argument on
/// inconsistent inputs.
ActionDistribution distill_target(std::span<const double> similarities, int object_category,
                                  const Vocabulary& vocab, const ValidityMatrix& validity,
                                  const DistillConfig& config);

/// distill_target with restriction fixed to all, returned as a plain
/// per-action score vector for detection scoring.
std::vector<double> clip_classify(std::span<const double> similarities, int object_category,
                                  const Vocabulary& vocab, const ValidityMatrix& validity,
                                  double gamma);

}  // namespace hoi
