// SPDX-License-Identifier: Apache-2.0
#include "hoi/distillation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hoi {

int Vocabulary::num_seen_actions() const {
    int k = 0;
    for (std::uint8_t u : action_unseen) {
        if (u == 0) ++k;
    }
    return k;
}

int Vocabulary::hoi_index(int action, int object) const {
    for (int i = 0; i < num_hois(); ++i) {
        if (hois[i].first == action && hois[i].second == object) return i;
    }
    return -1;
}

void validate_vocabulary(const Vocabulary& vocab) {
    if (vocab.action_unseen.size() != vocab.actions.size()) {
        throw std::invalid_argument("vocabulary: seen markers do not cover the actions");
    }
    bool saw_unseen = false;
    for (std::uint8_t u : vocab.action_unseen) {
        if (u != 0) {
            saw_unseen = true;
        } else if (saw_unseen) {
            throw std::invalid_argument("vocabulary: actions must be ordered seen first");
        }
    }
    std::set<std::pair<int, int>> uniq;
    for (const auto& [a, o] : vocab.hois) {
        if (a < 0 || a >= vocab.num_actions() || o < 0 || o >= vocab.num_objects()) {
            throw std::invalid_argument("vocabulary: hoi references an unknown action or object");
        }
        if (!uniq.insert({a, o}).second) {
            throw std::invalid_argument("vocabulary: duplicate hoi category");
        }
    }
}

ValidityMatrix ValidityMatrix::all_valid(int num_actions, int num_objects) {
    ValidityMatrix m;
    m.num_actions = num_actions;
    m.num_objects = num_objects;
    m.valid.assign(static_cast<std::size_t>(num_actions) * num_objects, 1);
    return m;
}

bool ValidityMatrix::interaction_free(int object) const {
    for (int a = 0; a < num_actions; ++a) {
        if (is_valid(a, object)) return false;
    }
    return true;
}

std::string hoi_prompt(const std::string& action_name, const std::string& object_name) {
    if (action_name.empty() || object_name.empty()) {
        throw std::invalid_argument("prompt names must be non-empty");
    }
    return "a picture of person " + action_name + " " + object_name;
}

double cosine_similarity(std::span<const double> v, std::span<const double> t) {
    if (v.size() != t.size()) throw std::invalid_argument("embedding dimension mismatch");
    if (v.empty()) throw std::invalid_argument("empty embedding");
    double dot = 0.0, nv = 0.0, nt = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        dot += v[i] * t[i];
        nv += v[i] * v[i];
        nt += t[i] * t[i];
    }
    if (nv == 0.0 || nt == 0.0) throw std::invalid_argument("zero-norm embedding");
    return dot / (std::sqrt(nv) * std::sqrt(nt));
}

std::vector<double> hoi_similarities(const PairEmbedding& v, const TextEmbeddingSet& t) {
    std::vector<double> sims;
    sims.reserve(t.rows.size());
    for (const auto& row : t.rows) sims.push_back(cosine_similarity(v.vec, row));
    return sims;
}

ActionDistribution distill_target(std::span<const double> similarities, int object_category,
                                  const Vocabulary& vocab, const ValidityMatrix& validity,
                                  const DistillConfig& config) {
    if (config.gamma <= 0.0) throw std::invalid_argument("gamma must be positive");
    if (object_category < 0 || object_category >= vocab.num_objects()) {
        throw std::invalid_argument("object category unknown to the vocabulary");
    }
    if (static_cast<int>(similarities.size()) != vocab.num_hois()) {
        throw std::invalid_argument("similarity vector not aligned with the hoi list");
    }
    if (validity.num_actions != vocab.num_actions() || validity.num_objects != vocab.num_objects()) {
        throw std::invalid_argument("validity matrix not aligned with the vocabulary");
    }

    ActionDistribution dist;
    dist.p.assign(vocab.num_actions(), 0.0);
    std::vector<double> logits;  // gamma * similarity per supported action
    for (int a = 0; a < vocab.num_actions(); ++a) {
        if (!validity.is_valid(a, object_category)) continue;
        if (config.restriction == Restriction::kUnseenOnly && !vocab.is_unseen_action(a)) continue;
        const int hoi = vocab.hoi_index(a, object_category);
        if (hoi < 0) {
            throw std::invalid_argument("valid action-object combination missing from the hoi list");
        }
        dist.support.push_back(a);
        logits.push_back(config.gamma * similarities[hoi]);
    }
    if (dist.support.empty()) {
        throw std::domain_error("interaction-free object under the current restriction");
    }

    // Max-subtracted softmax; exp(gamma * s) overflows the naive form.
    const double peak = *std::max_element(logits.begin(), logits.end());
    double z = 0.0;
    for (double& l : logits) {
        l = std::exp(l - peak);
        z += l;
    }
    for (std::size_t i = 0; i < dist.support.size(); ++i) dist.p[dist.support[i]] = logits[i] / z;
    return dist;
}

std::vector<double> clip_classify(std::span<const double> similarities, int object_category,
                                  const Vocabulary& vocab, const ValidityMatrix& validity,
                                  double gamma) {
    DistillConfig config;
    config.gamma = gamma;
    config.restriction = Restriction::kAll;
    return distill_target(similarities, object_category, vocab, validity, config).p;
}

}  // namespace hoi
