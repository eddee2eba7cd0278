// SPDX-License-Identifier: Apache-2.0
#include "hoi/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hoi {

namespace {

constexpr double kEps = 1e-7;  // log clamp shared with the loss module

double binary_ce(double target, double score) {
    // Exact 0 at the hard endpoints: zero coefficients kill the clamped log.
    double loss = 0.0;
    if (target > 0.0) loss -= target * std::log(std::max(score, kEps));
    if (target < 1.0) loss -= (1.0 - target) * std::log(std::max(1.0 - score, kEps));
    return loss;
}

void validate_matrix(const CostMatrix& cost) {
    if (cost.rows < 0 || cost.cols < 0) throw std::invalid_argument("negative matrix dimensions");
    if (cost.rows < cost.cols) throw std::invalid_argument("cost matrix needs rows >= cols");
    if (cost.values.size() != static_cast<std::size_t>(cost.rows) * cost.cols) {
        throw std::invalid_argument("cost matrix storage does not match dimensions");
    }
    for (double v : cost.values) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite cost entry");
    }
}

// Jonker-Volgenant shortest augmenting paths. Assigns every column to a
// distinct row (rows >= cols). Returns row index per column.
std::vector<int> jv_solve(const CostMatrix& cost) {
    const int n = cost.cols;  // augmented one column at a time
    const int m = cost.rows;
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0), minv(m + 1);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = inf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost.at(j - 1, i0 - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> col_to_row(n, -1);
    for (int j = 1; j <= m; ++j) {
        if (p[j] != 0) col_to_row[p[j] - 1] = j - 1;
    }
    return col_to_row;
}

std::vector<std::pair<int, int>> jv_pairs(const CostMatrix& cost) {
    const auto col_to_row = jv_solve(cost);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(cost.cols);
    for (int c = 0; c < cost.cols; ++c) pairs.emplace_back(col_to_row[c], c);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace

CostMatrix CostMatrix::zeros(int rows, int cols) {
    CostMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.values.assign(static_cast<std::size_t>(rows) * cols, 0.0);
    m.row_ids.resize(rows);
    m.col_ids.resize(cols);
    for (int r = 0; r < rows; ++r) m.row_ids[r] = r;
    for (int c = 0; c < cols; ++c) m.col_ids[c] = c;
    return m;
}

double assignment_total(const CostMatrix& cost, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::pair<int, int>> by_col(pairs);  // (col, row)
    for (auto& p : by_col) std::swap(p.first, p.second);
    std::sort(by_col.begin(), by_col.end());
    double total = 0.0;
    for (const auto& [c, r] : by_col) total += cost.at(r, c);
    return total;
}

double pair_cost(const Prediction& pred, const PairTarget& target, const CostWeights& weights,
                 CostMode mode) {
    const double box_term =
        l1_box_cost(pred.human_center, target.human_center) +
        l1_box_cost(pred.object_center, target.object_center);
    const double giou_term =
        (1.0 - giou(pred.human, target.human)) + (1.0 - giou(pred.object, target.object));

    if (target.object_category < 0 ||
        target.object_category >= static_cast<int>(pred.object_scores.size())) {
        throw std::invalid_argument("target object category outside prediction score vector");
    }
    const double obj_term = -pred.object_scores[target.object_category];

    double cost = weights.w_bbox * box_term + weights.w_giou * giou_term + weights.w_obj * obj_term;

    if (mode == CostMode::kFull) {
        if (!target.has_actions()) {
            throw std::invalid_argument("full-mode cost requires target action labels");
        }
        const std::size_t k = target.actions.size();
        if (pred.action_scores.size() < k) {
            throw std::invalid_argument("prediction action scores shorter than seen action set");
        }
        double action_bce = 0.0;
        for (std::size_t a = 0; a < k; ++a) {
            action_bce += binary_ce(target.actions[a] ? 1.0 : 0.0, pred.action_scores[a]);
        }
        cost += weights.w_act * action_bce / static_cast<double>(k);
    }
    return cost;
}

Assignment hungarian(const CostMatrix& cost) {
    validate_matrix(cost);
    Assignment result;
    if (cost.cols == 0) return result;

    // Optimal total first, then a greedy lexicographic refinement: fix the
    // smallest (row, col) at a time, keeping the canonical total optimal.
    // Each candidate check solves the reduced problem without the fixed
    // rows/cols; matrices here are small (cols is the target count).
    std::vector<std::pair<int, int>> best_pairs = jv_pairs(cost);
    double best_total = assignment_total(cost, best_pairs);

    std::vector<std::pair<int, int>> fixed;
    std::vector<char> row_fixed(cost.rows, 0), col_fixed(cost.cols, 0);

    auto reduced_candidate = [&](int r, int c) {
        std::vector<int> rows_left, cols_left;
        for (int i = 0; i < cost.rows; ++i) {
            if (!row_fixed[i] && i != r) rows_left.push_back(i);
        }
        for (int j = 0; j < cost.cols; ++j) {
            if (!col_fixed[j] && j != c) cols_left.push_back(j);
        }
        CostMatrix sub = CostMatrix::zeros(static_cast<int>(rows_left.size()),
                                           static_cast<int>(cols_left.size()));
        for (int i = 0; i < sub.rows; ++i) {
            for (int j = 0; j < sub.cols; ++j) sub.at(i, j) = cost.at(rows_left[i], cols_left[j]);
        }
        std::vector<std::pair<int, int>> candidate(fixed);
        candidate.emplace_back(r, c);
        if (sub.cols > 0) {
            for (const auto& [sr, sc] : jv_pairs(sub)) {
                candidate.emplace_back(rows_left[sr], cols_left[sc]);
            }
        }
        return candidate;
    };

    for (int r = 0; r < cost.rows && static_cast<int>(fixed.size()) < cost.cols; ++r) {
        for (int c = 0; c < cost.cols; ++c) {
            if (col_fixed[c]) continue;
            auto candidate = reduced_candidate(r, c);
            const double total = assignment_total(cost, candidate);
            if (total <= best_total) {
                best_total = total;
                fixed.emplace_back(r, c);
                row_fixed[r] = 1;
                col_fixed[c] = 1;
                break;
            }
        }
    }

    std::sort(fixed.begin(), fixed.end());
    result.pairs = std::move(fixed);
    result.total_cost = assignment_total(cost, result.pairs);
    return result;
}

Assignment brute_force_assignment(const CostMatrix& cost) {
    validate_matrix(cost);
    if (cost.cols > 8) throw std::invalid_argument("brute force refuses more than 8 columns");
    Assignment best;
    if (cost.cols == 0) return best;

    // DFS over rows in increasing order; at each row try every remaining
    // column in increasing order, then the skip branch. Complete
    // assignments are therefore visited in lexicographic (row, col)
    // sequence order, so keeping strict improvements yields the
    // lexicographically smallest optimum.
    std::vector<int> remaining_cols(cost.cols);
    for (int c = 0; c < cost.cols; ++c) remaining_cols[c] = c;
    std::vector<std::pair<int, int>> current;
    double best_total = std::numeric_limits<double>::infinity();
    bool found = false;

    auto dfs = [&](auto&& self, int row) -> void {
        if (remaining_cols.empty()) {
            const double total = assignment_total(cost, current);
            if (!found || total < best_total) {
                found = true;
                best_total = total;
                best.pairs = current;
            }
            return;
        }
        if (cost.rows - row < static_cast<int>(remaining_cols.size())) return;
        for (std::size_t i = 0; i < remaining_cols.size(); ++i) {
            const int c = remaining_cols[i];
            remaining_cols.erase(remaining_cols.begin() + static_cast<std::ptrdiff_t>(i));
            current.emplace_back(row, c);
            self(self, row + 1);
            current.pop_back();
            remaining_cols.insert(remaining_cols.begin() + static_cast<std::ptrdiff_t>(i), c);
        }
        self(self, row + 1);  // skip this row
    };
    dfs(dfs, 0);

    std::sort(best.pairs.begin(), best.pairs.end());
    best.total_cost = assignment_total(cost, best.pairs);
    return best;
}

}  // namespace hoi
