// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "hoi/scene.hpp"

namespace hoi {

/// Multipliers for the four matching-cost terms. Defaults follow the
/// training loss weights; the values inherited by the base detector live
/// in its own configuration, not here.
struct CostWeights {
    double w_bbox = 2.5;
    double w_giou = 1.0;
    double w_obj = 1.0;
    double w_act = 1.0;
};

enum class CostMode {
    kFull,       // box + giou + object-class + action costs
    kActionFree  // box + giou + object-class only
};

/// Dense rectangular cost table with maps back to external ids.
/// Solvers require rows >= cols and finite entries.
struct CostMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;  // row-major, rows*cols
    std::vector<int> row_ids;    // external id per row
    std::vector<int> col_ids;    // external id per column

    static CostMatrix zeros(int rows, int cols);

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
};

/// A partial injection of columns into rows: every column assigned exactly
/// once, every row at most once. Pairs are kept sorted by (row, col).
struct Assignment {
    std::vector<std::pair<int, int>> pairs;  // (row, col)
    double total_cost = 0.0;
};

/// Canonical total of an assignment: entries summed in ascending column
/// order. Both solvers report and compare totals this way so that exact
/// ties break identically.
double assignment_total(const CostMatrix& cost, const std::vector<std::pair<int, int>>& pairs);

/// Matching cost between one prediction and one target.
/// Full mode:        w_bbox*(L1_h+L1_o) + w_giou*((1-giou_h)+(1-giou_o))
///                   + w_obj*(-obj_score[gt]) + w_act*action_bce
/// Action-free mode: drops the action term.
/// Throws std::invalid_argument in full mode when the target has no action
/// labels, or when score vectors are too short for the referenced indices.
double pair_cost(const Prediction& pred, const PairTarget& target, const CostWeights& weights,
                 CostMode mode);

/// Exact minimum-cost assignment of every column to a distinct row.
/// Deterministic: among equal-cost optima (canonical totals comparing
/// equal) returns the lexicographically smallest (row, col) sequence.
/// Empty matrix yields an empty assignment; non-finite entries throw.
Assignment hungarian(const CostMatrix& cost);

/// Exhaustive minimum over all injections of columns into rows, same
/// tie-break rule as hungarian(). Refuses cols > 8.
Assignment brute_force_assignment(const CostMatrix& cost);

}  // namespace hoi
