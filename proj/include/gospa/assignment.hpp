/*
 * Copyright 2026 The gospa Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gospa {

/// Dense rectangular matrix of nonnegative finite costs, row-major storage.
class CostMatrix {
public:
    CostMatrix() = default;
    CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Builds from nested rows; throws std::invalid_argument on ragged input.
    static CostMatrix from_rows(const std::vector<std::vector<double>>& rows);

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// One-to-one pairing between rows and columns plus its total objective.
/// `pairs` is sorted by row index; `total_cost` is recomputed from the
/// selected entries (and penalties, for partial assignments), never taken
/// from solver internals.
struct AssignmentResult {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double total_cost = 0.0;
};

/// Exact min-cost assignment of every row to a distinct column.
/// Requires rows <= cols and finite nonnegative entries.
AssignmentResult solve_full_assignment(const CostMatrix& costs);

/// Exact minimiser of
///     sum of selected entries + unassigned_penalty * (rows + cols - 2 * |pairs|)
/// over all partial one-to-one pairings. A pair costing more than twice the
/// penalty is never selected; a pair costing exactly twice the penalty is
/// left unassigned (ties resolve toward fewer pairs).
AssignmentResult solve_partial_assignment(const CostMatrix& costs, double unassigned_penalty);

/// Same contract as solve_partial_assignment, computed by exhaustive
/// enumeration of every pairing. Ties resolve toward fewer pairs, then the
/// lexicographically smallest pair list. Capped at 8x8.
AssignmentResult brute_force_assignment(const CostMatrix& costs, double unassigned_penalty);

} // namespace gospa
