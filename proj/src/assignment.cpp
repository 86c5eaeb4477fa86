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
#include "gospa/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gospa {

namespace {

void validate_entries(const CostMatrix& costs) {
    for (std::size_t i = 0; i < costs.rows(); ++i) {
        for (std::size_t j = 0; j < costs.cols(); ++j) {
            const double v = costs(i, j);
            if (!std::isfinite(v) || v < 0.0) {
                throw std::invalid_argument("cost matrix entries must be finite and >= 0");
            }
        }
    }
}

// Shortest-augmenting-path solver (Jonker-Volgenant / Kuhn-Munkres family)
// for rows <= cols. col_of_row[i] is the column matched to row i.
// O(rows * cols^2).
std::vector<std::size_t> shortest_path_assignment(const CostMatrix& costs) {
    const int m = static_cast<int>(costs.rows());
    const int n = static_cast<int>(costs.cols());
    constexpr double kInf = std::numeric_limits<double>::infinity();

    // 1-based potentials and matching, index 0 is the virtual start column.
    std::vector<double> u(m + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> row_of_col(n + 1, 0), way(n + 1, 0);

    for (int i = 1; i <= m; ++i) {
        row_of_col[0] = i;
        int j0 = 0;
        std::vector<double> min_reduced(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = row_of_col[j0];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = costs(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < min_reduced[j]) {
                    min_reduced[j] = cur;
                    way[j] = j0;
                }
                if (min_reduced[j] < delta) {
                    delta = min_reduced[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[row_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_reduced[j] -= delta;
                }
            }
            j0 = j1;
        } while (row_of_col[j0] != 0);
        do {
            const int j1 = way[j0];
            row_of_col[j0] = row_of_col[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<std::size_t> col_of_row(m, 0);
    for (int j = 1; j <= n; ++j) {
        if (row_of_col[j] != 0) col_of_row[row_of_col[j] - 1] = static_cast<std::size_t>(j - 1);
    }
    return col_of_row;
}

struct Candidate {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double total = 0.0;
    bool valid = false;
};

// Canonical order among equal-cost pairings: fewer pairs first, then the
// lexicographically smaller sorted pair list.
bool preferred(const Candidate& a, const Candidate& b) {
    if (!b.valid) return true;
    if (a.total != b.total) return a.total < b.total;
    if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
    return a.pairs < b.pairs;
}

void enumerate_pairings(const CostMatrix& costs, double penalty, std::size_t row,
                        std::vector<int>& col_taken,
                        std::vector<std::pair<std::size_t, std::size_t>>& current,
                        Candidate& best) {
    const std::size_t m = costs.rows();
    const std::size_t n = costs.cols();
    if (row == m) {
        double total = 0.0;
        for (const auto& [i, j] : current) total += costs(i, j);
        total += penalty * static_cast<double>(m + n - 2 * current.size());
        Candidate cand{current, total, true};
        if (preferred(cand, best)) best = std::move(cand);
        return;
    }
    // Row left unassigned first, so equal-cost searches land on fewer pairs.
    enumerate_pairings(costs, penalty, row + 1, col_taken, current, best);
    for (std::size_t j = 0; j < n; ++j) {
        if (col_taken[j]) continue;
        col_taken[j] = 1;
        current.emplace_back(row, j);
        enumerate_pairings(costs, penalty, row + 1, col_taken, current, best);
        current.pop_back();
        col_taken[j] = 0;
    }
}

} // namespace

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.front().size();
    CostMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("ragged cost matrix rows");
        for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][j];
    }
    return out;
}

AssignmentResult solve_full_assignment(const CostMatrix& costs) {
    if (costs.rows() > costs.cols()) {
        throw std::invalid_argument("solve_full_assignment requires rows <= cols");
    }
    validate_entries(costs);

    AssignmentResult result;
    if (costs.rows() == 0) return result;

    const auto col_of_row = shortest_path_assignment(costs);
    for (std::size_t i = 0; i < costs.rows(); ++i) {
        result.pairs.emplace_back(i, col_of_row[i]);
        result.total_cost += costs(i, col_of_row[i]);
    }
    return result;
}

AssignmentResult solve_partial_assignment(const CostMatrix& costs, double unassigned_penalty) {
    if (!std::isfinite(unassigned_penalty) || unassigned_penalty < 0.0) {
        throw std::invalid_argument("unassigned_penalty must be finite and >= 0");
    }
    validate_entries(costs);

    const std::size_t m = costs.rows();
    const std::size_t n = costs.cols();

    AssignmentResult result;
    if (m == 0 || n == 0) {
        result.total_cost = unassigned_penalty * static_cast<double>(m + n);
        return result;
    }

    // Augment to a square (m+n) x (m+n) problem: each row/column gets a
    // dedicated dummy partner priced at the penalty, dummy-dummy pairs are
    // free. Pairs that cannot beat two penalties are priced out up front,
    // which also breaks exact ties toward unassignment.
    const double drop_threshold = 2.0 * unassigned_penalty;
    double real_sum = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) real_sum += costs(i, j);
    const double big = real_sum + unassigned_penalty * static_cast<double>(m + n) + 1.0;

    const std::size_t k = m + n;
    CostMatrix augmented(k, k, big);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (costs(i, j) < drop_threshold) augmented(i, j) = costs(i, j);
        }
        augmented(i, n + i) = unassigned_penalty;
    }
    for (std::size_t j = 0; j < n; ++j) augmented(m + j, j) = unassigned_penalty;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) augmented(m + j, n + i) = 0.0;

    const auto col_of_row = shortest_path_assignment(augmented);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = col_of_row[i];
        if (j < n) {
            result.pairs.emplace_back(i, j);
            result.total_cost += costs(i, j);
        }
    }
    result.total_cost +=
        unassigned_penalty * static_cast<double>(m + n - 2 * result.pairs.size());
    return result;
}

AssignmentResult brute_force_assignment(const CostMatrix& costs, double unassigned_penalty) {
    if (costs.rows() > 8 || costs.cols() > 8) {
        throw std::invalid_argument("brute_force_assignment is capped at 8x8");
    }
    if (!std::isfinite(unassigned_penalty) || unassigned_penalty < 0.0) {
        throw std::invalid_argument("unassigned_penalty must be finite and >= 0");
    }
    validate_entries(costs);

    Candidate best;
    std::vector<int> col_taken(costs.cols(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> current;
    enumerate_pairings(costs, unassigned_penalty, 0, col_taken, current, best);

    AssignmentResult result;
    result.pairs = std::move(best.pairs);
    result.total_cost = best.total;
    return result;
}

} // namespace gospa
