/*
   Copyright 2026 The footprint-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOOTPRINT_LINEAR_ALGEBRA_HPP
#define FOOTPRINT_LINEAR_ALGEBRA_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"
#include "integer.hpp"

namespace footprint {

using Row = std::vector<Element>;
using Matrix = std::vector<Row>;

/// Row-reduces `a` in place to reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(const FiniteField& field, Matrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int cols = static_cast<int>(a.front().size());
    std::size_t top = 0;
    for (int c = 0; c < cols && top < a.size(); ++c) {
        std::size_t sel = top;
        while (sel < a.size() && a[sel][static_cast<std::size_t>(c)] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[top], a[sel]);
        const Element scale = field.inv(a[top][static_cast<std::size_t>(c)]);
        for (auto& v : a[top]) v = field.mul(v, scale);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == top) continue;
            const Element f = a[i][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int k = 0; k < cols; ++k)
                a[i][static_cast<std::size_t>(k)] =
                    field.sub(a[i][static_cast<std::size_t>(k)], field.mul(f, a[top][static_cast<std::size_t>(k)]));
        }
        pivots.push_back(c);
        ++top;
    }
    return pivots;
}

inline std::size_t rank(const FiniteField& field, Matrix a) { return rref(field, a).size(); }

/// The rows of a combined through `coefficients` (r x rows(a)).
inline Matrix combine(const FiniteField& field, const Matrix& coefficients, const Matrix& a) {
    Matrix out;
    for (const auto& c : coefficients) {
        Row row(a.empty() ? 0 : a.front().size(), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (std::size_t k = 0; k < row.size(); ++k) row[k] = field.add(row[k], field.mul(c[i], a[i][k]));
        }
        out.push_back(std::move(row));
    }
    return out;
}

/// Evaluation budget: FOOTPRINT_LAB_BUDGET when set, else 10^8.
inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("FOOTPRINT_LAB_BUDGET")) {
        char* end = nullptr;
        const auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
    }
    return 100'000'000ULL;
}

/// Throws BudgetExceeded unless candidates * cost_each fits in the budget.
inline void check_budget(const Integer& candidates, std::uint64_t cost_each, std::uint64_t budget) {
    const Integer required = candidates * std::max<std::uint64_t>(cost_each, 1);
    if (required > budget) throw BudgetExceeded(to_string(required), to_string(candidates), budget);
}

/// One r-dimensional subspace of F_q^n in canonical reduced row echelon form.
struct SubspaceView {
    const Matrix& rows;
    const std::vector<int>& pivots;
    std::uint64_t ordinal;  // position in the canonical enumeration
};

struct SubspaceBest {
    std::int64_t value = 0;
    Matrix rows;
    std::vector<int> pivots;
    std::uint64_t ordinal = 0;
    std::uint64_t enumerated = 0;
};

namespace detail {

// Pivot sets in lex order; each block holds q^free subspaces.
struct PivotBlock {
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free;  // (row, column) of each free entry
    std::uint64_t size;
    std::uint64_t offset;
};

inline std::vector<PivotBlock> pivot_blocks(int n, int r, int q) {
    std::vector<PivotBlock> blocks;
    std::vector<int> piv(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) piv[static_cast<std::size_t>(i)] = i;
    std::uint64_t offset = 0;
    while (true) {
        PivotBlock block{piv, {}, 1, offset};
        for (int i = 0; i < r; ++i)
            for (int c = piv[static_cast<std::size_t>(i)] + 1; c < n; ++c)
                if (!std::binary_search(piv.begin(), piv.end(), c)) {
                    block.free.emplace_back(i, c);
                    block.size *= static_cast<std::uint64_t>(q);
                }
        offset += block.size;
        blocks.push_back(std::move(block));
        int i = r - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++piv[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < r; ++k) piv[static_cast<std::size_t>(k)] = piv[static_cast<std::size_t>(k - 1)] + 1;
    }
    return blocks;
}

}  // namespace detail

/**
 * Visits every r-dimensional subspace of F_q^n once, through its canonical
 * RREF basis, and keeps the best score (largest if `maximize`, else smallest).
 * Ties go to the smallest ordinal, so the result does not depend on `workers`.
 * `score` is called concurrently and must not mutate shared state unguarded.
 */
inline SubspaceBest best_subspace(const FiniteField& field, int n, int r,
                                  const std::function<std::int64_t(const SubspaceView&)>& score, bool maximize,
                                  unsigned workers = 1) {
    if (r < 1 || r > n) throw OutOfRange("subspace dimension must lie in 1.." + std::to_string(n));
    const auto elements = field.elements();
    const auto blocks = detail::pivot_blocks(n, r, field.order());
    const std::uint64_t total = blocks.back().offset + blocks.back().size;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));

    auto run = [&](std::uint64_t begin, std::uint64_t end, SubspaceBest& best) {
        bool have = false;
        Matrix rows(static_cast<std::size_t>(r), Row(static_cast<std::size_t>(n), 0));
        std::vector<std::size_t> digits;
        for (const auto& block : blocks) {
            if (block.offset + block.size <= begin || block.offset >= end) continue;
            for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
            for (int i = 0; i < r; ++i)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(block.pivots[static_cast<std::size_t>(i)])] = 1;
            std::uint64_t local = begin > block.offset ? begin - block.offset : 0;
            const std::uint64_t stop = std::min(end - block.offset, block.size);
            digits.assign(block.free.size(), 0);
            std::uint64_t rest = local;  // the last free entry varies fastest
            for (std::size_t k = block.free.size(); k-- > 0;) {
                digits[k] = static_cast<std::size_t>(rest % static_cast<std::uint64_t>(field.order()));
                rest /= static_cast<std::uint64_t>(field.order());
            }
            for (; local < stop; ++local) {
                for (std::size_t k = 0; k < block.free.size(); ++k)
                    rows[static_cast<std::size_t>(block.free[k].first)][static_cast<std::size_t>(block.free[k].second)] =
                        elements[digits[k]];
                const std::uint64_t ordinal = block.offset + local;
                const auto value = score(SubspaceView{rows, block.pivots, ordinal});
                ++best.enumerated;
                if (!have || (maximize ? value > best.value : value < best.value)) {
                    have = true;
                    best.value = value;
                    best.rows = rows;
                    best.pivots = block.pivots;
                    best.ordinal = ordinal;
                }
                for (std::size_t k = digits.size(); k-- > 0;) {
                    if (++digits[k] < elements.size()) break;
                    digits[k] = 0;
                }
            }
        }
    };

    std::vector<SubspaceBest> partial(workers);
    if (workers == 1) {
        run(0, total, partial[0]);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back(run, total * w / workers, total * (w + 1) / workers, std::ref(partial[w]));
        for (auto& t : threads) t.join();
    }
    SubspaceBest best = partial[0];
    for (unsigned w = 1; w < workers; ++w) {
        const auto& p = partial[w];
        best.enumerated += p.enumerated;
        if (p.enumerated == 0) continue;
        if (maximize ? p.value > best.value : p.value < best.value) {
            const auto count = best.enumerated;
            best = p;
            best.enumerated = count;
        }
    }
    return best;
}

}  // namespace footprint

#endif
