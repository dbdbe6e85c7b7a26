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

#ifndef FOOTPRINT_PRM_CODE_HPP
#define FOOTPRINT_PRM_CODE_HPP

#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "formulas.hpp"
#include "linear_algebra.hpp"
#include "projective_space.hpp"
#include "search.hpp"

namespace footprint {

/// Linear code over F_q given by a generator matrix.  For projective Reed-Muller
/// codes the rows are the reduced degree-d monomials in descending lex and the
/// columns the canonical points in enumeration order.
struct LinearCode {
    int q = 0;
    int d = 0;
    int m = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix generator;
    MonomialSet rows;
    std::vector<ProjectivePoint> points;
};

/// PRM_q(d, m) = evaluations of the degree-d forms at the points of P^m(F_q).
/// Any d >= 1 is accepted; beyond m(q-1) the code is all of F_q^n.
inline LinearCode build_prm(int d, int m, int q) {
    if (d < 1 || m < 1) throw OutOfRange("PRM code needs d >= 1 and m >= 1");
    const FiniteField field(q);
    LinearCode code;
    code.q = q;
    code.d = d;
    code.m = m;
    code.rows = enumerate_reduced(m, q, d);
    code.points = enumerate_projective_points(m, field);
    std::vector<std::vector<Element>> coords;
    for (const auto& p : code.points) coords.push_back(p.coords());
    const auto table = detail::evaluation_table(field, code.rows, coords);
    code.generator.assign(code.rows.size(), Row(code.points.size(), 0));
    for (std::size_t p = 0; p < table.size(); ++p)
        for (std::size_t i = 0; i < code.rows.size(); ++i) code.generator[i][p] = table[p][i];
    code.n = code.points.size();
    code.k = code.rows.size();
    return code;
}

/// Support size of the subcode spanned by `basis` (r combinations of generator rows).
inline std::size_t subspace_weight(const LinearCode& code, const Matrix& basis) {
    const FiniteField field(code.q);
    for (const auto& row : basis)
        if (row.size() != code.k) throw DependentBasis("combination vector has the wrong length");
    if (basis.empty() || rank(field, basis) != basis.size())
        throw DependentBasis("basis vectors must be nonempty and linearly independent");
    const auto words = combine(field, basis, code.generator);
    std::size_t support = 0;
    for (std::size_t c = 0; c < code.n; ++c) {
        bool nonzero = false;
        for (const auto& w : words) nonzero = nonzero || w[c] != 0;
        support += nonzero;
    }
    return support;
}

struct GhwResult {
    std::int64_t value = 0;
    Matrix basis;  // RREF over the message space
    std::uint64_t subspaces_enumerated = 0;
};

/// d_r(C): the smallest support of an r-dimensional subcode, by exhausting the
/// r-dimensional subspaces of the message space.
inline GhwResult ghw_exhaustive(const LinearCode& code, int r, const SearchOptions& options = {}) {
    const FiniteField field(code.q);
    const int k = static_cast<int>(code.k);
    if (r < 1 || r > k) throw OutOfRange("r must lie in 1.." + std::to_string(k));
    check_budget(gaussian_binomial(k, r, code.q), code.n, options.budget);
    // Column c of the generator is the evaluation vector at point c.
    Matrix columns(code.n, Row(code.k, 0));
    for (std::size_t i = 0; i < code.k; ++i)
        for (std::size_t c = 0; c < code.n; ++c) columns[c][i] = code.generator[i][c];
    auto score = [&](const SubspaceView& view) -> std::int64_t {
        return static_cast<std::int64_t>(code.n - detail::common_zeros(field, view.rows, columns));
    };
    const auto best = best_subspace(field, k, r, score, false, options.workers);
    return {best.value, best.rows, best.enumerated};
}

struct DualityRow {
    int r = 0;
    std::int64_t ghw = 0;      // d_r(PRM_q(d, m))
    std::int64_t e_bar = 0;    // reduced-form maximum
    std::optional<std::int64_t> e_shifted;  // all-form maximum at rank r + r_d, when in range
    bool holds = false;
};

struct DualityReport {
    int q = 0, d = 0, m = 0;
    Integer r_d;
    Integer points;
    std::vector<DualityRow> rows;
    bool passed = true;
};

/// d_r + e_bar_r = p_m for r = 1..r_max, plus e_{r + r_d} = e_bar_r in the all-form space.
inline DualityReport check_duality(int d, int m, int q, int r_max, const SearchOptions& options = {}) {
    const auto code = build_prm(d, m, q);
    DualityReport report{q, d, m, gamma_dim(d, m, q), projective_count(m, q), {}, true};
    const auto shift = to_int64(report.r_d);
    const auto forms = binomial(m + d, d);
    for (int r = 1; r <= r_max; ++r) {
        DualityRow row;
        row.r = r;
        row.ghw = ghw_exhaustive(code, r, options).value;
        row.e_bar = brute_force_er(r, d, m, q, ErMode::projective_reduced, options).value;
        row.holds = Integer(row.ghw + row.e_bar) == report.points;
        if (Integer(r + shift) <= forms) {
            row.e_shifted = brute_force_er(r + static_cast<int>(shift), d, m, q, ErMode::all_homogeneous, options).value;
            row.holds = row.holds && *row.e_shifted == row.e_bar;
        }
        report.passed = report.passed && row.holds;
        report.rows.push_back(row);
    }
    return report;
}

/// Generator matrix as CSV: one line per row, integer-encoded field elements.
inline std::string generator_csv(const LinearCode& code) {
    std::ostringstream out;
    for (const auto& row : code.generator) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << "\n";
    }
    return out.str();
}

}  // namespace footprint

#endif
