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

#include <gtest/gtest.h>

#include "footprint/prm_code.hpp"
#include "oracles.hpp"

using namespace footprint;

TEST(PrmCode, Shapes) {
    const auto a = build_prm(2, 2, 3);
    EXPECT_EQ(a.n, 13u);
    EXPECT_EQ(a.k, 6u);
    EXPECT_EQ(a.generator.size(), 6u);
    EXPECT_EQ(rank(FiniteField(3), a.generator), 6u);
    const auto b = build_prm(3, 1, 2);
    EXPECT_EQ(b.n, 3u);
    EXPECT_EQ(b.k, 3u);
    const auto c = build_prm(1, 2, 2);
    EXPECT_EQ(c.n, 7u);
    EXPECT_EQ(c.k, 3u);
    EXPECT_EQ(to_string(c.rows[0]), "x0");
    EXPECT_THROW(build_prm(0, 2, 3), OutOfRange);
}

TEST(PrmCode, DimensionMatchesClosedForm) {
    for (int q : {2, 3, 4, 5})
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d <= m * (q - 1); ++d) {
                const auto code = build_prm(d, m, q);
                EXPECT_EQ(Integer(code.k), sorensen_dim(d, m, q)) << q << d << m;
                EXPECT_EQ(static_cast<std::int64_t>(code.n), oracle::p(m, q));
                EXPECT_EQ(rank(FiniteField(q), code.generator), code.k);
            }
}

TEST(PrmCode, GeneratorEntriesAreEvaluations) {
    const FiniteField field(3);
    const auto code = build_prm(2, 2, 3);
    for (std::size_t i = 0; i < code.k; ++i)
        for (std::size_t c = 0; c < code.n; ++c) {
            HomogeneousPolynomial f(3, 2);
            f.add_term(field, code.rows[i], 1);
            EXPECT_EQ(code.generator[i][c], f.evaluate(field, code.points[c].coords()));
        }
}

TEST(PrmCode, SubspaceWeight) {
    const auto code = build_prm(1, 2, 3);
    EXPECT_EQ(subspace_weight(code, {{1, 0, 0}}), 9u);
    EXPECT_EQ(subspace_weight(code, {{0, 0, 1}}), 9u);
    EXPECT_EQ(subspace_weight(code, {{1, 1, 0}}), 9u);
    EXPECT_EQ(subspace_weight(code, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 13u);
    EXPECT_THROW(subspace_weight(code, {{1, 0, 0}, {2, 0, 0}}), DependentBasis);
    EXPECT_THROW(subspace_weight(code, {{1, 0}}), DependentBasis);
    EXPECT_THROW(subspace_weight(code, {}), DependentBasis);
}

TEST(PrmCode, WeightHierarchy) {
    const auto line = build_prm(2, 1, 3);
    std::vector<std::int64_t> got;
    for (int r = 1; r <= 3; ++r) got.push_back(ghw_exhaustive(line, r).value);
    EXPECT_EQ(got, (std::vector<std::int64_t>{2, 3, 4}));
    EXPECT_EQ(ghw_exhaustive(build_prm(2, 2, 3), 1).value, 6);
    EXPECT_EQ(ghw_exhaustive(build_prm(2, 2, 2), 1).value, 2);
    EXPECT_THROW(ghw_exhaustive(line, 4), OutOfRange);
}

TEST(PrmCode, MinimumDistanceMatchesClosedForm) {
    for (int q : {2, 3, 4})
        for (int m = 1; m <= 2; ++m)
            for (int d = 1; d <= m * (q - 1); ++d) {
                if (q == 4 && m == 2 && d > 1) continue;  // message space too large to exhaust
                const auto found = ghw_exhaustive(build_prm(d, m, q), 1);
                EXPECT_EQ(Integer(found.value), sorensen_mindist(d, m, q)) << q << d << m;
                EXPECT_EQ(subspace_weight(build_prm(d, m, q), found.basis), static_cast<std::size_t>(found.value));
            }
}

TEST(PrmCode, GhwLowerBound) {
    for (int r = 1; r <= 6; ++r)
        EXPECT_LE(ghw_lower_bound(r, 2, 2, 3), Integer(ghw_exhaustive(build_prm(2, 2, 3), r).value));
}

TEST(Duality, Instances) {
    const auto a = check_duality(2, 2, 3, 6);
    EXPECT_TRUE(a.passed);
    EXPECT_EQ(a.r_d, 0);
    ASSERT_EQ(a.rows.size(), 6u);
    for (const auto& row : a.rows) EXPECT_EQ(row.ghw + row.e_bar, 13);
    const auto b = check_duality(3, 1, 2, 3);
    EXPECT_TRUE(b.passed);
    EXPECT_EQ(b.r_d, 1);
    for (const auto& row : b.rows) {
        ASSERT_TRUE(row.e_shifted.has_value());
        EXPECT_EQ(*row.e_shifted, row.e_bar);
    }
    EXPECT_TRUE(check_duality(1, 2, 4, 3).passed);
}

TEST(PrmCode, Csv) {
    const auto csv = generator_csv(build_prm(1, 1, 3));
    EXPECT_EQ(csv, "0,1,2,1\n1,1,1,0\n");
}
