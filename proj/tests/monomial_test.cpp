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

#include "footprint/polynomial.hpp"
#include "footprint/projective_monomials.hpp"
#include "footprint/projective_space.hpp"
#include "footprint/search.hpp"
#include "oracles.hpp"

using namespace footprint;

namespace {

MonomialSet set(int variables, const std::vector<std::string>& texts) { return parse_monomial_set(texts, variables); }

Monomial mono(const std::string& text, int variables) { return parse_monomial(text, variables); }

}  // namespace

TEST(Monomial, TextRoundTrip) {
    EXPECT_EQ(to_string(Monomial({2, 1, 3})), "x0^2*x1*x2^3");
    EXPECT_EQ(to_string(Monomial::one(3)), "1");
    EXPECT_EQ(mono("x0^2*x1*x2^3", 3), Monomial({2, 1, 3}));
    EXPECT_EQ(mono(" x1 * x1 ", 2), Monomial({0, 2}));
    EXPECT_EQ(mono("1", 4), Monomial::one(4));
    EXPECT_THROW(mono("x3", 3), ParseError);
    EXPECT_THROW(mono("y0", 3), ParseError);
    EXPECT_THROW(mono("x0^", 3), ParseError);
    EXPECT_THROW(mono("", 3), ParseError);
    EXPECT_THROW(mono("x0**x1", 3), ParseError);
}

TEST(Monomial, LexOrderPutsX0First) {
    EXPECT_TRUE(Monomial({1, 0, 0}) > Monomial({0, 5, 0}));
    EXPECT_TRUE(Monomial({0, 1, 0}) > Monomial({0, 0, 9}));
    const auto s = set(3, {"x2^2", "x0*x1", "x0^2", "x1^2", "x0*x2"});
    EXPECT_EQ(to_strings(s), (std::vector<std::string>{"x0^2", "x0*x1", "x0*x2", "x1^2", "x2^2"}));
    EXPECT_THROW(Monomial({1, 0}).divides(Monomial({1, 0, 0})), AmbientMismatch);
}

TEST(Reduction, Examples) {
    EXPECT_EQ(reduce_monomial(Monomial::one(3), 3), Monomial::one(3));
    EXPECT_EQ(reduce_monomial(mono("x0^3*x1", 2), 3), mono("x0*x1^3", 2));
    EXPECT_EQ(reduce_monomial(mono("x0^5*x2^2", 3), 3), mono("x0*x2^6", 3));
    // The last variable keeps any exponent.
    EXPECT_EQ(reduce_monomial(mono("x0^7", 3), 3), mono("x0^7", 3));
}

TEST(Reduction, PreservesValuesIdempotentDegreePreserving) {
    for (int q : {2, 3, 4}) {
        const FiniteField field(q);
        for (int m = 0; m <= 2; ++m) {
            const auto points = enumerate_affine_points(m + 1, field);
            for (int deg = 0; deg <= 6; ++deg)
                for (const auto& t : oracle::tuples(m + 1, deg, -1)) {
                    if (oracle::sum(t) != deg) continue;
                    const Monomial mu(t);
                    const auto bar = reduce_monomial(mu, q);
                    EXPECT_EQ(bar.degree(), deg);
                    EXPECT_EQ(reduce_monomial(bar, q), bar);
                    EXPECT_TRUE(is_projectively_reduced(bar, q));
                    Polynomial f(m + 1), g(m + 1);
                    f.add_term(field, mu, 1);
                    g.add_term(field, bar, 1);
                    for (const auto& pt : points) ASSERT_EQ(f.evaluate(field, pt), g.evaluate(field, pt)) << to_string(mu);
                }
        }
    }
}

TEST(Reduction, Polynomials) {
    const FiniteField f2(2);
    HomogeneousPolynomial f(2, 3);
    f.add_term(f2, mono("x0^2*x1", 2), 1);
    f.add_term(f2, mono("x0*x1^2", 2), 1);
    EXPECT_TRUE(reduce_polynomial(f2, f).is_zero());
    for (const auto& pt : enumerate_affine_points(2, f2)) EXPECT_EQ(f.evaluate(f2, pt), 0u);

    const FiniteField f5(5);
    HomogeneousPolynomial g(3, 4);
    g.add_term(f5, mono("x0^2*x1*x2", 3), 3);
    g.add_term(f5, mono("x1^4", 3), 2);
    EXPECT_TRUE(is_projectively_reduced(g, 5));
    EXPECT_EQ(reduce_polynomial(f5, g), g);
    EXPECT_TRUE(reduce_polynomial(f5, HomogeneousPolynomial(3, 4)).is_zero());
    EXPECT_THROW(g.add_term(f5, mono("x0", 3), 1), std::invalid_argument);
}

TEST(ReducedMonomials, Examples) {
    EXPECT_EQ(to_strings(enumerate_reduced(1, 3, 4)), (std::vector<std::string>{"x0^4", "x0^2*x1^2", "x0*x1^3", "x1^4"}));
    EXPECT_EQ(to_strings(enumerate_reduced(2, 3, 0)), (std::vector<std::string>{"1"}));
    EXPECT_THROW(enumerate_reduced(2, 3, 4, 3), BadLevel);
    EXPECT_THROW(enumerate_reduced(2, 3, 4, -1), BadLevel);
}

TEST(ReducedMonomials, MatchDefinition) {
    for (int q : {2, 3, 4, 5})
        for (int m = 0; m <= 3; ++m)
            for (int e = 0; e <= 10; ++e) {
                std::vector<Monomial> expected;
                for (const auto& t : oracle::reduced(m, q, e)) expected.emplace_back(t);
                const auto got = enumerate_reduced(m, q, e);
                ASSERT_EQ(got.elements(), expected) << "q=" << q << " m=" << m << " e=" << e;
                std::size_t by_level = 0;
                for (int l = 0; l <= m; ++l) {
                    const auto slice = enumerate_reduced(m, q, e, l);
                    by_level += slice.size();
                    for (const auto& mu : slice) EXPECT_EQ(mu.level(), l);
                    if (e >= l * (q - 1) + 1) EXPECT_EQ(static_cast<std::int64_t>(slice.size()), oracle::ipow(q, l));
                }
                EXPECT_EQ(by_level, got.size());
                if (e <= q) EXPECT_EQ(static_cast<std::int64_t>(got.size()), oracle::binom(m + e, e));
                if (e >= m * (q - 1) + 1) EXPECT_EQ(static_cast<std::int64_t>(got.size()), oracle::p(m, q));
            }
}

TEST(Footprint, Examples) {
    const auto empty = MonomialSet(3);
    EXPECT_EQ(footprint::footprint(empty, 5, 3), enumerate_reduced(2, 3, 5));
    EXPECT_TRUE(shadow(empty, 5, 3).empty());
    EXPECT_EQ(footprint_size(set(3, {"x0"}), 6, 3), 4u);
    for (int q : {3, 4, 5})
        for (int d = 1; d < q; ++d)
            for (int e = d + (q - 1); e <= d + 3 * (q - 1); ++e)
                EXPECT_EQ(footprint_size(MonomialSet(2, {Monomial({d, 0})}), e, q), static_cast<std::size_t>(d));
}

TEST(Footprint, ShadowAndFootprintPartitionEveryLevel) {
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 2 + trial % 3, m = 1 + trial % 3, d = 1 + trial % 3;
        std::vector<Monomial> pick;
        for (const auto& mu : enumerate_reduced(m, q, d))
            if (coin(oracle::rng())) pick.push_back(mu);
        const MonomialSet s(m + 1, pick);
        const int e = stable_degree(d, m, q);
        const auto sh = shadow(s, e, q), fp = footprint::footprint(s, e, q);
        EXPECT_EQ(sh.size() + fp.size(), enumerate_reduced(m, q, e).size());
        for (const auto& mu : fp) EXPECT_FALSE(sh.contains(mu));
        for (const auto& mu : sh) {
            bool divisible = false;
            for (const auto& nu : pick) divisible = divisible || nu.divides(mu);
            EXPECT_TRUE(divisible);
        }
        std::size_t total = 0;
        for (int l = 0; l <= m; ++l) total += footprint_size(s, e, q, l);
        EXPECT_EQ(total, fp.size());
    }
}

TEST(RestrictLevel, Examples) {
    const auto md = enumerate_reduced(2, 5, 3);
    EXPECT_EQ(restrict_level(md, 2, 5), md);
    EXPECT_TRUE(restrict_level(set(3, {"x0*x2"}), 1, 3).empty());
    EXPECT_TRUE(restrict_level(set(2, {"x0^3*x1"}), 1, 3).empty());
    EXPECT_EQ(restrict_level(set(3, {"x0*x1", "x2^2", "x0^2"}), 1, 3), set(3, {"x0*x1", "x0^2"}));
    EXPECT_THROW(restrict_level(md, 3, 5), BadLevel);
}

TEST(Specialize, Examples) {
    EXPECT_EQ(specialize(mono("x0^2*x1^3", 2), 1), mono("x0^2", 1));
    EXPECT_TRUE(specialize(set(3, {"x0*x2"}), 1, 3).empty());
    const auto image = specialize(set(3, {"x0^2*x1", "x0*x2", "x1^2"}), 1, 3);
    EXPECT_EQ(to_strings(image.elements()), (std::vector<std::string>{"x0^2", "1"}));
    EXPECT_THROW(specialize(set(2, {"x0^3"}), 1, 3), NotInHypercube);
    for (int q : {3, 4, 5})
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d < q; ++d) {
                const auto md = enumerate_reduced(m, q, d);
                EXPECT_EQ(specialize(md, m, q).size(), md.size());
            }
}

TEST(Expander, Examples) {
    EXPECT_EQ(expand(set(3, {"x0*x2"}), 3), set(3, {"x0*x1"}));
    EXPECT_EQ(expand(set(3, {"x0*x2", "x0*x1"}), 3), set(3, {"x0*x2", "x0*x1"}));
    const auto s = set(3, {"x0^2", "x1^2", "x0*x1"});
    EXPECT_EQ(expand(s, 3), s);
    // x1^2 is full in x1 at q = 3.
    EXPECT_EQ(expand(set(3, {"x1^2*x2"}), 3), set(3, {"x1^2*x2"}));
    EXPECT_EQ(expand(set(3, {"x1*x2^2"}), 3), set(3, {"x1^2*x2"}));
}

TEST(Hypercube, LexSets) {
    EXPECT_EQ(to_strings(hypercube_lex_set(2, 3, 2, 3, LexSetMode::bounded_degree).elements()),
              (std::vector<std::string>{"x0^2", "x0*x1", "x0"}));
    EXPECT_EQ(to_strings(hypercube_lex_set(2, 3, 2, 2, LexSetMode::exact_degree).elements()),
              (std::vector<std::string>{"x0^2", "x0*x1"}));
    EXPECT_TRUE(hypercube_lex_set(2, 3, 2, 0, LexSetMode::bounded_degree).empty());
    EXPECT_THROW(hypercube_lex_set(2, 3, 2, 7, LexSetMode::bounded_degree), CountOutOfRange);
    EXPECT_THROW(HypercubeSet(2, 3, set(2, {"x0^3"})), NotInHypercube);
}

TEST(Hypercube, ShadowAndFootprint) {
    const auto t = hypercube_lex_set(2, 3, 2, 3, LexSetMode::bounded_degree);
    const auto sh = hypercube_shadow(t);
    EXPECT_EQ(sh.size(), 6u);
    for (const auto& mu : sh) EXPECT_GE(mu[0], 1);
    EXPECT_EQ(hypercube_footprint(t).size(), 3u);
    EXPECT_EQ(hypercube_footprint(HypercubeSet(3, 4)).size(), 64u);
    EXPECT_TRUE(hypercube_footprint(HypercubeSet(2, 3, set(2, {"1"}))).empty());
    EXPECT_EQ(hypercube(0, 3).size(), 1u);
    EXPECT_EQ(hypercube_shadow(HypercubeSet(0, 3, set(0, {"1"}))).size(), 1u);
    // degree slices
    const auto fp2 = hypercube_footprint(t, DegreeFilter{DegreeRelation::equal, 2});
    EXPECT_EQ(to_strings(fp2.elements()), (std::vector<std::string>{"x1^2"}));
    EXPECT_EQ(hypercube_footprint(t, DegreeFilter{DegreeRelation::above, 2}).size(), 0u);
    EXPECT_EQ(hypercube_footprint(t, DegreeFilter{DegreeRelation::below, 2}).size(), 2u);
}

TEST(LexSetProjective, Examples) {
    EXPECT_EQ(to_strings(lex_set_projective(2, 3, 2, 4)), (std::vector<std::string>{"x0^2", "x0*x1", "x0*x2", "x1^2"}));
    EXPECT_TRUE(lex_set_projective(2, 3, 2, 0).empty());
    EXPECT_THROW(lex_set_projective(2, 3, 2, 7), CountOutOfRange);
    for (int q : {3, 4, 5})
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d <= q; ++d) {
                EXPECT_EQ(lex_set_projective(m, q, d, 1), MonomialSet(m + 1, {Monomial::variable(m + 1, 0, d)}));
                const auto all = enumerate_reduced(m, q, d);
                std::int64_t offset = 0;
                for (int i = 0; i <= m; ++i) {
                    EXPECT_EQ(all[static_cast<std::size_t>(offset)], Monomial::variable(m + 1, i, d));
                    offset += oracle::binom(m + d - i - 1, d - 1);
                }
            }
}
