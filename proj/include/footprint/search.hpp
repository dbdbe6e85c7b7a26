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

#ifndef FOOTPRINT_SEARCH_HPP
#define FOOTPRINT_SEARCH_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "formulas.hpp"
#include "hypercube.hpp"
#include "linear_algebra.hpp"
#include "polynomial.hpp"
#include "projective_monomials.hpp"
#include "projective_space.hpp"

namespace footprint {

enum class ErMode { projective_reduced, all_homogeneous };

struct SearchOptions {
    std::uint64_t budget = default_budget();
    unsigned workers = 1;
    /// Check every visited subspace against the footprint of its leading monomials
    /// at the stable degree (reduced mode only).
    bool audit_footprint = false;
};

struct SearchResult {
    std::int64_t value = 0;
    MonomialSet space;          // coefficient coordinates, descending lex
    Matrix basis;               // witness subspace in RREF over `space`
    std::vector<Polynomial> witness;
    std::uint64_t subspaces_enumerated = 0;
    std::uint64_t footprint_checked = 0;
    std::uint64_t footprint_violations = 0;
};

/// Every monomial of degree d in the given number of variables.
inline MonomialSet all_monomials(int variables, int d) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(variables), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == variables - 1) {
            exps[static_cast<std::size_t>(pos)] = left;
            out.emplace_back(exps);
            return;
        }
        for (int a = left; a >= 0; --a) {
            exps[static_cast<std::size_t>(pos)] = a;
            self(self, pos + 1, left - a);
        }
    };
    if (variables == 0) {
        if (d == 0) out.emplace_back(exps);
    } else {
        rec(rec, 0, d);
    }
    return MonomialSet(variables, std::move(out));
}

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline std::size_t popcount(const Bits& bits) {
    std::size_t n = 0;
    for (auto w : bits) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

/// table[p][k] = value of the k-th monomial at the p-th point.
template <class Points>
Matrix evaluation_table(const FiniteField& field, const MonomialSet& space, const Points& points) {
    Matrix table;
    table.reserve(points.size());
    for (const auto& p : points) {
        Row row;
        row.reserve(space.size());
        for (const auto& mu : space) {
            Element v = 1;
            for (int i = 0; i < mu.variables() && v != 0; ++i)
                if (mu[i] > 0) v = field.mul(v, field.pow(p[static_cast<std::size_t>(i)], mu[i]));
            row.push_back(v);
        }
        table.push_back(std::move(row));
    }
    return table;
}

inline std::size_t common_zeros(const FiniteField& field, const Matrix& rows, const Matrix& table) {
    std::size_t zeros = 0;
    for (const auto& values : table) {
        bool all = true;
        for (const auto& row : rows) {
            Element s = 0;
            for (std::size_t k = 0; k < row.size(); ++k)
                if (row[k] != 0 && values[k] != 0) s = field.add(s, field.mul(row[k], values[k]));
            if (s != 0) {
                all = false;
                break;
            }
        }
        zeros += all;
    }
    return zeros;
}

inline std::vector<Polynomial> to_polynomials(const FiniteField& field, const MonomialSet& space, const Matrix& rows) {
    std::vector<Polynomial> out;
    for (const auto& row : rows) {
        Polynomial f(space.variables());
        for (std::size_t k = 0; k < row.size(); ++k) f.add_term(field, space[k], row[k]);
        out.push_back(std::move(f));
    }
    return out;
}

struct FootprintAudit {
    std::vector<Bits> multiples;  // per coefficient column: its multiples among the stable-degree monomials
    std::size_t universe = 0;     // number of reduced monomials of the stable degree
};

inline FootprintAudit make_audit(const MonomialSet& space, int d, int m, int q) {
    const auto stable = enumerate_reduced(m, q, stable_degree(d, m, q));
    FootprintAudit audit;
    audit.universe = stable.size();
    for (const auto& mu : space) {
        Bits bits((stable.size() + 63) / 64, 0);
        for (std::size_t k = 0; k < stable.size(); ++k)
            if (mu.divides(stable[k])) bits[k / 64] |= std::uint64_t{1} << (k % 64);
        audit.multiples.push_back(std::move(bits));
    }
    return audit;
}

inline SearchResult max_zeros(const FiniteField& field, const MonomialSet& space, const Matrix& table, int r,
                              const SearchOptions& options, const FootprintAudit* audit) {
    const int n = static_cast<int>(space.size());
    if (r < 1 || r > n) throw OutOfRange("r must lie in 1.." + std::to_string(n) + " for this coefficient space");
    check_budget(gaussian_binomial(n, r, field.order()), table.size(), options.budget);
    std::atomic<std::uint64_t> checked{0}, violations{0};
    auto score = [&](const SubspaceView& view) -> std::int64_t {
        const auto zeros = common_zeros(field, view.rows, table);
        if (audit) {
            Bits covered(audit->multiples.front().size(), 0);
            for (int c : view.pivots)
                for (std::size_t w = 0; w < covered.size(); ++w)
                    covered[w] |= audit->multiples[static_cast<std::size_t>(c)][w];
            ++checked;
            if (zeros > audit->universe - popcount(covered)) ++violations;
        }
        return static_cast<std::int64_t>(zeros);
    };
    const auto best = best_subspace(field, n, r, score, true, options.workers);
    SearchResult out;
    out.value = best.value;
    out.space = space;
    out.basis = best.rows;
    out.witness = to_polynomials(field, space, best.rows);
    out.subspaces_enumerated = best.enumerated;
    out.footprint_checked = checked;
    out.footprint_violations = violations;
    return out;
}

}  // namespace detail

/**
 * Exhaustive e_r(d, m): the largest number of common zeros in P^m(F_q) of an
 * r-dimensional space of degree-d forms.  In projective_reduced mode the forms
 * are spanned by the reduced monomials, which gives the reduced variant.
 */
inline SearchResult brute_force_er(int r, int d, int m, int q, ErMode mode = ErMode::projective_reduced,
                                   const SearchOptions& options = {}) {
    if (d < 1 || m < 0) throw OutOfRange("search needs d >= 1 and m >= 0");
    const FiniteField field(q);
    const auto space = mode == ErMode::projective_reduced ? enumerate_reduced(m, q, d) : all_monomials(m + 1, d);
    std::vector<std::vector<Element>> points;
    for (const auto& p : enumerate_projective_points(m, field)) points.push_back(p.coords());
    const auto table = detail::evaluation_table(field, space, points);
    std::optional<detail::FootprintAudit> audit;
    if (options.audit_footprint && mode == ErMode::projective_reduced) audit = detail::make_audit(space, d, m, q);
    return detail::max_zeros(field, space, table, r, options, audit ? &*audit : nullptr);
}

/// Exhaustive affine analogue: reduced polynomials of degree <= d in m variables, zeros in F_q^m.
inline SearchResult brute_force_affine_er(int r, int d, int m, int q, const SearchOptions& options = {}) {
    if (d < 0 || m < 0) throw OutOfRange("search needs d, m >= 0");
    const FiniteField field(q);
    const auto space = hypercube(m, q, DegreeFilter{DegreeRelation::at_most, d}).elements();
    const auto points = enumerate_affine_points(m, field);
    const auto table = detail::evaluation_table(field, space, points);
    return detail::max_zeros(field, space, table, r, options, nullptr);
}

struct FootprintSearchResult {
    std::int64_t value = 0;
    MonomialSet witness;
    std::uint64_t subsets_enumerated = 0;
};

/// max |Delta_e(S)| over the r-subsets S of the reduced degree-d monomials; the
/// witness is the first maximizer in lex order of index tuples.
inline FootprintSearchResult brute_force_max_footprint(int r, int d, int m, int q, int e,
                                                       const SearchOptions& options = {}) {
    const auto space = enumerate_reduced(m, q, d);
    const int n = static_cast<int>(space.size());
    if (r < 0 || r > n) throw OutOfRange("r must lie in 0.." + std::to_string(n));
    const auto target = enumerate_reduced(m, q, e);
    check_budget(binomial(n, r), target.size(), options.budget);
    std::vector<detail::Bits> multiples;
    for (const auto& mu : space) {
        detail::Bits bits((target.size() + 63) / 64 + 1, 0);
        for (std::size_t k = 0; k < target.size(); ++k)
            if (mu.divides(target[k])) bits[k / 64] |= std::uint64_t{1} << (k % 64);
        multiples.push_back(std::move(bits));
    }
    FootprintSearchResult out;
    out.witness = MonomialSet(m + 1);
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    bool have = false;
    while (true) {
        detail::Bits covered((target.size() + 63) / 64 + 1, 0);
        for (int c : pick)
            for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= multiples[static_cast<std::size_t>(c)][w];
        const auto value = static_cast<std::int64_t>(target.size() - detail::popcount(covered));
        ++out.subsets_enumerated;
        if (!have || value > out.value) {
            have = true;
            out.value = value;
            std::vector<Monomial> chosen;
            for (int c : pick) chosen.push_back(space[static_cast<std::size_t>(c)]);
            out.witness = MonomialSet(m + 1, std::move(chosen));
        }
        int i = r - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < r; ++k) pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k - 1)] + 1;
    }
    return out;
}

namespace detail {

// prod_t prod_{s < beta_t} (x_t - c_s) over the field elements c_0, c_1, ... in order.
inline Polynomial vanishing_product(const FiniteField& field, const std::vector<int>& beta, int variables) {
    Polynomial g(variables);
    g.add_term(field, Monomial::one(variables), 1);
    for (std::size_t t = 0; t < beta.size(); ++t)
        for (int s = 0; s < beta[t]; ++s) {
            Polynomial factor(variables);
            factor.add_term(field, Monomial::variable(variables, static_cast<int>(t)), 1);
            factor.add_term(field, Monomial::one(variables), field.neg(static_cast<Element>(s)));
            g = g.times(field, factor);
        }
    return g;
}

inline bool independent(const FiniteField& field, const std::vector<HomogeneousPolynomial>& forms, int m, int d) {
    const auto space = all_monomials(m + 1, d);
    Matrix rows;
    for (const auto& f : forms) {
        Row row;
        for (const auto& mu : space) row.push_back(f.polynomial().coefficient(mu));
        rows.push_back(std::move(row));
    }
    return rank(field, rows) == forms.size();
}

}  // namespace detail

/**
 * r independent degree-d forms whose common zero set has the conjectured size
 * H_j(d-1, m-i) + p_{m-i-1}, with (i, j) from decompose_r:
 *  - for a = 1..i, every degree-d monomial in x_0..x_{m-a+1} divisible by x_{m-a+1};
 *  - for each of the first j tuples beta of Q^{m-i}_{<=d-1} in descending lex,
 *    the product of (x_t - c_s), s < beta_t, homogenized to degree d with x_{m-i}.
 * The count is checked by evaluation.  If it fails, an exhaustive search for a
 * family reaching the value is tried before giving up with WitnessInvalid.
 */
inline std::vector<HomogeneousPolynomial> construct_witness(int r, int d, int m, int q,
                                                            const SearchOptions& options = {}) {
    if (d < 1 || d > q) throw OutOfRange("witness needs 1 <= d <= q");
    if (m < 0 || r < 1 || Integer(r) > binomial(m + d, d)) throw OutOfRange("witness needs 1 <= r <= C(m+d, d)");
    const FiniteField field(q);
    const auto dec = decompose_r(r, d, m);
    const auto expected = conjectured_er(r, d, m, q).value;
    const int vars = m + 1;
    std::vector<HomogeneousPolynomial> forms;
    for (int a = 1; a <= dec.i; ++a) {
        const int top = m - a + 1;
        for (const auto& mu : all_monomials(top + 1, d)) {
            if (mu[top] == 0) continue;
            std::vector<int> exps(mu.exponents());
            exps.resize(static_cast<std::size_t>(vars), 0);
            HomogeneousPolynomial f(vars, d);
            f.add_term(field, Monomial(std::move(exps)), 1);
            forms.push_back(std::move(f));
        }
    }
    const int affine = m - dec.i;
    const auto j = to_int64(dec.j);
    for (std::int64_t k = 1; k <= j; ++k) {
        const auto beta = bounded_tuple_at(affine, d - 1, q, k);
        forms.push_back(homogenize(field, detail::vanishing_product(field, beta, vars), affine, d));
    }
    const auto zeros = count_common_zeros(forms, m, field);
    if (static_cast<int>(forms.size()) == r && Integer(zeros) == expected && detail::independent(field, forms, m, d))
        return forms;
    try {
        const auto found = brute_force_er(r, d, m, q, ErMode::all_homogeneous, options);
        if (Integer(found.value) >= expected) {
            std::vector<HomogeneousPolynomial> out;
            for (const auto& f : found.witness) out.emplace_back(d, f);
            return out;
        }
    } catch (const BudgetExceeded&) {
    }
    throw WitnessInvalid("no witness reaching " + to_string(expected) + " common zeros for r=" + std::to_string(r) +
                         ", d=" + std::to_string(d) + ", m=" + std::to_string(m) + ", q=" + std::to_string(q));
}

}  // namespace footprint

#endif
