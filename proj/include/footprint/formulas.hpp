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

#ifndef FOOTPRINT_FORMULAS_HPP
#define FOOTPRINT_FORMULAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace footprint {

// Closed-form quantities around e_r(d, m).  Everything here is exact integer
// arithmetic; lex-ranked tuples are located by counting, never by listing.

namespace detail {

/// table[k][s] = number of k-tuples over {0..q-1} with sum exactly s.
inline std::vector<std::vector<Integer>> exact_sum_counts(int k_max, int s_max, int q) {
    std::vector<std::vector<Integer>> table(static_cast<std::size_t>(k_max + 1),
                                            std::vector<Integer>(static_cast<std::size_t>(s_max + 1), 0));
    table[0][0] = 1;
    for (int k = 1; k <= k_max; ++k)
        for (int s = 0; s <= s_max; ++s)
            for (int v = 0; v <= std::min(q - 1, s); ++v)
                table[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] +=
                    table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - v)];
    return table;
}

/// table[k][s] = number of k-tuples over {0..q-1} with sum at most s.
inline std::vector<std::vector<Integer>> bounded_sum_counts(int k_max, int s_max, int q) {
    auto table = exact_sum_counts(k_max, s_max, q);
    for (auto& row : table)
        for (std::size_t s = 1; s < row.size(); ++s) row[s] += row[s - 1];
    return table;
}

/// table[k][s] = number of exponent k-tuples of sum s that are projectively
/// reduced: every entry before the last nonzero one is below q.
inline std::vector<std::vector<Integer>> reduced_counts(int k_max, int s_max, int q) {
    std::vector<std::vector<Integer>> table(static_cast<std::size_t>(k_max + 1),
                                            std::vector<Integer>(static_cast<std::size_t>(s_max + 1), 0));
    for (int k = 1; k <= k_max; ++k)
        for (int s = 0; s <= s_max; ++s) {
            auto& cell = table[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
            if (k == 1 || s == 0) {
                cell = 1;
                continue;
            }
            cell = 1;  // the first entry takes the whole degree
            for (int v = 0; v <= std::min(q - 1, s - 1); ++v)
                cell += table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - v)];
        }
    return table;
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw OutOfRange(what);
}

}  // namespace detail

/// |Q^m_{<=d}|: m-tuples over {0..q-1} with sum at most d.
inline Integer bounded_tuple_count(int m, int d, int q) {
    if (d < 0) return 0;
    return detail::bounded_sum_counts(m, d, q)[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
}

/// The r-th (1-based) element of Q^m_{<=d} in descending lex.
inline std::vector<int> bounded_tuple_at(int m, int d, int q, const Integer& r) {
    const auto counts = detail::bounded_sum_counts(m, std::max(d, 0), q);
    if (d < 0 || r < 1 || r > counts[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)])
        throw IndexOutOfRange("index " + to_string(r) + " outside Q^" + std::to_string(m) + "_{<=" +
                              std::to_string(d) + "}");
    std::vector<int> tuple;
    Integer rank = r;
    int budget = d;
    for (int pos = 0; pos < m; ++pos) {
        const int rest = m - pos - 1;
        for (int v = std::min(q - 1, budget); v >= 0; --v) {
            const auto& block = counts[static_cast<std::size_t>(rest)][static_cast<std::size_t>(budget - v)];
            if (rank <= block) {
                tuple.push_back(v);
                budget -= v;
                break;
            }
            rank -= block;
        }
    }
    return tuple;
}

/// |M_d| for m + 1 variables: the projectively reduced monomials of degree d.
inline Integer reduced_monomial_count(int m, int q, int d) {
    return detail::reduced_counts(m + 1, d, q)[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(d)];
}

/// Exponent tuple of the r-th (1-based) reduced degree-d monomial in descending lex.
inline std::vector<int> reduced_monomial_at(int m, int q, int d, const Integer& r) {
    const auto counts = detail::reduced_counts(m + 1, d, q);
    if (r < 1 || r > counts[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(d)])
        throw CountOutOfRange("index " + to_string(r) + " outside the reduced monomials of degree " +
                              std::to_string(d));
    std::vector<int> tuple;
    Integer rank = r;
    int left = d;
    for (int pos = 0; pos <= m; ++pos) {
        const int rest = m - pos;
        if (rest == 0 || left == 0) {
            tuple.push_back(left);
            left = 0;
            continue;
        }
        if (rank == 1) {  // x_pos takes everything that is left
            tuple.push_back(left);
            left = 0;
            continue;
        }
        rank -= 1;
        for (int v = std::min(q - 1, left - 1); v >= 0; --v) {
            const auto& block = counts[static_cast<std::size_t>(rest)][static_cast<std::size_t>(left - v)];
            if (rank <= block) {
                tuple.push_back(v);
                left -= v;
                break;
            }
            rank -= block;
        }
    }
    return tuple;
}

/**
 * H_r(d, m) = sum_i alpha_i q^{m-i} for the r-th tuple of Q^m_{<=d} in
 * descending lex.  H_0 = q^m; H_1 = 0 when d = 0 or m = 0 falls out of the
 * same rule since the only tuple is all-zero.
 */
inline Integer compute_H(const Integer& r, int d, int m, int q) {
    if (d < 0 || m < 0) throw IndexOutOfRange("H_r needs d, m >= 0");
    if (r < 0) throw IndexOutOfRange("H_r needs r >= 0");
    if (r == 0) return power(q, m);
    const auto alpha = bounded_tuple_at(m, d, q, r);
    Integer h = 0;
    for (int i = 0; i < m; ++i) h += alpha[static_cast<std::size_t>(i)] * power(q, m - 1 - i);
    return h;
}

/// (m_d, ..., m_1) with N = sum_a C(m_a + a, a) and m_d >= ... >= m_1 >= -1.
struct MacaulayTuple {
    Integer n;
    int d = 0;
    std::vector<int> entries;  // entries[0] = m_d, entries[d-1] = m_1

    int at(int a) const { return entries.at(static_cast<std::size_t>(d - a)); }
    bool operator==(const MacaulayTuple&) const = default;
};

/// Greedy d-binomial (Macaulay) expansion of N.
inline MacaulayTuple macaulay_tuple(const Integer& n, int d) {
    if (d < 1) throw OutOfRange("Macaulay tuple needs d >= 1");
    if (n < 0) throw OutOfRange("Macaulay tuple needs N >= 0");
    MacaulayTuple out{n, d, {}};
    Integer rest = n;
    for (int a = d; a >= 1; --a) {
        std::int64_t s = a - 1;  // C(a-1, a) = 0 always fits
        while (binomial(s + 1, a) <= rest) ++s;
        rest -= binomial(s, a);
        out.entries.push_back(static_cast<int>(s - a));
    }
    return out;
}

/// H_r(d, m) through the Macaulay d-tuple of C(m+d, d) - r; needs 1 <= d < q.
inline Integer compute_H_via_macaulay(const Integer& r, int d, int m, int q) {
    detail::require(d >= 1 && d < q, "Macaulay form of H_r needs 1 <= d < q");
    const Integer total = binomial(m + d, d);
    detail::require(r >= 0 && r <= total, "Macaulay form of H_r needs 0 <= r <= C(m+d, d)");
    const auto tuple = macaulay_tuple(total - r, d);
    Integer h = 0;
    for (int e : tuple.entries) h += floor_power(q, e);
    return h;
}

/// K_r(d, m) = sum_{j<m} a_j p_{m-1-j} for the r-th reduced degree-d monomial.
inline Integer compute_K(const Integer& r, int d, int m, int q) {
    const auto a = reduced_monomial_at(m, q, d, r);
    Integer k = 0;
    for (int j = 0; j < m; ++j) k += a[static_cast<std::size_t>(j)] * projective_count(m - 1 - j, q);
    return k;
}

/// r = j + sum_{a=1..i} C(m+d-a, d-1) with 0 <= j < C(m+d-i-1, d-1); (m, 1) at r = C(m+d, d).
struct ErDecomposition {
    Integer r;
    int d = 0;
    int m = 0;
    int i = 0;
    Integer j;
};

inline ErDecomposition decompose_r(const Integer& r, int d, int m) {
    detail::require(d >= 1 && m >= 0, "decomposition needs d >= 1 and m >= 0");
    const Integer total = binomial(m + d, d);
    detail::require(r >= 1 && r <= total, "decomposition needs 1 <= r <= C(m+d, d) = " + to_string(total));
    if (r == total) return {r, d, m, m, 1};
    int i = 0;
    Integer partial = 0;
    while (i < m && partial + binomial(m + d - i - 1, d - 1) <= r) {
        partial += binomial(m + d - i - 1, d - 1);
        ++i;
    }
    return {r, d, m, i, r - partial};
}

enum class ErStatus { proven, conjectural, lower_bound };

inline std::string to_string(ErStatus status) {
    switch (status) {
        case ErStatus::proven: return "proven";
        case ErStatus::conjectural: return "conjectural";
        case ErStatus::lower_bound: return "lower_bound";
    }
    return "unknown";
}

struct ErValue {
    Integer value;
    ErStatus status;
};

namespace detail {

inline Integer conjectured_value(const Integer& r, int d, int m, int q) {
    const auto dec = decompose_r(r, d, m);
    return compute_H(dec.j, d - 1, m - dec.i, q) + projective_count(m - dec.i - 1, q);
}

}  // namespace detail

/**
 * Values of e_r(d, m) established in closed form, or nullopt:
 *  - the last d + 1 values, e_{C(m+d,d)-s} = s (d <= q);
 *  - linear forms, e_r(1, m) = p_{m-r};
 *  - the projective line, e_r(d, 1) = d - r + 1 (d < q);
 *  - r = sum_{a<=i} C(m+d-a, d-1) - t with 0 <= t < d, value p_{m-i} + t (d < q);
 *  - r <= C(m+2, 2) with 2 <= d < q, where the conjectured formula is known to hold.
 */
inline std::optional<Integer> known_er(const Integer& r, int d, int m, int q) {
    detail::require(d >= 1 && m >= 0, "e_r needs d >= 1 and m >= 0");
    const Integer total = binomial(m + d, d);
    detail::require(r >= 1 && r <= total, "e_r needs 1 <= r <= C(m+d, d)");
    if (d > q) return std::nullopt;
    if (r >= total - d) return total - r;
    if (d == 1) return projective_count(m - to_int64(r), q);
    if (d == q) return std::nullopt;
    if (m == 1) return Integer(d) - r + 1;
    Integer partial = 0;
    for (int i = 1; i <= m + 1; ++i) {
        partial += binomial(m + d - i, d - 1);
        const Integer t = partial - r;
        if (t >= 0 && t < d) return projective_count(m - i, q) + t;
    }
    if (r <= binomial(m + 2, 2)) return detail::conjectured_value(r, d, m, q);
    return std::nullopt;
}

/// H_j(d-1, m-i) + p_{m-i-1}: the conjectured e_r(d, m) for d < q and a proven
/// lower bound for d <= q.  The status never claims more than is established.
inline ErValue conjectured_er(const Integer& r, int d, int m, int q) {
    detail::require(d >= 1 && d <= q, "conjectured e_r needs 1 <= d <= q");
    auto value = detail::conjectured_value(r, d, m, q);
    const auto known = known_er(r, d, m, q);
    ErStatus status = d < q ? ErStatus::conjectural : ErStatus::lower_bound;
    if (known && *known == value) status = ErStatus::proven;
    return {std::move(value), status};
}

/// p_{m_d} + sum_{a<d} floor(q^{m_a}) over the Macaulay d-tuple of C(m+d, d) - r.
inline Integer conjectured_er_macaulay(const Integer& r, int d, int m, int q) {
    detail::require(d >= 1 && d <= q, "conjectured e_r needs 1 <= d <= q");
    const Integer total = binomial(m + d, d);
    detail::require(r >= 1 && r <= total, "e_r needs 1 <= r <= C(m+d, d)");
    const auto tuple = macaulay_tuple(total - r, d);
    Integer value = projective_count(tuple.entries.front(), q);
    for (std::size_t k = 1; k < tuple.entries.size(); ++k) value += floor_power(q, tuple.entries[k]);
    return value;
}

/// r_d: dimension of the degree-d part of the vanishing ideal of P^m(F_q).
inline Integer gamma_dim(int d, int m, int q) {
    Integer total = 0;
    for (int j = 2; j <= m + 1; ++j) {
        Integer inner = 0;
        for (int i = 0; i <= j - 2; ++i) {
            const std::int64_t k = static_cast<std::int64_t>(d) + static_cast<std::int64_t>(i + 1) * (q - 1) -
                                   static_cast<std::int64_t>(j) * q;
            inner += binomial(k + m, k);
        }
        total += (j % 2 == 0 ? 1 : -1) * binomial(m + 1, j) * inner;
    }
    return total;
}

/// rho_d: dimension of the degree-<=d part of the vanishing ideal of A^m(F_q).
inline Integer affine_vanishing_dim(int d, int m, int q) {
    Integer total = 0;
    for (int j = 1; j <= m; ++j) {
        const std::int64_t k = static_cast<std::int64_t>(d) - static_cast<std::int64_t>(j) * q;
        total += (j % 2 == 1 ? 1 : -1) * binomial(m, j) * binomial(m + k, k);
    }
    return total;
}

/// Dimension of PRM_q(d, m) by the alternating-sum formula; 1 <= d <= m(q-1).
inline Integer sorensen_dim(int d, int m, int q) {
    detail::require(d >= 1 && d <= m * (q - 1), "PRM parameters need 1 <= d <= m(q-1)");
    Integer dim = 0;
    for (int t = 1; t <= d; ++t) {
        if ((t - d) % (q - 1) != 0) continue;
        for (int j = 0; j <= m + 1; ++j) {
            const std::int64_t k = static_cast<std::int64_t>(t) - static_cast<std::int64_t>(j) * q;
            dim += (j % 2 == 0 ? 1 : -1) * binomial(m + 1, j) * binomial(k + m, k);
        }
    }
    return dim;
}

/// Minimum distance (q - s) q^{m-t-1} of PRM_q(d, m), d - 1 = t(q-1) + s, 0 <= s < q-1.
inline Integer sorensen_mindist(int d, int m, int q) {
    detail::require(d >= 1 && d <= m * (q - 1), "PRM parameters need 1 <= d <= m(q-1)");
    const int t = (d - 1) / (q - 1);
    const int s = (d - 1) % (q - 1);
    return (q - s) * power(q, m - t - 1);
}

/// Lower bound m + 1 + sum_{j<m} beta_j p_{m-1-j} on d_r(PRM_q(d, m)), beta the
/// r-th tuple in ascending lex of {0..q-1}^{m+1} with sum (m+1)(q-1) - d.
inline Integer ghw_lower_bound(const Integer& r, int d, int m, int q) {
    detail::require(d >= 1 && d < q, "GHW bound needs 1 <= d < q");
    detail::require(r >= 1 && r <= binomial(m + d, m), "GHW bound needs 1 <= r <= C(m+d, m)");
    const int target = (m + 1) * (q - 1) - d;
    const auto counts = detail::exact_sum_counts(m + 1, target, q);
    std::vector<int> beta;
    Integer rank = r;
    int left = target;
    for (int pos = 0; pos <= m; ++pos) {
        const int rest = m - pos;
        for (int v = 0; v <= std::min(q - 1, left); ++v) {
            const auto& block = counts[static_cast<std::size_t>(rest)][static_cast<std::size_t>(left - v)];
            if (rank <= block) {
                beta.push_back(v);
                left -= v;
                break;
            }
            rank -= block;
        }
    }
    Integer bound = m + 1;
    for (int j = 0; j < m; ++j) bound += beta[static_cast<std::size_t>(j)] * projective_count(m - 1 - j, q);
    return bound;
}

}  // namespace footprint

#endif
