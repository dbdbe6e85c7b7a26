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

#ifndef FOOTPRINT_PROJECTIVE_MONOMIALS_HPP
#define FOOTPRINT_PROJECTIVE_MONOMIALS_HPP

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypercube.hpp"
#include "monomial.hpp"

namespace footprint {

/// Exponent folding for projective reduction: 0 stays 0, otherwise the
/// representative of a mod (q - 1) in 1..q-1.
inline int reduce_exponent(int a, int q) { return a == 0 ? 0 : (a - 1) % (q - 1) + 1; }

/// Projective reduction: every exponent before the last variable is folded
/// into 1..q-1 and the excess moves onto the last variable.  Degree preserving.
inline Monomial reduce_monomial(const Monomial& mu, int q) {
    const int last = mu.last_variable();
    if (last < 0) return mu;
    Monomial out = mu;
    int excess = 0;
    for (int j = 0; j < last; ++j) {
        out[j] = reduce_exponent(mu[j], q);
        excess += mu[j] - out[j];
    }
    out[last] += excess;
    return out;
}

inline bool is_projectively_reduced(const Monomial& mu, int q) {
    const int last = mu.last_variable();
    for (int j = 0; j < last; ++j)
        if (mu[j] >= q) return false;
    return true;
}

/// e* = d + m(q - 1), the degree at which all footprint statements are evaluated.
inline int stable_degree(int d, int m, int q) { return d + m * (q - 1); }

namespace detail {

inline void check_level(int level, int m) {
    if (level < 0 || level > m)
        throw BadLevel("level " + std::to_string(level) + " outside 0.." + std::to_string(m));
}

// Appends every reduced monomial of degree e whose last variable is x_level.
inline void append_level(int m, int q, int e, int level, std::vector<Monomial>& out) {
    if (e == 0) {
        if (level == 0) out.push_back(Monomial::one(m + 1));
        return;
    }
    std::vector<int> exps(static_cast<std::size_t>(m + 1), 0);
    const int cap = std::min(q - 1, e - 1);
    // Odometer over exponents of x_0..x_{level-1}, each in [0, cap], prefix sum < e.
    while (true) {
        int prefix = 0;
        for (int j = 0; j < level; ++j) prefix += exps[static_cast<std::size_t>(j)];
        if (prefix < e) {
            auto mu = exps;
            mu[static_cast<std::size_t>(level)] = e - prefix;
            out.emplace_back(std::move(mu));
        }
        int i = level - 1;
        while (i >= 0 && exps[static_cast<std::size_t>(i)] == cap) exps[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++exps[static_cast<std::size_t>(i)];
    }
}

}  // namespace detail

/// The projectively reduced monomials of degree e in x_0..x_m, or only those at
/// the given level (last variable x_level; the constant sits at level 0).
inline MonomialSet enumerate_reduced(int m, int q, int e, std::optional<int> level = std::nullopt) {
    if (m < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
    if (e < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<Monomial> out;
    if (level) {
        detail::check_level(*level, m);
        detail::append_level(m, q, e, *level, out);
    } else {
        for (int l = 0; l <= m; ++l) detail::append_level(m, q, e, l, out);
    }
    return MonomialSet(m + 1, std::move(out));
}

/// Shadow of S in the reduced monomials of degree e (optionally one level of it).
inline MonomialSet shadow(const MonomialSet& s, int e, int q, std::optional<int> level = std::nullopt) {
    return enumerate_reduced(s.variables() - 1, q, e, level).filter([&](const Monomial& mu) { return s.divides(mu); });
}

/// Footprint of S: reduced degree-e monomials (optionally at one level) with no divisor in S.
inline MonomialSet footprint(const MonomialSet& s, int e, int q, std::optional<int> level = std::nullopt) {
    return enumerate_reduced(s.variables() - 1, q, e, level).filter([&](const Monomial& mu) { return !s.divides(mu); });
}

inline std::size_t footprint_size(const MonomialSet& s, int e, int q, std::optional<int> level = std::nullopt) {
    return footprint(s, e, q, level).size();
}

/// S^<l>: members in F_q[x_0..x_l] whose exponents below index l are all < q.
inline MonomialSet restrict_level(const MonomialSet& s, int level, int q) {
    detail::check_level(level, s.variables() - 1);
    return s.filter([&](const Monomial& mu) {
        if (mu.last_variable() > level) return false;
        for (int j = 0; j < level; ++j)
            if (mu[j] >= q) return false;
        return true;
    });
}

/// Specialization at level l: (x_l, ..., x_m) -> (1, 0, ..., 0).  Monomials
/// involving a variable beyond x_l map to zero and are left out of the image.
/// Throws NotInHypercube if an image exponent reaches q; apply it to S^<l>.
inline HypercubeSet specialize(const MonomialSet& s, int level, int q) {
    detail::check_level(level, s.variables() - 1);
    std::vector<Monomial> image;
    for (const auto& mu : s) {
        if (mu.last_variable() > level) continue;
        std::vector<int> exps(mu.exponents().begin(), mu.exponents().begin() + level);
        image.emplace_back(std::move(exps));
    }
    return HypercubeSet(level, q, MonomialSet(level, std::move(image)));
}

inline Monomial specialize(const Monomial& mu, int level) {
    std::vector<int> exps(mu.exponents().begin(), mu.exponents().begin() + level);
    return Monomial(std::move(exps));
}

/// The expander applied to one member mu of S: move one unit of x_m onto x_{m-1}
/// when mu with x_m merged into x_{m-1} is not in S and deg_{x_{m-1}} mu + 1 < q.
inline Monomial expand_monomial(const Monomial& mu, const MonomialSet& s, int q) {
    const int m = s.variables() - 1;
    if (m < 1) return mu;
    Monomial merged = mu;
    merged[m - 1] += merged[m];
    merged[m] = 0;
    if (!s.contains(merged) && mu[m - 1] + 1 < q) {
        Monomial out = mu;
        out[m - 1] += 1;
        out[m] -= 1;
        return out;
    }
    return mu;
}

/// phi(S) = { phi(mu) : mu in S }.
inline MonomialSet expand(const MonomialSet& s, int q) {
    std::vector<Monomial> image;
    image.reserve(s.size());
    for (const auto& mu : s) image.push_back(expand_monomial(mu, s, q));
    return MonomialSet(s.variables(), std::move(image));
}

/// M_d(r): the first r reduced degree-d monomials in descending lex.
inline MonomialSet lex_set_projective(int m, int q, int d, std::size_t r) {
    const auto all = enumerate_reduced(m, q, d);
    if (r > all.size())
        throw CountOutOfRange("M_d(r) needs r <= " + std::to_string(all.size()) + ", got " + std::to_string(r));
    return MonomialSet(m + 1, std::vector<Monomial>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(r)));
}

}  // namespace footprint

#endif
