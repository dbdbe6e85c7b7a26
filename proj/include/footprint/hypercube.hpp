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

#ifndef FOOTPRINT_HYPERCUBE_HPP
#define FOOTPRINT_HYPERCUBE_HPP

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace footprint {

/// Subset of the hypercube H^(l): reduced monomials in x_0..x_{l-1}, every exponent below q.
class HypercubeSet {
   public:
    HypercubeSet(int ell, int q) : ell_(ell), q_(q), elements_(ell) {
        if (ell < 0) throw BadLevel("negative hypercube dimension");
        if (q < 2) throw std::invalid_argument("hypercube needs q >= 2");
    }
    HypercubeSet(int ell, int q, MonomialSet elements) : HypercubeSet(ell, q) {
        if (elements.variables() != ell)
            throw AmbientMismatch("hypercube of dimension " + std::to_string(ell) + " given monomials in " +
                                  std::to_string(elements.variables()) + " variables");
        for (const auto& mu : elements)
            for (int a : mu.exponents())
                if (a >= q) throw NotInHypercube(to_string(mu) + " has an exponent >= q = " + std::to_string(q));
        elements_ = std::move(elements);
    }

    int dimension() const noexcept { return ell_; }
    int q() const noexcept { return q_; }
    const MonomialSet& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(const Monomial& mu) const { return elements_.contains(mu); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool operator==(const HypercubeSet&) const = default;

   private:
    int ell_;
    int q_;
    MonomialSet elements_;
};

enum class DegreeRelation { equal, at_most, below, at_least, above };

struct DegreeFilter {
    DegreeRelation relation;
    int degree;

    bool accepts(int deg) const noexcept {
        switch (relation) {
            case DegreeRelation::equal: return deg == degree;
            case DegreeRelation::at_most: return deg <= degree;
            case DegreeRelation::below: return deg < degree;
            case DegreeRelation::at_least: return deg >= degree;
            case DegreeRelation::above: return deg > degree;
        }
        return false;
    }
};

/// The whole hypercube, optionally sliced by degree.
inline HypercubeSet hypercube(int ell, int q, std::optional<DegreeFilter> filter = std::nullopt) {
    HypercubeSet probe(ell, q);
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(ell), 0);
    while (true) {
        Monomial mu(exps);
        if (!filter || filter->accepts(mu.degree())) out.push_back(mu);
        int i = ell - 1;
        while (i >= 0 && exps[static_cast<std::size_t>(i)] == q - 1) exps[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++exps[static_cast<std::size_t>(i)];
    }
    return HypercubeSet(ell, q, MonomialSet(ell, std::move(out)));
}

enum class LexSetMode { bounded_degree, exact_degree };

/// First `count` elements, in descending lex, of H_{<=d} (bounded_degree) or H_d (exact_degree).
inline HypercubeSet hypercube_lex_set(int ell, int q, int d, std::size_t count, LexSetMode mode) {
    const DegreeFilter filter{mode == LexSetMode::bounded_degree ? DegreeRelation::at_most : DegreeRelation::equal, d};
    const auto ambient = hypercube(ell, q, filter);
    if (count > ambient.size())
        throw CountOutOfRange("requested " + std::to_string(count) + " elements of a set of size " +
                              std::to_string(ambient.size()));
    std::vector<Monomial> first(ambient.begin(), ambient.begin() + static_cast<std::ptrdiff_t>(count));
    return HypercubeSet(ell, q, MonomialSet(ell, std::move(first)));
}

/// SH^(l)(T): hypercube monomials divisible by some member of T.
inline HypercubeSet hypercube_shadow(const HypercubeSet& t, std::optional<DegreeFilter> filter = std::nullopt) {
    const auto all = hypercube(t.dimension(), t.q(), filter);
    return HypercubeSet(t.dimension(), t.q(), all.elements().filter([&](const Monomial& mu) {
        return t.elements().divides(mu);
    }));
}

/// FP^(l)(T) = H^(l) minus SH^(l)(T), optionally sliced by degree.
inline HypercubeSet hypercube_footprint(const HypercubeSet& t, std::optional<DegreeFilter> filter = std::nullopt) {
    const auto all = hypercube(t.dimension(), t.q(), filter);
    return HypercubeSet(t.dimension(), t.q(), all.elements().filter([&](const Monomial& mu) {
        return !t.elements().divides(mu);
    }));
}

inline HypercubeSet hypercube_union(const HypercubeSet& a, const HypercubeSet& b) {
    if (a.dimension() != b.dimension() || a.q() != b.q()) throw AmbientMismatch("union of different hypercubes");
    return HypercubeSet(a.dimension(), a.q(), set_union(a.elements(), b.elements()));
}

}  // namespace footprint

#endif
