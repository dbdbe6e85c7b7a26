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

#ifndef FOOTPRINT_PROJECTIVE_SPACE_HPP
#define FOOTPRINT_PROJECTIVE_SPACE_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"
#include "polynomial.hpp"

namespace footprint {

/// Canonical representative of a point of P^m(F_q): the last nonzero coordinate is 1.
class ProjectivePoint {
   public:
    explicit ProjectivePoint(std::vector<Element> coords) : coords_(std::move(coords)) {
        int last = -1;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] != 0) last = static_cast<int>(i);
        if (last < 0) throw std::invalid_argument("the zero vector is not a projective point");
        if (coords_[static_cast<std::size_t>(last)] != 1)
            throw std::invalid_argument("last nonzero coordinate must be 1");
    }

    const std::vector<Element>& coords() const noexcept { return coords_; }
    int ambient() const noexcept { return static_cast<int>(coords_.size()) - 1; }
    bool operator==(const ProjectivePoint&) const = default;

   private:
    std::vector<Element> coords_;
};

inline std::string to_string(const ProjectivePoint& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.coords().size(); ++i) {
        if (i) out += ":";
        out += std::to_string(p.coords()[i]);
    }
    return out + ")";
}

/// All points of P^m(F_q): blocks by the index l of the last nonzero coordinate,
/// l = m first; inside a block x_0..x_{l-1} run through the field like an
/// odometer with the last coordinate fastest.
inline std::vector<ProjectivePoint> enumerate_projective_points(int m, const FiniteField& field) {
    if (m < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
    const auto elements = field.elements();
    std::vector<ProjectivePoint> points;
    for (int l = m; l >= 0; --l) {
        std::vector<std::size_t> digits(static_cast<std::size_t>(l), 0);
        while (true) {
            std::vector<Element> coords(static_cast<std::size_t>(m + 1), 0);
            for (int i = 0; i < l; ++i) coords[static_cast<std::size_t>(i)] = elements[digits[static_cast<std::size_t>(i)]];
            coords[static_cast<std::size_t>(l)] = 1;
            points.emplace_back(std::move(coords));
            int i = l - 1;
            while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == elements.size()) digits[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
        }
    }
    return points;
}

inline std::vector<ProjectivePoint> enumerate_projective_points(int m, int q) {
    return enumerate_projective_points(m, FiniteField(q));
}

/// All of F_q^m in odometer order, last coordinate fastest.
inline std::vector<std::vector<Element>> enumerate_affine_points(int m, const FiniteField& field) {
    const auto elements = field.elements();
    std::vector<std::vector<Element>> points;
    std::vector<std::size_t> digits(static_cast<std::size_t>(m), 0);
    while (true) {
        std::vector<Element> coords(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) coords[static_cast<std::size_t>(i)] = elements[digits[static_cast<std::size_t>(i)]];
        points.push_back(std::move(coords));
        int i = m - 1;
        while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == elements.size()) digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return points;
}

/// |V(polys)(F_q)| in P^m.
inline std::size_t count_common_zeros(const std::vector<HomogeneousPolynomial>& polys, int m, const FiniteField& field) {
    for (const auto& f : polys)
        if (f.ambient() != m)
            throw AmbientMismatch("polynomial in " + std::to_string(f.variables()) + " variables, expected " +
                                  std::to_string(m + 1));
    std::size_t zeros = 0;
    for (const auto& p : enumerate_projective_points(m, field)) {
        bool all = true;
        for (const auto& f : polys)
            if (f.evaluate(field, p.coords()) != 0) {
                all = false;
                break;
            }
        zeros += all;
    }
    return zeros;
}

inline std::size_t count_common_zeros(const std::vector<HomogeneousPolynomial>& polys, int m, int q) {
    return count_common_zeros(polys, m, FiniteField(q));
}

}  // namespace footprint

#endif
