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

#ifndef FOOTPRINT_POLYNOMIAL_HPP
#define FOOTPRINT_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"
#include "monomial.hpp"
#include "projective_monomials.hpp"

namespace footprint {

/// Sparse polynomial over F_q: monomial -> nonzero coefficient, terms in descending lex.
class Polynomial {
   public:
    using Terms = std::map<Monomial, Element, LexGreater>;

    explicit Polynomial(int variables) : variables_(variables) {}

    int variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Element coefficient(const Monomial& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Adds c * mu, dropping the term if it cancels.
    void add_term(const FiniteField& field, const Monomial& mu, Element c) {
        if (mu.variables() != variables_) throw AmbientMismatch("term in the wrong number of variables");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(mu, c);
        if (!inserted) {
            it->second = field.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Largest monomial in lex; the polynomial must be nonzero.
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
        return terms_.begin()->first;
    }

    Element evaluate(const FiniteField& field, std::span<const Element> point) const {
        if (static_cast<int>(point.size()) != variables_) throw AmbientMismatch("point has the wrong dimension");
        Element sum = 0;
        for (const auto& [mu, c] : terms_) {
            Element term = c;
            for (int i = 0; i < variables_ && term != 0; ++i)
                if (mu[i] > 0) term = field.mul(term, field.pow(point[static_cast<std::size_t>(i)], mu[i]));
            sum = field.add(sum, term);
        }
        return sum;
    }

    Polynomial times(const FiniteField& field, const Polynomial& other) const {
        if (other.variables_ != variables_) throw AmbientMismatch("product of polynomials in different rings");
        Polynomial out(variables_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : other.terms_) out.add_term(field, a * b, field.mul(ca, cb));
        return out;
    }

    int total_degree() const {
        int deg = -1;
        for (const auto& [mu, c] : terms_) deg = std::max(deg, mu.degree());
        return deg;
    }

    bool operator==(const Polynomial&) const = default;

   private:
    int variables_;
    Terms terms_;
};

/// A form of fixed degree d: every stored monomial has degree exactly d.
class HomogeneousPolynomial {
   public:
    HomogeneousPolynomial(int variables, int degree) : degree_(degree), poly_(variables) {}
    HomogeneousPolynomial(int degree, Polynomial poly) : degree_(degree), poly_(std::move(poly)) {
        for (const auto& [mu, c] : poly_.terms())
            if (mu.degree() != degree_)
                throw std::invalid_argument("term " + to_string(mu) + " is not of degree " + std::to_string(degree_));
    }

    int degree() const noexcept { return degree_; }
    int variables() const noexcept { return poly_.variables(); }
    /// Ambient projective dimension m.
    int ambient() const noexcept { return poly_.variables() - 1; }
    const Polynomial& polynomial() const noexcept { return poly_; }
    const Polynomial::Terms& terms() const noexcept { return poly_.terms(); }
    bool is_zero() const noexcept { return poly_.is_zero(); }
    const Monomial& leading_monomial() const { return poly_.leading_monomial(); }

    void add_term(const FiniteField& field, const Monomial& mu, Element c) {
        if (mu.degree() != degree_)
            throw std::invalid_argument("term " + to_string(mu) + " is not of degree " + std::to_string(degree_));
        poly_.add_term(field, mu, c);
    }

    Element evaluate(const FiniteField& field, std::span<const Element> point) const {
        return poly_.evaluate(field, point);
    }

    bool operator==(const HomogeneousPolynomial&) const = default;

   private:
    int degree_;
    Polynomial poly_;
};

/// Termwise projective reduction with coefficient aggregation; agrees with the
/// input at every point of F_q^{m+1}.
inline HomogeneousPolynomial reduce_polynomial(const FiniteField& field, const HomogeneousPolynomial& f) {
    HomogeneousPolynomial out(f.variables(), f.degree());
    for (const auto& [mu, c] : f.terms()) out.add_term(field, reduce_monomial(mu, field.order()), c);
    return out;
}

inline bool is_projectively_reduced(const HomogeneousPolynomial& f, int q) {
    for (const auto& [mu, c] : f.terms())
        if (!is_projectively_reduced(mu, q)) return false;
    return true;
}

/// Homogenizes f (total degree <= d) to degree d using the variable at `index`,
/// which must not occur in f.
inline HomogeneousPolynomial homogenize(const FiniteField& field, const Polynomial& f, int index, int d) {
    HomogeneousPolynomial out(f.variables(), d);
    for (const auto& [mu, c] : f.terms()) {
        if (mu[index] != 0) throw std::invalid_argument("homogenizing variable already occurs");
        if (mu.degree() > d) throw std::invalid_argument("polynomial degree exceeds the target degree");
        Monomial lifted = mu;
        lifted[index] = d - mu.degree();
        out.add_term(field, lifted, c);
    }
    return out;
}

}  // namespace footprint

#endif
