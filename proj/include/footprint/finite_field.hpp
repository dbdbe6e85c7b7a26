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

#ifndef FOOTPRINT_FINITE_FIELD_HPP
#define FOOTPRINT_FINITE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace footprint {

/// Integer encoding of a field element, 0 <= a < q.  For q = p^e the base-p
/// digits of the encoding are the coefficients (constant term first) of the
/// polynomial representative modulo the field's defining polynomial.
using Element = std::uint32_t;

enum class FieldOp { add, sub, mul, inv, neg, pow };

/**
 * Table-driven arithmetic in F_q for small prime powers q <= kMaxOrder.
 *
 * Extension fields are built on the lexicographically smallest monic
 * irreducible polynomial of degree e over F_p (coefficients compared as the
 * base-p integer c_0 + c_1 p + ... + c_{e-1} p^{e-1}).  Multiplication goes
 * through discrete log / antilog tables relative to the smallest primitive
 * element.  Instances are immutable once built.
 */
class FiniteField {
   public:
    static constexpr int kMaxOrder = 64;

    explicit FiniteField(int q);

    int order() const noexcept { return q_; }
    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return e_; }
    /// Coefficients of the defining polynomial, constant term first, including
    /// the leading 1.  Empty for prime fields.
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    Element generator() const noexcept { return generator_; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }

    Element add(Element a, Element b) const { return add_[index(a, b)]; }
    Element sub(Element a, Element b) const { return add_[index(a, neg(b))]; }
    Element mul(Element a, Element b) const {
        check(a);
        check(b);
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    Element neg(Element a) const {
        check(a);
        return neg_[a];
    }
    Element inv(Element a) const {
        check(a);
        if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
        return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    /// a^exponent; negative exponents go through the inverse, 0^0 = 1.
    Element pow(Element a, std::int64_t exponent) const {
        check(a);
        if (exponent == 0) return 1;
        if (a == 0) {
            if (exponent < 0) throw DivisionByZero("negative power of zero in F_" + std::to_string(q_));
            return 0;
        }
        const std::int64_t n = q_ - 1;
        std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (((exponent % n) + n) % n)) % n;
        return antilog_[static_cast<std::size_t>(k)];
    }
    /// Discrete logarithm to base generator(); a must be nonzero.
    int log(Element a) const {
        check(a);
        if (a == 0) throw DivisionByZero("logarithm of zero");
        return log_[a];
    }

    /// All q elements in encoding order: 0, 1, 2, ...
    std::vector<Element> elements() const {
        std::vector<Element> out(static_cast<std::size_t>(q_));
        for (int i = 0; i < q_; ++i) out[static_cast<std::size_t>(i)] = static_cast<Element>(i);
        return out;
    }

    bool contains(std::int64_t a) const noexcept { return a >= 0 && a < q_; }

    /// Human-readable polynomial form of an element, e.g. "x+1" in F_4.
    std::string describe(Element a) const;

   private:
    std::size_t index(Element a, Element b) const {
        check(a);
        check(b);
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
    }
    void check(Element a) const {
        if (a >= static_cast<Element>(q_))
            throw BadEncoding("element " + std::to_string(a) + " out of range for F_" + std::to_string(q_));
    }

    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    std::vector<int> modulus_;
    Element generator_ = 0;
    std::vector<Element> add_;
    std::vector<Element> neg_;
    std::vector<int> log_;
    std::vector<Element> antilog_;
};

namespace detail {

inline std::vector<int> digits(int value, int base, int count) {
    std::vector<int> out(static_cast<std::size_t>(count));
    for (auto& d : out) {
        d = value % base;
        value /= base;
    }
    return out;
}

inline int undigits(const std::vector<int>& digits, int base) {
    int value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) value = value * base + *it;
    return value;
}

/// Product of two residues (digit vectors of length e) modulo a monic degree-e polynomial.
inline std::vector<int> mul_mod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& modulus,
                                int p) {
    const std::size_t e = a.size();
    std::vector<int> prod(2 * e, 0);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t top = 2 * e; top-- > e;) {
        const int c = prod[top];
        if (c == 0) continue;
        // subtract c * x^(top - e) * modulus
        for (std::size_t k = 0; k <= e; ++k) {
            auto& slot = prod[top - e + k];
            slot = ((slot - c * modulus[k]) % p + p) % p;
        }
    }
    prod.resize(e);
    return prod;
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

inline FiniteField::FiniteField(int q) : q_(q) {
    if (q < 2) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    if (q > kMaxOrder)
        throw CapExceeded("field order " + std::to_string(q) + " exceeds the cap " + std::to_string(kMaxOrder));
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    for (int rest = q; rest > 1; rest /= p) {
        if (rest % p != 0) throw NotPrimePower(std::to_string(q) + " is not a prime power");
        ++e;
    }
    p_ = p;
    e_ = e;

    const auto n = static_cast<std::size_t>(q);
    add_.resize(n * n);
    neg_.resize(n);
    for (int a = 0; a < q; ++a) {
        const auto da = detail::digits(a, p, e);
        std::vector<int> dn(da.size());
        for (std::size_t k = 0; k < da.size(); ++k) dn[k] = (p - da[k]) % p;
        neg_[static_cast<std::size_t>(a)] = static_cast<Element>(detail::undigits(dn, p));
        for (int b = 0; b < q; ++b) {
            const auto db = detail::digits(b, p, e);
            std::vector<int> ds(da.size());
            for (std::size_t k = 0; k < da.size(); ++k) ds[k] = (da[k] + db[k]) % p;
            add_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] =
                static_cast<Element>(detail::undigits(ds, p));
        }
    }

    // Plain product table, used only to derive the log tables.
    std::vector<int> product(n * n, 0);
    if (e == 1) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) product[static_cast<std::size_t>(a * q + b)] = (a * b) % q;
    } else {
        // Smallest monic irreducible: the quotient ring has no zero divisors.
        for (int candidate = 0; candidate < q; ++candidate) {
            auto poly = detail::digits(candidate, p, e);
            poly.push_back(1);
            bool irreducible = true;
            for (int a = 1; a < q && irreducible; ++a) {
                const auto da = detail::digits(a, p, e);
                for (int b = a; b < q; ++b) {
                    const auto prod = detail::mul_mod(da, detail::digits(b, p, e), poly, p);
                    if (detail::undigits(prod, p) == 0) {
                        irreducible = false;
                        break;
                    }
                }
            }
            if (irreducible) {
                modulus_ = std::move(poly);
                break;
            }
        }
        for (int a = 0; a < q; ++a) {
            const auto da = detail::digits(a, p, e);
            for (int b = 0; b < q; ++b)
                product[static_cast<std::size_t>(a * q + b)] =
                    detail::undigits(detail::mul_mod(da, detail::digits(b, p, e), modulus_, p), p);
        }
    }

    // Smallest element of multiplicative order q - 1.
    log_.assign(n, -1);
    antilog_.assign(n - 1, 0);
    for (int g = 1; g < q; ++g) {
        std::vector<int> seen(n, -1);
        int x = 1;
        int k = 0;
        bool primitive = true;
        for (; k < q - 1; ++k) {
            if (seen[static_cast<std::size_t>(x)] >= 0) {
                primitive = false;
                break;
            }
            seen[static_cast<std::size_t>(x)] = k;
            x = product[static_cast<std::size_t>(x * q + g)];
        }
        if (primitive && x == 1) {
            generator_ = static_cast<Element>(g);
            for (int a = 1; a < q; ++a) {
                log_[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(a)];
                antilog_[static_cast<std::size_t>(seen[static_cast<std::size_t>(a)])] = static_cast<Element>(a);
            }
            break;
        }
    }
}

inline std::string FiniteField::describe(Element a) const {
    check(a);
    if (e_ == 1) return std::to_string(a);
    const auto d = detail::digits(static_cast<int>(a), p_, e_);
    std::string out;
    for (int k = e_ - 1; k >= 0; --k) {
        const int c = d[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

/// Builds F_q; throws NotPrimePower or CapExceeded.
inline FiniteField make_field(int q) { return FiniteField(q); }

/// Single dispatch point over the field operations.  For `pow`, `b` is the exponent.
inline Element field_arith(const FiniteField& field, FieldOp op, std::int64_t a, std::int64_t b = 0) {
    auto element = [&](std::int64_t v) {
        if (!field.contains(v))
            throw BadEncoding("element " + std::to_string(v) + " out of range for F_" +
                              std::to_string(field.order()));
        return static_cast<Element>(v);
    };
    switch (op) {
        case FieldOp::add: return field.add(element(a), element(b));
        case FieldOp::sub: return field.sub(element(a), element(b));
        case FieldOp::mul: return field.mul(element(a), element(b));
        case FieldOp::inv: return field.inv(element(a));
        case FieldOp::neg: return field.neg(element(a));
        case FieldOp::pow: return field.pow(element(a), b);
    }
    throw std::invalid_argument("unknown field operation");
}

inline std::vector<Element> enumerate_field(const FiniteField& field) { return field.elements(); }

}  // namespace footprint

#endif
