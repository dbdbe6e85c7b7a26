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

#ifndef FOOTPRINT_MONOMIAL_HPP
#define FOOTPRINT_MONOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace footprint {

/// x_0^{a_0} ... x_{n-1}^{a_{n-1}}, stored as its exponent tuple.  The number of
/// variables is the tuple length; a monomial of P^m has m + 1 of them.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
        for (int a : exponents_)
            if (a < 0) throw std::invalid_argument("negative exponent in monomial");
    }
    Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

    /// The constant monomial 1 in `variables` variables.
    static Monomial one(int variables) { return Monomial(std::vector<int>(static_cast<std::size_t>(variables), 0)); }
    /// x_index^power in `variables` variables.
    static Monomial variable(int variables, int index, int power = 1) {
        auto m = one(variables);
        m.exponents_.at(static_cast<std::size_t>(index)) = power;
        return m;
    }

    int variables() const noexcept { return static_cast<int>(exponents_.size()); }
    int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return exponents_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const noexcept { return exponents_; }

    int degree() const noexcept { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }
    bool is_one() const noexcept {
        return std::all_of(exponents_.begin(), exponents_.end(), [](int a) { return a == 0; });
    }
    /// Index of the last variable with a positive exponent; -1 for the constant.
    int last_variable() const noexcept {
        for (int i = variables() - 1; i >= 0; --i)
            if (exponents_[static_cast<std::size_t>(i)] > 0) return i;
        return -1;
    }
    /// Level in the decomposition of reduced monomials: last variable, with 1 at level 0.
    int level() const noexcept { return std::max(last_variable(), 0); }

    bool divides(const Monomial& other) const {
        same_ring(other);
        for (std::size_t i = 0; i < exponents_.size(); ++i)
            if (exponents_[i] > other.exponents_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        same_ring(other);
        auto out = *this;
        for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
        return out;
    }

    /// Lexicographic on exponent tuples, so x_0 > x_1 > ... > x_{n-1}.
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

   private:
    void same_ring(const Monomial& other) const {
        if (other.variables() != variables())
            throw AmbientMismatch("monomials in " + std::to_string(variables()) + " and " +
                                  std::to_string(other.variables()) + " variables");
    }

    std::vector<int> exponents_;
};

/// Orders monomials descending in lex, the canonical iteration order everywhere.
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

/// Finite set of monomials over a common variable count, iterated in descending lex.
class MonomialSet {
   public:
    using const_iterator = std::vector<Monomial>::const_iterator;

    explicit MonomialSet(int variables = 0) : variables_(variables) {}
    MonomialSet(int variables, std::vector<Monomial> elements) : variables_(variables), elements_(std::move(elements)) {
        for (const auto& mu : elements_)
            if (mu.variables() != variables_)
                throw AmbientMismatch("monomial with " + std::to_string(mu.variables()) + " variables in a set over " +
                                      std::to_string(variables_));
        std::sort(elements_.begin(), elements_.end(), LexGreater{});
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    int variables() const noexcept { return variables_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const_iterator begin() const noexcept { return elements_.begin(); }
    const_iterator end() const noexcept { return elements_.end(); }
    const Monomial& operator[](std::size_t i) const { return elements_[i]; }
    const Monomial& front() const { return elements_.front(); }
    const Monomial& back() const { return elements_.back(); }
    const std::vector<Monomial>& elements() const noexcept { return elements_; }

    bool contains(const Monomial& mu) const {
        return std::binary_search(elements_.begin(), elements_.end(), mu, LexGreater{});
    }
    void insert(const Monomial& mu) {
        if (mu.variables() != variables_) throw AmbientMismatch("monomial does not match the set's variables");
        auto it = std::lower_bound(elements_.begin(), elements_.end(), mu, LexGreater{});
        if (it == elements_.end() || *it != mu) elements_.insert(it, mu);
    }
    /// Some member divides mu.
    bool divides(const Monomial& mu) const {
        return std::any_of(elements_.begin(), elements_.end(), [&](const Monomial& nu) { return nu.divides(mu); });
    }

    MonomialSet filter(const std::function<bool(const Monomial&)>& keep) const {
        MonomialSet out(variables_);
        for (const auto& mu : elements_)
            if (keep(mu)) out.elements_.push_back(mu);
        return out;
    }

    bool operator==(const MonomialSet&) const = default;

   private:
    int variables_;
    std::vector<Monomial> elements_;
};

inline MonomialSet set_union(const MonomialSet& a, const MonomialSet& b) {
    if (a.variables() != b.variables()) throw AmbientMismatch("union of sets over different variables");
    std::vector<Monomial> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return MonomialSet(a.variables(), std::move(all));
}

/// Text form used by the CLI and JSON files: "x0^2*x1*x2^3", "1" for the constant.
inline std::string to_string(const Monomial& mu) {
    std::string out;
    for (int i = 0; i < mu.variables(); ++i) {
        if (mu[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i);
        if (mu[i] != 1) out += "^" + std::to_string(mu[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::vector<std::string> to_strings(const MonomialSet& set) {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (const auto& mu : set) out.push_back(to_string(mu));
    return out;
}

/// Parses the text form; `variables` fixes the ambient ring.
inline Monomial parse_monomial(std::string_view text, int variables) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto fail = [&](const std::string& why) { return ParseError("bad monomial '" + std::string(text) + "': " + why); };
    if (s.empty()) throw fail("empty");
    auto mu = Monomial::one(variables);
    if (s == "1") return mu;

    std::size_t pos = 0;
    auto read_number = [&]() {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || pos - start > 6) throw fail("expected a number at offset " + std::to_string(start));
        return std::stoi(s.substr(start, pos - start));
    };
    while (true) {
        if (pos >= s.size() || s[pos] != 'x') throw fail("expected 'x' at offset " + std::to_string(pos));
        ++pos;
        const int index = read_number();
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            power = read_number();
        }
        if (index >= variables)
            throw fail("variable x" + std::to_string(index) + " outside x0..x" + std::to_string(variables - 1));
        mu[index] += power;
        if (pos == s.size()) break;
        if (s[pos] != '*') throw fail("expected '*' at offset " + std::to_string(pos));
        ++pos;
    }
    return mu;
}

inline MonomialSet parse_monomial_set(const std::vector<std::string>& texts, int variables) {
    std::vector<Monomial> elements;
    elements.reserve(texts.size());
    for (const auto& t : texts) elements.push_back(parse_monomial(t, variables));
    return MonomialSet(variables, std::move(elements));
}

}  // namespace footprint

#endif
