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

#ifndef FOOTPRINT_TESTS_ORACLES_HPP
#define FOOTPRINT_TESTS_ORACLES_HPP

// Slow, direct implementations used as references by the tests.  Nothing here
// calls into the library's counting or ranking code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;

/// Every tuple of the given length with entries in [0, cap] (cap < 0 means no cap) and sum <= total.
inline std::vector<Tuple> tuples(int length, int total, int cap) {
    std::vector<Tuple> out;
    Tuple t(static_cast<std::size_t>(length), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == length) {
            out.push_back(t);
            return;
        }
        const int hi = cap < 0 ? left : std::min(cap, left);
        for (int v = 0; v <= hi; ++v) {
            t[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
    return out;
}

inline int sum(const Tuple& t) {
    int s = 0;
    for (int v : t) s += v;
    return s;
}

inline void sort_descending(std::vector<Tuple>& ts) { std::sort(ts.begin(), ts.end(), std::greater<>()); }

/// Q^m_{<=d} in descending lex.
inline std::vector<Tuple> bounded(int m, int d, int q) {
    auto ts = tuples(m, d, q - 1);
    sort_descending(ts);
    return ts;
}

/// Exponent tuples of degree d in m+1 variables that are projectively reduced, descending lex.
inline std::vector<Tuple> reduced(int m, int q, int d) {
    std::vector<Tuple> out;
    for (auto& t : tuples(m + 1, d, -1)) {
        if (sum(t) != d) continue;
        int last = -1;
        for (int i = 0; i <= m; ++i)
            if (t[static_cast<std::size_t>(i)] > 0) last = i;
        bool ok = true;
        for (int i = 0; i < last; ++i) ok = ok && t[static_cast<std::size_t>(i)] < q;
        if (ok) out.push_back(t);
    }
    sort_descending(out);
    return out;
}

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

inline std::int64_t p(int j, int q) {
    if (j < 0) return 0;
    std::int64_t s = 0;
    for (int i = 0; i <= j; ++i) s += ipow(q, i);
    return s;
}

/// Pascal's triangle, 0 outside 0 <= k <= n.
inline std::int64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::int64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
        row = next;
    }
    return row[static_cast<std::size_t>(k)];
}

/// Polynomial-basis arithmetic in F_p[x]/(modulus), elements as base-p digit
/// vectors (constant first).  Used to cross-check the table-driven field.
struct PolyField {
    int p;
    std::vector<int> modulus;  // constant first, monic, degree e

    int e() const { return modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1; }
    std::vector<int> digits(int a) const {
        std::vector<int> d(static_cast<std::size_t>(e()));
        for (auto& x : d) {
            x = a % p;
            a /= p;
        }
        return d;
    }
    int value(const std::vector<int>& d) const {
        int v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
        return v;
    }
    int add(int a, int b) const {
        auto x = digits(a), y = digits(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
        return value(x);
    }
    int mul(int a, int b) const {
        if (modulus.empty()) return a * b % p;
        const auto x = digits(a), y = digits(b);
        const int n = e();
        std::vector<int> prod(static_cast<std::size_t>(2 * n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p;
        for (int top = 2 * n - 1; top >= n; --top) {
            const int c = prod[static_cast<std::size_t>(top)];
            if (!c) continue;
            for (int k = 0; k <= n; ++k) {
                auto& slot = prod[static_cast<std::size_t>(top - n + k)];
                slot = ((slot - c * modulus[static_cast<std::size_t>(k)]) % p + p) % p;
            }
        }
        prod.resize(static_cast<std::size_t>(n));
        return value(prod);
    }
};

/// Deterministic generator for property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20261017);
    return engine;
}

}  // namespace oracle

#endif
