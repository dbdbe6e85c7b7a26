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

#ifndef FOOTPRINT_INTEGER_HPP
#define FOOTPRINT_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace footprint {

/// Exact integer used for every count that may outgrow 64 bits
/// (binomials, H_r, K_r, subspace counts).
using Integer = boost::multiprecision::cpp_int;

/// C(n, k) with C(n, k) = 0 for k < 0 or n < k.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Integer power(std::int64_t base, std::int64_t exponent) {
    Integer result = 1;
    for (std::int64_t i = 0; i < exponent; ++i) result *= base;
    return result;
}

/// floor(q^e) for e >= -1, i.e. 0 when e = -1.
inline Integer floor_power(std::int64_t q, std::int64_t exponent) {
    if (exponent < 0) return 0;
    return power(q, exponent);
}

/// Number of points of P^j(F_q); zero for j < 0.
inline Integer projective_count(std::int64_t j, std::int64_t q) {
    Integer result = 0;
    for (std::int64_t i = 0; i <= j; ++i) result += power(q, i);
    return result;
}

/// Gaussian binomial [n, k]_q, the number of k-dimensional subspaces of F_q^n.
inline Integer gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t q) {
    if (k < 0 || n < k) return 0;
    Integer num = 1;
    Integer den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= power(q, n - i) - 1;
        den *= power(q, i + 1) - 1;
    }
    return num / den;
}

inline std::string to_string(const Integer& value) { return value.str(); }

/// Narrowing conversion for values already known to be small.
inline std::int64_t to_int64(const Integer& value) {
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(value);
}

}  // namespace footprint

#endif
