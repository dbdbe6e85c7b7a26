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

#ifndef FOOTPRINT_TOOLS_JSON_IO_HPP
#define FOOTPRINT_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "footprint/integer.hpp"
#include "footprint/monomial.hpp"
#include "footprint/polynomial.hpp"
#include "footprint/prm_code.hpp"
#include "footprint/verify.hpp"

namespace footprint::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

/// Exact integers: a JSON number when it fits in 64 bits, else a decimal string.
inline Json integer(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return to_string(value);
}

inline Json polynomial(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& [mu, c] : f.terms()) terms.push_back({{"monomial", to_string(mu)}, {"coeff", c}});
    return terms;
}

inline Json polynomials(const std::vector<Polynomial>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(polynomial(f));
    return out;
}

inline Json polynomials(const std::vector<HomogeneousPolynomial>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(polynomial(f.polynomial()));
    return out;
}

inline Json monomials(const MonomialSet& s) {
    Json out = Json::array();
    for (const auto& mu : s) out.push_back(to_string(mu));
    return out;
}

inline Json code(const LinearCode& c) {
    Json points = Json::array();
    for (const auto& p : c.points) points.push_back(p.coords());
    return {{"schema", kSchema}, {"q", c.q},           {"d", c.d},          {"m", c.m},
            {"n", c.n},          {"k", c.k},           {"rows", monomials(c.rows)},
            {"points", points},  {"generator", c.generator}};
}

inline Json suite(const SuiteReport& report) {
    Json props = Json::array();
    for (const auto& p : report.properties) {
        Json entry = {{"name", p.name}, {"passed", p.passed}, {"checked", p.checked}, {"skipped", p.skipped}};
        if (!p.passed) entry["counterexample"] = p.counterexample;
        props.push_back(std::move(entry));
    }
    return {{"suite", report.suite}, {"passed", report.passed()}, {"properties", props}};
}

}  // namespace footprint::io

#endif
