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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "footprint/formulas.hpp"
#include "footprint/prm_code.hpp"
#include "footprint/search.hpp"
#include "footprint/verify.hpp"

using namespace footprint;

namespace {

struct Check {
    std::ostringstream notes;
    bool ok = true;

    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (got == want) return;
        if (ok) notes << what << ": got " << got << ", want " << want;
        ok = false;
    }
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) notes << what;
        ok = ok && cond;
    }
};

std::string join(const std::vector<std::int64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + ")";
}

bool suites_pass(Check& c, const std::vector<std::string>& names, const VerifyConfig& config) {
    for (const auto& name : names)
        for (const auto& rep : run_suites(name, config))
            for (const auto& p : rep.properties) {
                c.expect(p.passed, rep.suite + ": " + p.name + ": " + p.counterexample);
                c.expect(p.checked > 0, rep.suite + ": " + p.name + " checked nothing");
            }
    return c.ok;
}

void criterion1(Check& c) {
    std::vector<std::int64_t> got, formula;
    for (int r = 1; r <= 6; ++r) {
        got.push_back(brute_force_er(r, 2, 2, 3).value);
        const auto f = conjectured_er(r, 2, 2, 3);
        c.expect(f.status == ErStatus::proven, "r=" + std::to_string(r) + " is not in the proven range");
        formula.push_back(to_int64(f.value));
    }
    c.equal(join(got), join({7, 5, 4, 2, 1, 0}), "e_r(2,2), q=3");
    c.equal(join(got), join(formula), "closed form");
}

void criterion2(Check& c) {
    std::vector<std::int64_t> lines, curve;
    for (int r = 1; r <= 3; ++r) lines.push_back(brute_force_er(r, 1, 2, 3).value);
    for (int r = 1; r <= 4; ++r) curve.push_back(brute_force_er(r, 3, 1, 4).value);
    c.equal(join(lines), join({4, 1, 0}), "e_r(1,2), q=3");
    c.equal(join(curve), join({3, 2, 1, 0}), "e_r(3,1), q=4");
    for (int r = 1; r <= 3; ++r) c.equal(Integer(lines[r - 1]), projective_count(2 - r, 3), "p_{m-r}");
}

void criterion3(Check& c) {
    std::vector<std::int64_t> got, k;
    for (int r = 1; r <= 6; ++r) {
        const auto found = brute_force_max_footprint(r, 2, 2, 3, 6);
        c.equal(found.subsets_enumerated, static_cast<std::uint64_t>(to_int64(binomial(6, r))), "subsets visited");
        got.push_back(found.value);
        k.push_back(to_int64(compute_K(r, 2, 2, 3)));
    }
    c.equal(join(got), join({8, 5, 4, 2, 1, 0}), "max footprint");
    c.equal(join(got), join(k), "K_r");
}

void criterion4(Check& c) {
    for (int d : {1, 2}) {
        const int total = static_cast<int>(to_int64(binomial(2 + d, d)));
        for (int r = 1; r <= total; ++r)
            c.equal(Integer(brute_force_affine_er(r, d, 2, 3).value), compute_H(r, d, 2, 3),
                    "affine d=" + std::to_string(d) + " r=" + std::to_string(r));
    }
}

void criterion5(Check& c) {
    std::uint64_t checked = 0;
    for (int q : {3, 4, 5, 7})
        for (int m = 1; m <= 4; ++m)
            for (int d = 1; d < q; ++d) {
                const auto total = binomial(m + d, d);
                for (Integer r = 1; r <= total; ++r) {
                    const std::string at = "q=" + std::to_string(q) + " d=" + std::to_string(d) + " m=" +
                                           std::to_string(m) + " r=" + to_string(r);
                    c.equal(compute_H_via_macaulay(r, d, m, q), compute_H(r, d, m, q), "H " + at);
                    c.equal(conjectured_er_macaulay(r, d, m, q), conjectured_er(r, d, m, q).value, "e_r " + at);
                    ++checked;
                }
            }
    c.expect(checked > 0, "no instances");
}

VerifyConfig quick() {
    VerifyConfig config;
    config.quick = true;
    return config;
}

void criterion6(Check& c) { suites_pass(c, {"clements-lindstrom", "wei", "affinecomb", "shadow"}, quick()); }

void criterion7(Check& c) {
    suites_pass(c, {"specialization", "expander", "footprint-decomposition"}, quick());
    const int star = stable_degree(2, 2, 3);
    const auto all = enumerate_reduced(2, 3, 2);
    detail::for_each_subset(all, [&](const MonomialSet& s) {
        const auto size = footprint_size(s, star, 3);
        for (int e = star + 1; e <= star + 2; ++e) c.equal(footprint_size(s, e, 3), size, "stable footprint size");
    });
}

void criterion8(Check& c) {
    for (int q : {2, 3, 4})
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d <= m * (q - 1); ++d) {
                const auto code = build_prm(d, m, q);
                c.equal(Integer(rank(FiniteField(q), code.generator)), sorensen_dim(d, m, q),
                        "rank q=" + std::to_string(q) + " d=" + std::to_string(d) + " m=" + std::to_string(m));
            }
    const auto line = build_prm(2, 1, 3);
    std::vector<std::int64_t> hierarchy;
    for (int r = 1; r <= 3; ++r) hierarchy.push_back(ghw_exhaustive(line, r).value);
    c.equal(join(hierarchy), join({2, 3, 4}), "PRM_3(2,1) hierarchy");
    c.equal(ghw_exhaustive(build_prm(2, 2, 3), 1).value, 6, "d_1(PRM_3(2,2))");
    c.equal(ghw_exhaustive(build_prm(2, 2, 2), 1).value, 2, "d_1(PRM_2(2,2))");
    for (int d : {1, 2})
        for (int m : {1, 2}) {
            const int k = static_cast<int>(build_prm(d, m, 3).k);
            c.expect(check_duality(d, m, 3, k).passed, "duality q=3 d=" + std::to_string(d) + " m=" + std::to_string(m));
        }
    const auto odd = check_duality(3, 1, 2, 3);
    c.equal(odd.r_d, Integer(1), "r_3 at q=2, m=1");
    c.expect(odd.passed, "duality q=2 d=3 m=1");
}

void criterion9(Check& c) {
    for (int q : {3, 4, 5})
        for (int m = 1; m <= 2; ++m)
            for (int d = 1; d < q; ++d) {
                const FiniteField field(q);
                const auto total = to_int64(binomial(m + d, d));
                for (int r = 1; r <= total; ++r)
                    c.equal(Integer(count_common_zeros(construct_witness(r, d, m, q), m, field)),
                            conjectured_er(r, d, m, q).value,
                            "witness q=" + std::to_string(q) + " d=" + std::to_string(d) + " m=" + std::to_string(m) +
                                " r=" + std::to_string(r));
            }
}

void criterion10(Check& c) {
    SearchOptions options;
    options.audit_footprint = true;
    std::uint64_t visited = 0;
    for (int r = 1; r <= 6; ++r) {
        const auto found = brute_force_er(r, 2, 2, 3, ErMode::projective_reduced, options);
        c.equal(found.footprint_checked, found.subspaces_enumerated, "audited subspaces");
        c.equal(found.footprint_violations, std::uint64_t{0}, "violations at r=" + std::to_string(r));
        visited += found.footprint_checked;
    }
    c.expect(visited > 0, "nothing audited");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"exhaustive e_r(2,2) over F_3", criterion1},
        {"lines and curves", criterion2},
        {"maximal footprint equals K_r", criterion3},
        {"affine search equals H_r", criterion4},
        {"formula equivalences", criterion5},
        {"extremal combinatorics suites", criterion6},
        {"specialization, expander, stability", criterion7},
        {"projective Reed-Muller codes", criterion8},
        {"witness families", criterion9},
        {"footprint bound audit", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        failures += !c.ok;
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << " (" << std::fixed
                  << std::setprecision(2) << took.count() << " s)";
        if (!c.ok) std::cout << ": " << c.notes.str();
        std::cout << "\n";
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria passed\n";
    return failures ? 1 : 0;
}
