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

#ifndef FOOTPRINT_VERIFY_HPP
#define FOOTPRINT_VERIFY_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "formulas.hpp"
#include "hypercube.hpp"
#include "prm_code.hpp"
#include "projective_monomials.hpp"
#include "projective_space.hpp"
#include "search.hpp"

namespace footprint {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::string counterexample;  // first failure, empty when passed

    /// Records one check; the description is only built for the first failure.
    void check(bool ok, const std::function<std::string()>& describe) {
        ++checked;
        if (!ok && passed) {
            passed = false;
            counterexample = describe();
        }
    }
};

struct SuiteReport {
    std::string suite;
    std::deque<PropertyResult> properties;  // stable references for add()

    bool passed() const {
        return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
    }
    PropertyResult& add(std::string name) {
        auto& p = properties.emplace_back();
        p.name = std::move(name);
        return p;
    }
};

/// Empty / negative fields mean "use the suite's own instance range"; `quick`
/// pins every suite to its fixed small instances.
struct VerifyConfig {
    std::vector<int> qs;
    int m_max = -1;
    int ell = -1;
    int d_max = -1;
    bool quick = false;
    SearchOptions search;

    std::vector<int> q_list(std::vector<int> fallback) const { return quick || qs.empty() ? fallback : qs; }
    int m_limit(int fallback) const { return quick || m_max < 0 ? fallback : m_max; }
    int ell_value(int fallback) const { return quick || ell < 0 ? fallback : ell; }
    int d_limit(int fallback) const { return quick || d_max < 0 ? fallback : d_max; }
};

namespace detail {

inline std::string set_text(const MonomialSet& s) {
    std::string out = "{";
    for (const auto& mu : s) out += (out.size() > 1 ? "," : "") + to_string(mu);
    return out + "}";
}

/// Calls f on every subset of `all` (at most 2^22 of them).
inline void for_each_subset(const MonomialSet& all, const std::function<void(const MonomialSet&)>& f) {
    const std::size_t n = all.size();
    if (n > 22) throw BudgetExceeded("2^" + std::to_string(n), "2^" + std::to_string(n), 1u << 22);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Monomial> pick;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) pick.push_back(all[k]);
        f(MonomialSet(all.variables(), std::move(pick)));
    }
}

inline void for_each_hypercube_subset(const HypercubeSet& all, const std::function<void(const HypercubeSet&)>& f) {
    for_each_subset(all.elements(), [&](const MonomialSet& s) { f(HypercubeSet(all.dimension(), all.q(), s)); });
}

inline std::string params(int q, int m, int d) {
    return "q=" + std::to_string(q) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
}

}  // namespace detail

inline SuiteReport verify_reduction(const VerifyConfig& config) {
    SuiteReport report{"reduction", {}};
    auto& idem = report.add("idempotent and degree preserving");
    auto& reduced = report.add("image is projectively reduced");
    auto& eval = report.add("evaluation preserved on F_q^{m+1}");
    for (int q : config.q_list({2, 3, 4})) {
        const FiniteField field(q);
        for (int m = 0; m <= config.m_limit(2); ++m) {
            const auto points = enumerate_affine_points(m + 1, field);
            for (int deg = 0; deg <= 6; ++deg)
                for (const auto& mu : all_monomials(m + 1, deg)) {
                    const auto bar = reduce_monomial(mu, q);
                    idem.check(reduce_monomial(bar, q) == bar && bar.degree() == mu.degree(),
                               [&] { return "q=" + std::to_string(q) + " mu=" + to_string(mu); });
                    reduced.check(is_projectively_reduced(bar, q), [&] { return to_string(mu); });
                    HomogeneousPolynomial f(m + 1, deg), g(m + 1, deg);
                    f.add_term(field, mu, 1);
                    g.add_term(field, bar, 1);
                    for (const auto& p : points)
                        eval.check(f.evaluate(field, p) == g.evaluate(field, p), [&] {
                            return "q=" + std::to_string(q) + " mu=" + to_string(mu) + " reduced=" + to_string(bar);
                        });
                }
        }
    }
    return report;
}

inline SuiteReport verify_footprint_decomposition(const VerifyConfig& config) {
    SuiteReport report{"footprint-decomposition", {}};
    auto& sum = report.add("|Delta_e(S)| is the sum of its level slices");
    auto& ssl = report.add("level-l footprints of S and S^<l> agree");
    for (int q : config.q_list({3})) {
        const int m = config.m_limit(2);
        for (int d = 1; d <= config.d_limit(2); ++d) {
            const int stable = stable_degree(d, m, q);
            detail::for_each_subset(enumerate_reduced(m, q, d), [&](const MonomialSet& s) {
                for (int e : {stable, stable + 1}) {
                    std::size_t total = 0;
                    for (int l = 0; l <= m; ++l) {
                        const auto slice = footprint(s, e, q, l);
                        total += slice.size();
                        ssl.check(slice == footprint(restrict_level(s, l, q), e, q, l), [&] {
                            return detail::params(q, m, d) + " e=" + std::to_string(e) + " l=" + std::to_string(l) +
                                   " S=" + detail::set_text(s);
                        });
                    }
                    sum.check(total == footprint_size(s, e, q), [&] {
                        return detail::params(q, m, d) + " e=" + std::to_string(e) + " S=" + detail::set_text(s);
                    });
                }
            });
        }
    }
    return report;
}

inline SuiteReport verify_specialization(const VerifyConfig& config) {
    SuiteReport report{"specialization", {}};
    auto& identity = report.add("|Delta_e^(l)(S^<l>)| = |FP^(l)(sigma(S^<l>))| at e* and e*+1");
    auto& divis = report.add("divisibility transfers through sigma at e*");
    auto& stable_prop = report.add("|Delta_e(S)| equal at e*, e*+1, e*+2");
    auto& inject = report.add("sigma^(m) injective on M_d for d < q");
    for (int q : config.q_list({3})) {
        const int m = config.m_limit(2);
        for (int d = 1; d <= config.d_limit(2); ++d) {
            const int stable = stable_degree(d, m, q);
            const auto md = enumerate_reduced(m, q, d);
            detail::for_each_subset(md, [&](const MonomialSet& s) {
                for (int e : {stable, stable + 1})
                    for (int l = 0; l <= m; ++l) {
                        const auto sl = restrict_level(s, l, q);
                        identity.check(footprint_size(sl, e, q, l) == hypercube_footprint(specialize(sl, l, q)).size(), [&] {
                            return detail::params(q, m, d) + " e=" + std::to_string(e) + " l=" + std::to_string(l) +
                                   " S=" + detail::set_text(s);
                        });
                    }
                const auto base = footprint_size(s, stable, q);
                stable_prop.check(base == footprint_size(s, stable + 1, q) && base == footprint_size(s, stable + 2, q),
                                  [&] { return detail::params(q, m, d) + " S=" + detail::set_text(s); });
            });
            for (int l = 0; l <= m; ++l)
                for (const auto& mu : md) {
                    if (mu.last_variable() > l) continue;
                    for (const auto& nu : enumerate_reduced(m, q, stable, l))
                        divis.check(mu.divides(nu) == specialize(mu, l).divides(specialize(nu, l)), [&] {
                            return detail::params(q, m, d) + " l=" + std::to_string(l) + " mu=" + to_string(mu) +
                                   " nu=" + to_string(nu);
                        });
                }
            if (d < q) {
                const auto image = specialize(md, m, q);
                inject.check(image.size() == md.size(), [&] { return detail::params(q, m, d); });
            }
        }
    }
    return report;
}

inline SuiteReport verify_expander(const VerifyConfig& config) {
    SuiteReport report{"expander", {}};
    auto& inj = report.add("phi injective, degree preserving, reduced image");
    auto& grow = report.add("|Delta_e(S)| <= |Delta_e(phi(S))| at e*");
    for (int q : config.q_list({3})) {
        const int m = config.m_limit(2);
        for (int d = 1; d <= config.d_limit(2); ++d) {
            const int stable = stable_degree(d, m, q);
            detail::for_each_subset(enumerate_reduced(m, q, d), [&](const MonomialSet& s) {
                const auto image = expand(s, q);
                bool ok = image.size() == s.size();
                for (const auto& mu : image) ok = ok && mu.degree() == d && is_projectively_reduced(mu, q);
                inj.check(ok, [&] { return detail::params(q, m, d) + " S=" + detail::set_text(s); });
                grow.check(footprint_size(s, stable, q) <= footprint_size(image, stable, q), [&] {
                    return detail::params(q, m, d) + " S=" + detail::set_text(s) + " phi(S)=" + detail::set_text(image);
                });
            });
        }
    }
    return report;
}

inline SuiteReport verify_clements_lindstrom(const VerifyConfig& config) {
    SuiteReport report{"clements-lindstrom", {}};
    auto& cl = report.add("SH_{d+1}(L_d(|T|)) inside L_{d+1}(|SH_{d+1}(T)|), |FP_{d+1}(T)| <= |FP_{d+1}(L_d(|T|))|");
    auto& ext = report.add("|FP_e(T)| <= |FP_e(L_d(|T|))| for every e >= d, and |FP(T)| <= |FP(L_d(|T|))|");
    const int ell = config.ell_value(2);
    for (int q : config.q_list({2, 3})) {
        for (int d = 0; d <= std::min(config.d_limit(2), ell * (q - 1)); ++d) {
            const auto layer = hypercube(ell, q, DegreeFilter{DegreeRelation::equal, d});
            detail::for_each_hypercube_subset(layer, [&](const HypercubeSet& t) {
                const auto lex = hypercube_lex_set(ell, q, d, t.size(), LexSetMode::exact_degree);
                auto describe = [&] {
                    return "q=" + std::to_string(q) + " l=" + std::to_string(ell) + " d=" + std::to_string(d) +
                           " T=" + detail::set_text(t.elements());
                };
                if (d + 1 <= ell * (q - 1)) {
                    const DegreeFilter next{DegreeRelation::equal, d + 1};
                    const auto sh_t = hypercube_shadow(t, next);
                    const auto sh_lex = hypercube_shadow(lex, next);
                    const auto target = hypercube_lex_set(ell, q, d + 1, sh_t.size(), LexSetMode::exact_degree);
                    bool inside = std::all_of(sh_lex.begin(), sh_lex.end(), [&](const Monomial& mu) { return target.contains(mu); });
                    cl.check(inside && hypercube_footprint(t, next).size() <= hypercube_footprint(lex, next).size(), describe);
                }
                bool ok = hypercube_footprint(t).size() <= hypercube_footprint(lex).size();
                for (int e = d; e <= ell * (q - 1); ++e) {
                    const DegreeFilter at{DegreeRelation::equal, e};
                    ok = ok && hypercube_footprint(t, at).size() <= hypercube_footprint(lex, at).size();
                }
                ext.check(ok, describe);
            });
        }
    }
    return report;
}

inline SuiteReport verify_wei(const VerifyConfig& config) {
    SuiteReport report{"wei", {}};
    auto& wei = report.add("|FP(T)| <= |FP(M_d(|T|))| for T in H_{<=d}");
    const int ell = config.ell_value(2);
    for (int q : config.q_list({2, 3}))
        for (int d = 0; d <= std::min(config.d_limit(2), ell * (q - 1)); ++d)
            detail::for_each_hypercube_subset(hypercube(ell, q, DegreeFilter{DegreeRelation::at_most, d}), [&](const HypercubeSet& t) {
                const auto lex = hypercube_lex_set(ell, q, d, t.size(), LexSetMode::bounded_degree);
                wei.check(hypercube_footprint(t).size() <= hypercube_footprint(lex).size(), [&] {
                    return "q=" + std::to_string(q) + " d=" + std::to_string(d) + " T=" + detail::set_text(t.elements());
                });
            });
    return report;
}

inline SuiteReport verify_affinecomb(const VerifyConfig& config) {
    SuiteReport report{"affinecomb", {}};
    auto& comb = report.add("|FP(T)| <= |FP(L_d(rho') u M_{d-1}(rho - rho'))|");
    const int ell = config.ell_value(2);
    for (int q : config.q_list({2, 3}))
        for (int d = 1; d <= std::min(config.d_limit(2), ell * (q - 1)); ++d)
            detail::for_each_hypercube_subset(hypercube(ell, q, DegreeFilter{DegreeRelation::at_most, d}), [&](const HypercubeSet& t) {
                std::size_t top = 0;
                for (const auto& mu : t) top += mu.degree() == d;
                const auto u = hypercube_union(hypercube_lex_set(ell, q, d, top, LexSetMode::exact_degree),
                                               hypercube_lex_set(ell, q, d - 1, t.size() - top, LexSetMode::bounded_degree));
                comb.check(hypercube_footprint(t).size() <= hypercube_footprint(u).size(), [&] {
                    return "q=" + std::to_string(q) + " d=" + std::to_string(d) + " T=" + detail::set_text(t.elements());
                });
            });
    return report;
}

inline SuiteReport verify_shadow(const VerifyConfig& config) {
    SuiteReport report{"shadow", {}};
    auto& prop = report.add("SH(M_d(rho)) = { mu : alpha <= mu } with alpha the rho-th element");
    auto& comp = report.add("SH_d(M_{d-1}(rho)) = L_d(rho'), rho' > 0 when rho > 0");
    const int ell = config.ell_value(2);
    for (int q : config.q_list({2, 3}))
        for (int d = 0; d <= std::min(config.d_limit(2), ell * (q - 1)); ++d) {
            const auto bounded = hypercube(ell, q, DegreeFilter{DegreeRelation::at_most, d});
            const auto cube = hypercube(ell, q);
            for (std::size_t rho = 0; rho <= bounded.size(); ++rho) {
                const auto lex = hypercube_lex_set(ell, q, d, rho, LexSetMode::bounded_degree);
                auto describe = [&] {
                    return "q=" + std::to_string(q) + " d=" + std::to_string(d) + " rho=" + std::to_string(rho);
                };
                if (rho >= 1) {
                    const auto& alpha = bounded.elements()[rho - 1];
                    const auto expected = cube.elements().filter([&](const Monomial& mu) { return !(mu < alpha); });
                    prop.check(hypercube_shadow(lex).elements() == expected, describe);
                }
                if (d >= 1 && rho <= hypercube(ell, q, DegreeFilter{DegreeRelation::at_most, d - 1}).size()) {
                    const auto lower = hypercube_lex_set(ell, q, d - 1, rho, LexSetMode::bounded_degree);
                    const auto sh = hypercube_shadow(lower, DegreeFilter{DegreeRelation::equal, d});
                    const auto seg = hypercube_lex_set(ell, q, d, sh.size(), LexSetMode::exact_degree);
                    comp.check(sh == seg && (rho == 0 || !sh.empty()), describe);
                }
            }
        }
    return report;
}

inline SuiteReport verify_macaulay(const VerifyConfig& config) {
    SuiteReport report{"macaulay", {}};
    auto& tuple = report.add("Macaulay tuple reconstructs N and is nonincreasing");
    auto& h = report.add("H_r agrees with its Macaulay form");
    auto& conj = report.add("conjectured e_r agrees with its Macaulay form");
    auto& mono = report.add("conjectured e_r strictly decreasing in r");
    auto& known = report.add("known values agree with the conjectured value");
    auto& ends = report.add("boundary values H_0, H_1, e_1, e_last");
    auto& ghw = report.add("GHW bound equals p_m - K_r");
    for (int q : config.q_list({3, 4, 5, 7}))
        for (int m = 0; m <= config.m_limit(4); ++m)
            for (int d = 1; d < q; ++d) {
                const Integer total = binomial(m + d, d);
                const auto where = [&](const Integer& r) { return detail::params(q, m, d) + " r=" + to_string(r); };
                Integer previous = -1;
                for (Integer r = 0; r <= total; ++r) {
                    const auto mt = macaulay_tuple(total - r, d);
                    Integer back = 0;
                    bool sorted = true;
                    for (int a = 1; a <= d; ++a) {
                        back += binomial(mt.at(a) + a, a);
                        if (a > 1) sorted = sorted && mt.at(a) >= mt.at(a - 1);
                        sorted = sorted && mt.at(a) >= -1;
                    }
                    tuple.check(back == total - r && sorted && macaulay_tuple(back, d) == mt, [&] { return where(r); });
                    h.check(compute_H(r, d, m, q) == compute_H_via_macaulay(r, d, m, q), [&] { return where(r); });
                    if (r == 0) continue;
                    const auto value = conjectured_er(r, d, m, q);
                    conj.check(value.value == conjectured_er_macaulay(r, d, m, q), [&] { return where(r); });
                    if (previous >= 0) mono.check(value.value < previous, [&] { return where(r); });
                    previous = value.value;
                    if (const auto k = known_er(r, d, m, q))
                        known.check(*k == value.value && value.status == ErStatus::proven, [&] { return where(r); });
                    if (d == 1) known.check(value.value == projective_count(m - to_int64(r), q), [&] { return where(r); });
                    if (m >= 1)
                        ghw.check(ghw_lower_bound(r, d, m, q) == projective_count(m, q) - compute_K(r, d, m, q),
                                  [&] { return where(r); });
                }
                ends.check(compute_H(0, d, m, q) == power(q, m) && compute_H(total, d, m, q) == 0, [&] { return where(0); });
                if (m >= 1)
                    ends.check(compute_H(1, d, m, q) == d * power(q, m - 1) &&
                                   conjectured_er(1, d, m, q).value == (d - 1) * power(q, m - 1) + projective_count(m - 1, q),
                               [&] { return where(1); });
            }
    return report;
}

namespace detail {

struct Instance {
    int q, d, m;
};

inline std::vector<Instance> sandwich_instances(const VerifyConfig& config) {
    if (config.quick || (config.qs.empty() && config.m_max < 0 && config.d_max < 0))
        return {{3, 1, 2}, {3, 2, 2}, {4, 3, 1}, {3, 2, 1}, {4, 2, 1}, {5, 3, 1}};
    std::vector<Instance> out;
    for (int q : config.q_list({3, 4}))
        for (int m = 1; m <= config.m_limit(2); ++m)
            for (int d = 1; d < q && d <= config.d_limit(q - 1); ++d) out.push_back({q, d, m});
    return out;
}

}  // namespace detail

inline SuiteReport verify_sandwich(const VerifyConfig& config) {
    SuiteReport report{"sandwich", {}};
    auto& sand = report.add("conjectured e_r <= exhaustive e_r <= K_r");
    auto& proven = report.add("exhaustive e_r equals every proven value");
    auto& mono = report.add("exhaustive e_r strictly decreasing in r");
    auto& modes = report.add("reduced and all-form searches agree");
    auto& bound = report.add("zero count bounded by the footprint of the leading monomials");
    auto options = config.search;
    options.audit_footprint = true;
    for (const auto& [q, d, m] : detail::sandwich_instances(config)) {
        const int total = static_cast<int>(to_int64(binomial(m + d, d)));
        std::int64_t previous = -1;
        for (int r = 1; r <= total; ++r) {
            const auto where = [&, r = r] { return detail::params(q, m, d) + " r=" + std::to_string(r); };
            SearchResult found;
            try {
                found = brute_force_er(r, d, m, q, ErMode::projective_reduced, options);
            } catch (const BudgetExceeded&) {
                ++sand.skipped;
                previous = -1;
                continue;
            }
            const Integer value = found.value;
            sand.check(conjectured_er(r, d, m, q).value <= value && value <= compute_K(r, d, m, q), where);
            if (const auto k = known_er(r, d, m, q)) proven.check(*k == value, where);
            if (previous >= 0) mono.check(found.value < previous, where);
            previous = found.value;
            bound.checked += found.footprint_checked;
            if (found.footprint_violations) bound.check(false, where);
            if (d <= q && found.space == all_monomials(m + 1, d)) modes.check(true, where);
        }
    }
    // One instance past q: e_{r + r_d} over all forms equals the reduced value at r.
    const int q = 2, d = 3, m = 1;
    const auto shift = static_cast<int>(to_int64(gamma_dim(d, m, q)));
    for (int r = 1; r + shift <= 4; ++r)
        modes.check(brute_force_er(r + shift, d, m, q, ErMode::all_homogeneous, config.search).value ==
                        brute_force_er(r, d, m, q, ErMode::projective_reduced, config.search).value,
                    [&] { return detail::params(q, m, d) + " r=" + std::to_string(r); });
    return report;
}

inline SuiteReport verify_codes(const VerifyConfig& config) {
    SuiteReport report{"codes", {}};
    auto& dims = report.add("generator rank = Sorensen dimension = |M_d|, n = p_m, no zero column");
    auto& counts = report.add("|M_d| = C(m+d, d) - r_d");
    auto& fixed = report.add("fixed hierarchies: PRM_3(2,1), d_1 of PRM_3(2,2) and PRM_2(2,2)");
    auto& wei = report.add("GHW strictly increasing, d_1 = minimum distance, GHW bound respected");
    const FiniteField f2(2);
    for (int q : config.q_list({2, 3, 4})) {
        const FiniteField field(q);
        for (int m = 1; m <= config.m_limit(3); ++m)
            for (int d = 1; d <= m * (q - 1); ++d) {
                const auto where = [&] { return detail::params(q, m, d); };
                const auto code = build_prm(d, m, q);
                bool nonzero = true;
                for (std::size_t c = 0; c < code.n; ++c) {
                    bool any = false;
                    for (const auto& row : code.generator) any = any || row[c] != 0;
                    nonzero = nonzero && any;
                }
                dims.check(Integer(rank(field, code.generator)) == sorensen_dim(d, m, q) && Integer(code.k) == sorensen_dim(d, m, q) &&
                               Integer(code.n) == projective_count(m, q) && nonzero,
                           where);
            }
        for (int m = 0; m <= std::min(config.m_limit(2), 2); ++m)
            for (int d = 0; d <= m * (q - 1) + 2; ++d)
                counts.check(Integer(enumerate_reduced(m, q, d).size()) == binomial(m + d, d) - gamma_dim(d, m, q) &&
                                 reduced_monomial_count(m, q, d) == binomial(m + d, d) - gamma_dim(d, m, q),
                             [&] { return detail::params(q, m, d); });
    }
    {
        const auto code = build_prm(2, 1, 3);
        std::vector<std::int64_t> h;
        for (int r = 1; r <= 3; ++r) h.push_back(ghw_exhaustive(code, r, config.search).value);
        fixed.check(h == std::vector<std::int64_t>{2, 3, 4}, [] { return "PRM_3(2,1)"; });
        fixed.check(ghw_exhaustive(build_prm(2, 2, 3), 1, config.search).value == 6, [] { return "PRM_3(2,2)"; });
        fixed.check(ghw_exhaustive(build_prm(2, 2, 2), 1, config.search).value == 2, [] { return "PRM_2(2,2)"; });
    }
    auto small = config.search;
    small.budget = std::min<std::uint64_t>(small.budget, config.quick ? 200'000 : 5'000'000);
    for (int q : config.q_list({2, 3, 4}))
        for (int m = 1; m <= std::min(config.m_limit(2), 2); ++m)
            for (int d = 1; d <= m * (q - 1); ++d) {
                const auto code = build_prm(d, m, q);
                std::int64_t previous = 0;
                for (int r = 1; r <= static_cast<int>(code.k); ++r) {
                    const auto where = [&, r = r] { return detail::params(q, m, d) + " r=" + std::to_string(r); };
                    std::int64_t value;
                    try {
                        value = ghw_exhaustive(code, r, small).value;
                    } catch (const BudgetExceeded&) {
                        ++wei.skipped;
                        previous = 0;
                        continue;
                    }
                    wei.check(value > previous, where);
                    if (r == 1) wei.check(Integer(value) == sorensen_mindist(d, m, q), where);
                    if (d < q) wei.check(ghw_lower_bound(r, d, m, q) <= value, where);
                    previous = value;
                }
            }
    return report;
}

inline SuiteReport verify_duality(const VerifyConfig& config) {
    SuiteReport report{"duality", {}};
    auto& dual = report.add("d_r + e_bar_r = p_m, and e_{r + r_d} = e_bar_r");
    std::vector<detail::Instance> instances{{3, 1, 1}, {3, 2, 1}, {3, 1, 2}, {3, 2, 2}, {2, 3, 1}};
    for (const auto& [q, d, m] : instances) {
        const auto k = static_cast<int>(enumerate_reduced(m, q, d).size());
        const auto result = check_duality(d, m, q, k, config.search);
        for (const auto& row : result.rows)
            dual.check(row.holds, [&, row = row] {
                return detail::params(q, m, d) + " r=" + std::to_string(row.r) + " d_r=" + std::to_string(row.ghw) +
                       " e_bar=" + std::to_string(row.e_bar);
            });
    }
    return report;
}

inline SuiteReport verify_witness(const VerifyConfig& config) {
    SuiteReport report{"witness", {}};
    auto& wit = report.add("witness zero count equals the conjectured value");
    for (int q : config.q_list({3, 4, 5})) {
        const FiniteField field(q);
        for (int m = 1; m <= config.m_limit(2); ++m)
            for (int d = 1; d < q; ++d)
                for (int r = 1; Integer(r) <= binomial(m + d, d); ++r) {
                    const auto where = [&] { return detail::params(q, m, d) + " r=" + std::to_string(r); };
                    try {
                        const auto forms = construct_witness(r, d, m, q, config.search);
                        wit.check(static_cast<int>(forms.size()) == r &&
                                      Integer(count_common_zeros(forms, m, field)) == conjectured_er(r, d, m, q).value,
                                  where);
                    } catch (const WitnessInvalid&) {
                        wit.check(false, where);
                    }
                }
    }
    return report;
}

inline const std::map<std::string, std::function<SuiteReport(const VerifyConfig&)>>& suites() {
    static const std::map<std::string, std::function<SuiteReport(const VerifyConfig&)>> table{
        {"reduction", verify_reduction},
        {"footprint-decomposition", verify_footprint_decomposition},
        {"specialization", verify_specialization},
        {"expander", verify_expander},
        {"clements-lindstrom", verify_clements_lindstrom},
        {"wei", verify_wei},
        {"affinecomb", verify_affinecomb},
        {"shadow", verify_shadow},
        {"macaulay", verify_macaulay},
        {"sandwich", verify_sandwich},
        {"codes", verify_codes},
        {"duality", verify_duality},
        {"witness", verify_witness},
    };
    return table;
}

/// Runs one suite by name, or every suite for "all".  Unknown names throw std::invalid_argument.
inline std::vector<SuiteReport> run_suites(const std::string& name, const VerifyConfig& config) {
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& [key, fn] : suites()) out.push_back(fn(config));
        return out;
    }
    const auto it = suites().find(name);
    if (it == suites().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    out.push_back(it->second(config));
    return out;
}

}  // namespace footprint

#endif
