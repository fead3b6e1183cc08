#pragma once

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcpo/cocycle.hpp"
#include "wcpo/group.hpp"
#include "wcpo/poset.hpp"
#include "wcpo/subadditive.hpp"
#include "wcpo/unit_word.hpp"

namespace wcpo {

struct CheckItem {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct CheckOptions {
    int maxval = 3;
    std::size_t pair_cap = 200;  // pairwise laws run on all pairs below this, sampled above
    unsigned seed = 7u;
};

namespace detail {

inline std::string fn_string(const SubadditiveFn& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.values.size(); ++i)
        s += (i ? "," : "") + std::to_string(r.values[i]);
    return s + "]";
}

/// Deterministic pair selection: all ordered pairs while affordable, else a
/// strided sweep plus a seeded sample.
inline std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n,
                                                                     std::size_t cap,
                                                                     unsigned seed) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (n == 0) return out;
    if (n <= 40) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(i, (i * 7 + 3) % n);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < cap; ++k) out.emplace_back(pick(rng), pick(rng));
    return out;
}

}  // namespace detail

/// Exhaustive per-group property suite over every subadditive function with
/// values up to opts.maxval. Returns one item per property family; an item
/// fails with the first witness found.
inline std::vector<CheckItem> run_group_suite(const GroupPtr& group, const CheckOptions& opts = {}) {
    std::vector<CheckItem> items;
    auto fail = [&](CheckItem& item, const std::string& detail) {
        if (item.passed) {
            item.passed = false;
            item.detail = detail;
        }
    };

    const auto& g = *group;
    const auto rs = enumerate_subadditive(group, opts.maxval);
    const UnitLattice lattice(group);

    std::vector<IdempotentCocycle> es;
    std::vector<ValuedCocycle> bs;
    es.reserve(rs.size());
    bs.reserve(rs.size());
    for (const auto& r : rs) {
        es.push_back(idempotent_from_r(r));
        bs.push_back(valued_from_r(r));
    }

    {
        CheckItem item{"cocycle-verification"};
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            auto er = verify_cocycle(es[i]);
            if (!er.ok()) fail(item, "idempotent of r=" + detail::fn_string(rs[i]) + ": " + er.summary());
            auto br = verify_cocycle(bs[i], VerifyLevel::strict, &lattice);
            if (!br.ok()) fail(item, "valued cocycle of r=" + detail::fn_string(rs[i]) + ": " + br.summary());
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"inertial-groups"};
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            const auto m = zero_subgroup(rs[i]);
            if (!same_members(inertial_group(es[i]), m) || !same_members(inertial_group(bs[i]), m))
                fail(item, "inertial group mismatch for r=" + detail::fn_string(rs[i]));
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"defect-injectivity"};
        std::map<std::vector<std::vector<int>>, std::size_t> seen;
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            auto [it, fresh] = seen.emplace(defect_table(rs[i]).d, i);
            if (!fresh)
                fail(item, "distinct functions share a defect table: " + detail::fn_string(rs[it->second]) +
                               " and " + detail::fn_string(rs[i]));
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"valuation-identity"};
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            const auto& b = bs[i];
            const auto rf = r_from_cocycle(b);
            for (int s = 0; s < g.size() && item.passed; ++s)
                for (int t = 0; t < g.size(); ++t) {
                    const int lhs = b(s, t).exp + b(g.inv(t), g.inv(s)).exp;
                    const int rhs = rf(s) + rf(t) - rf(g.mul(s, t));
                    if (lhs != rhs) {
                        fail(item, "valuation identity fails for r=" + detail::fn_string(rs[i]) + " at (" +
                                       g.elements[s] + "," + g.elements[t] + ")");
                        break;
                    }
                }
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"hereditary-criterion"};
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            const bool whole = zero_subgroup(rs[i]).size() == g.size();
            if (hereditary_criterion(bs[i]) != whole)
                fail(item, "criterion disagrees with the inertial group for r=" + detail::fn_string(rs[i]));
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"decomposition"};
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            auto dec = decompose(bs[i], &lattice);
            if (!(dec.r == rs[i])) fail(item, "round trip lost r=" + detail::fn_string(rs[i]));
            // a seed with nontrivial unit parts must come back out unchanged
            std::vector<ValuedMonomial> a(g.size());
            for (int s = 0; s < g.size(); ++s) {
                a[s] = ValuedMonomial::pi_power(rs[i](s));
                if (s != FiniteGroup::identity) a[s].unit.mul_symbol(w_symbol(s), s % 3 - 1);
            }
            auto b = coboundary_from_seed(make_seed(group, std::move(a)));
            auto dec2 = decompose(b, &lattice);
            if (!(dec2.r == rs[i]))
                fail(item, "seeded round trip lost r=" + detail::fn_string(rs[i]));
            if (!strict_equal(multiply(dec2.unit_part, valued_from_r(dec2.r)), b, lattice))
                fail(item, "decomposition does not multiply back for r=" + detail::fn_string(rs[i]));
        }
        for (auto [i, j] : detail::sample_pairs(rs.size(), opts.pair_cap, opts.seed)) {
            if (!item.passed) break;
            auto dec = decompose(multiply(bs[i], bs[j]), &lattice);
            if (!(dec.r == add(rs[i], rs[j])))
                fail(item, "product law fails for " + detail::fn_string(rs[i]) + " * " +
                               detail::fn_string(rs[j]));
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"valuation-profile"};
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            const auto rf = r_from_cocycle(bs[i]);  // validates, checks symmetry + zero subgroup
            for (int s = 0; s < g.size(); ++s)
                if (rf(s) != rs[i](s) + rs[i](g.inv(s)))
                    fail(item, "profile is not r + r(inverse) for r=" + detail::fn_string(rs[i]));
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"partner-bound"};
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            const auto rf = r_from_cocycle(bs[i]);
            const auto half = halve(rf);
            auto h = partner_cocycle(bs[i], half);
            for (int s = 0; s < g.size(); ++s) {
                const int v = h(s, g.inv(s)).exp;
                if (v < 0 || v > 1)
                    fail(item, "anti-diagonal valuation " + std::to_string(v) + " for r=" +
                                   detail::fn_string(rs[i]));
            }
            if (!strict_equal(multiply(bs[i], h), valued_from_r(half), lattice))
                fail(item, "partner product is not the canonical cocycle of the halved profile for r=" +
                               detail::fn_string(rs[i]));
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"inflation"};
        std::vector<Subgroup> normals;
        for (auto& h : enumerate_subgroups(group))
            if (is_normal(h)) normals.push_back(std::move(h));
        for (const auto& n : normals) {
            if (!item.passed) break;
            for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
                const auto& e = es[i];
                const Subgroup h = inertial_group(e);
                bool inside = true;
                for (int x : n.members)
                    if (!h.contains(x)) inside = false;
                if (inside) {
                    auto eps = deflate(e, n);
                    // deflation well-definedness is the representative freedom
                    for (int s = 0; s < g.size() && item.passed; ++s)
                        for (int t = 0; t < g.size(); ++t)
                            for (int n1 : n.members)
                                for (int n2 : n.members)
                                    if (e(s, t) != e(g.mul(s, n1), g.mul(t, n2))) {
                                        fail(item, "value moved across coset representatives for r=" +
                                                       detail::fn_string(rs[i]));
                                        break;
                                    }
                    if (!(inflate(group, n, eps) == e))
                        fail(item, "inflate(deflate) is not the identity for r=" + detail::fn_string(rs[i]));
                } else {
                    bool threw = false;
                    try {
                        deflate(e, n);
                    } catch (const not_in_inertial_group&) {
                        threw = true;
                    }
                    if (!threw)
                        fail(item, "deflate succeeded although the subgroup leaves the inertial group, r=" +
                                       detail::fn_string(rs[i]));
                }
            }
            // lifts of quotient functions with trivial zero subgroup have
            // inertial group exactly the kernel
            if (!item.passed) break;
            Quotient q = quotient_group(group, n);
            for (const auto& rq : enumerate_subadditive(q.group, opts.maxval)) {
                if (zero_subgroup(rq).size() != 1) continue;
                auto lifted = inflate(group, n, idempotent_from_r(rq));
                if (inertial_group(lifted).members != n.members) {
                    fail(item, "lift of a trivial-kernel function has the wrong inertial group over " +
                                   q.group->name);
                    break;
                }
                if (!(deflate(lifted, n) == idempotent_from_r(rq))) {
                    fail(item, "deflate(inflate) is not the identity over " + q.group->name);
                    break;
                }
            }
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"coset-orders"};
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            CosetPoset p = poset_from_r(rs[i]);  // cross-checks the idempotent route internally
            auto report = verify_poset(p);
            if (!report.ok())
                fail(item, "order axioms fail for r=" + detail::fn_string(rs[i]) + ": " + report.summary());
            const auto heights = cover_heights(hasse(p));
            for (int c = 0; c < p.count(); ++c)
                if (heights[c] > rs[i](p.cosets.reps[c]))
                    fail(item, "coset height exceeds the function value for r=" + detail::fn_string(rs[i]));
        }
        items.push_back(std::move(item));
    }

    {
        CheckItem item{"monoid-closure"};
        for (auto [i, j] : detail::sample_pairs(rs.size(), opts.pair_cap, opts.seed)) {
            if (!item.passed) break;
            try {
                add(rs[i], rs[j]);
            } catch (const check_error& e) {
                fail(item, std::string("sum left the monoid: ") + e.what());
            }
        }
        for (std::size_t i = 0; i < rs.size() && item.passed; ++i) {
            const Subgroup h = zero_subgroup(rs[i]);
            const auto candidates = bump_candidates(rs[i]);
            for (int a : candidates) {
                for (int x : double_coset(group, h, a))
                    if (!std::binary_search(candidates.begin(), candidates.end(), x)) {
                        fail(item, "bump candidates are not a union of double cosets for r=" +
                                       detail::fn_string(rs[i]));
                        break;
                    }
                auto bumped = bump(rs[i], a);
                if (!same_members(zero_subgroup(bumped), h))
                    fail(item, "bump changed the zero subgroup for r=" + detail::fn_string(rs[i]));
            }
            if (!(evenize(rs[i]) == add(halve(rs[i]), halve(rs[i]))))
                fail(item, "evenize is not twice halve for r=" + detail::fn_string(rs[i]));
        }
        items.push_back(std::move(item));
    }

    return items;
}

}  // namespace wcpo
