#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcpo/errors.hpp"
#include "wcpo/group.hpp"

namespace wcpo {

/// A subadditive integer function r on a finite group: r(1) = 0 and
/// r(gh) <= r(g) + r(h) for all g, h. Values are naturals.
struct SubadditiveFn {
    GroupPtr group;
    std::vector<int> values;

    int operator()(int g) const { return values[g]; }
    int size() const { return static_cast<int>(values.size()); }
};

inline bool operator==(const SubadditiveFn& a, const SubadditiveFn& b) {
    return same_group(a.group, b.group) && a.values == b.values;
}

/// All pairs (i, j) with r(ij) > r(i) + r(j).
inline std::vector<std::pair<int, int>> subadditivity_witnesses(const FiniteGroup& g,
                                                                const std::vector<int>& values) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (values[g.mul(i, j)] > values[i] + values[j]) out.emplace_back(i, j);
    return out;
}

inline SubadditiveFn validate_subadditive(GroupPtr group, std::vector<int> values) {
    if (static_cast<int>(values.size()) != group->size())
        throw input_error("value vector length does not match group order");
    for (int v : values)
        if (v < 0) throw negative_value("values must be natural numbers");
    if (values[FiniteGroup::identity] != 0)
        throw nonzero_at_identity("value at the identity must be 0");
    auto witnesses = subadditivity_witnesses(*group, values);
    if (!witnesses.empty()) {
        std::ostringstream os;
        os << "subadditivity fails at";
        for (auto [i, j] : witnesses)
            os << " (" << group->elements[i] << "," << group->elements[j] << ")";
        throw not_subadditive(os.str(), std::move(witnesses));
    }
    return SubadditiveFn{std::move(group), std::move(values)};
}

/// The subgroup {g : r(g) = 0}. Closure holds for every valid r, so a failure
/// here indicates corrupted input.
inline Subgroup zero_subgroup(const SubadditiveFn& r) {
    std::vector<int> members;
    for (int g = 0; g < r.size(); ++g)
        if (r(g) == 0) members.push_back(g);
    try {
        return make_subgroup(r.group, std::move(members));
    } catch (const not_a_subgroup& e) {
        throw internal_inconsistency(std::string("zero set of a valid function must be a subgroup: ") +
                                     e.what());
    }
}

inline SubadditiveFn add(const SubadditiveFn& a, const SubadditiveFn& b) {
    if (!same_group(a.group, b.group)) throw group_mismatch("cannot add functions on different groups");
    std::vector<int> values(a.values);
    for (int i = 0; i < b.size(); ++i) values[i] += b.values[i];
    return validate_subadditive(a.group, std::move(values));
}

/// The defect d(i, j) = r(i) + r(j) - r(ij); nonnegative for valid r, zero on
/// the identity row and column, and it determines r uniquely.
struct DefectTable {
    GroupPtr group;
    std::vector<std::vector<int>> d;
};

inline DefectTable defect_table(const SubadditiveFn& r) {
    const auto& g = *r.group;
    DefectTable t{r.group, std::vector<std::vector<int>>(g.size(), std::vector<int>(g.size()))};
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) t.d[i][j] = r(i) + r(j) - r(g.mul(i, j));
    return t;
}

/// Word length over a generating set: r(g) = least k with g a product of k
/// generators. Subadditive by the triangle inequality.
inline SubadditiveFn word_length_fn(const GroupPtr& group, const std::vector<int>& generators) {
    auto tree = canonical_factorization(group, generators);
    return SubadditiveFn{group, std::move(tree.dist)};
}

/// Elements with positive value admitting no defect-zero factorization into
/// two positive-value elements. These are exactly the places where bump()
/// applies.
inline std::vector<int> bump_candidates(const SubadditiveFn& r) {
    const auto& g = *r.group;
    std::vector<int> out;
    for (int s = 0; s < g.size(); ++s) {
        if (r(s) == 0) continue;
        bool reducible = false;
        for (int t = 0; t < g.size() && !reducible; ++t) {
            if (r(t) == 0) continue;
            const int u = g.mul(g.inv(t), s);  // t * u = s
            if (r(u) > 0 && r(s) == r(t) + r(u)) reducible = true;
        }
        if (!reducible) out.push_back(s);
    }
    return out;
}

/// Raises r by one on the double coset H a H (H the zero subgroup), which
/// stays subadditive exactly when a is a bump candidate.
inline SubadditiveFn bump(const SubadditiveFn& r, int a) {
    auto candidates = bump_candidates(r);
    if (!std::binary_search(candidates.begin(), candidates.end(), a))
        throw not_bumpable("element " + r.group->elements.at(a) +
                           " admits a defect-zero factorization; bumping would break subadditivity");
    const Subgroup h = zero_subgroup(r);
    std::vector<int> values(r.values);
    for (int x : double_coset(r.group, h, a)) values[x] += 1;
    auto out = validate_subadditive(r.group, std::move(values));
    if (!same_members(zero_subgroup(out), h))
        throw internal_inconsistency("bump changed the zero subgroup");
    return out;
}

/// Halves r upward: 2k -> k, 2k+1 -> k+1. Keeps the zero subgroup.
inline SubadditiveFn halve(const SubadditiveFn& r) {
    std::vector<int> values(r.values);
    for (int& v : values) v = (v + 1) / 2;
    auto out = validate_subadditive(r.group, std::move(values));
    if (!same_members(zero_subgroup(out), zero_subgroup(r)))
        throw internal_inconsistency("halve changed the zero subgroup");
    return out;
}

/// Rounds odd values up to the next even number; equals halve(r) doubled.
inline SubadditiveFn evenize(const SubadditiveFn& r) {
    std::vector<int> values(r.values);
    for (int& v : values) v += v % 2;
    auto out = validate_subadditive(r.group, std::move(values));
    if (!same_members(zero_subgroup(out), zero_subgroup(r)))
        throw internal_inconsistency("evenize changed the zero subgroup");
    return out;
}

/// Pulls a function on G/N back to G along the projection. The zero subgroup
/// of the result is the preimage of the quotient one.
inline SubadditiveFn inflate(const GroupPtr& group, const Subgroup& n, const SubadditiveFn& r_q) {
    Quotient q = quotient_group(group, n);
    if (!same_group(r_q.group, q.group))
        throw group_mismatch("function is not defined on the quotient by the given subgroup");
    std::vector<int> values(group->size());
    for (int g = 0; g < group->size(); ++g) values[g] = r_q(q.projection[g]);
    auto out = validate_subadditive(group, std::move(values));
    std::vector<int> preimage;
    const Subgroup mq = zero_subgroup(r_q);
    for (int g = 0; g < group->size(); ++g)
        if (mq.contains(q.projection[g])) preimage.push_back(g);
    if (zero_subgroup(out).members != preimage)
        throw internal_inconsistency("inflated zero subgroup is not the projection preimage");
    return out;
}

/// All subadditive functions with values in 0..maxval, in lexicographic order
/// of their value vectors. Guarded so the candidate space stays enumerable.
inline std::vector<SubadditiveFn> enumerate_subadditive(const GroupPtr& group, int maxval) {
    if (maxval < 0) throw input_error("maxval must be nonnegative");
    const int n = group->size();
    double candidates = 1;
    for (int i = 1; i < n; ++i) {
        candidates *= maxval + 1;
        if (candidates > 1e7)
            throw too_large("candidate space exceeds 10^7; lower maxval or the group order");
    }
    std::vector<SubadditiveFn> out;
    std::vector<int> values(n, 0);
    while (true) {
        if (subadditivity_witnesses(*group, values).empty())
            out.push_back(SubadditiveFn{group, values});
        int pos = n - 1;
        while (pos >= 1 && values[pos] == maxval) values[pos--] = 0;
        if (pos < 1) break;
        ++values[pos];
    }
    return out;
}

}  // namespace wcpo
