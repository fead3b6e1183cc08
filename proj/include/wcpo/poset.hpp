#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcpo/cocycle.hpp"
#include "wcpo/errors.hpp"
#include "wcpo/group.hpp"
#include "wcpo/subadditive.hpp"

namespace wcpo {

/// A partial order on the left cosets G/H with least element H, of the kind
/// induced by an idempotent cocycle: besides the order axioms it is lower
/// subtractive, i.e. sH <= tH forces (sH <= rH <= tH iff s^-1 rH <= s^-1 tH).
struct CosetPoset {
    CosetSpace cosets;
    std::vector<std::vector<char>> leq;  // leq[i][j] == 1 iff coset i <= coset j

    bool le(int i, int j) const { return leq[i][j] != 0; }
    int count() const { return cosets.count(); }
};

inline bool operator==(const CosetPoset& a, const CosetPoset& b) {
    return same_group(a.cosets.group, b.cosets.group) &&
           a.cosets.subgroup.members == b.cosets.subgroup.members && a.leq == b.leq;
}

struct PosetReport {
    enum class Axiom { reflexivity, antisymmetry, transitivity, least_element, lower_subtractivity };
    struct Violation {
        Axiom axiom;
        int a = -1, b = -1, c = -1;  // coset indices
        std::string detail;
    };
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const {
        if (ok()) return "all poset axioms hold";
        std::ostringstream os;
        for (const auto& v : violations) os << v.detail << "\n";
        return os.str();
    }
};

/// Checks reflexivity, antisymmetry, transitivity, the least element H, and
/// lower subtractivity (on representatives), reporting every violation.
inline PosetReport verify_poset(const CosetPoset& p) {
    PosetReport report;
    const int m = p.count();
    const auto& g = *p.cosets.group;
    auto name = [&](int c) { return g.elements[p.cosets.reps[c]] + "H"; };
    auto add = [&](PosetReport::Axiom ax, int a, int b, int c, std::string d) {
        report.violations.push_back({ax, a, b, c, std::move(d)});
    };
    for (int i = 0; i < m; ++i)
        if (!p.le(i, i))
            add(PosetReport::Axiom::reflexivity, i, -1, -1, "reflexivity fails at " + name(i));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && p.le(i, j) && p.le(j, i))
                add(PosetReport::Axiom::antisymmetry, i, j, -1,
                    "antisymmetry fails at (" + name(i) + "," + name(j) + ")");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!p.le(i, j)) continue;
            for (int k = 0; k < m; ++k)
                if (p.le(j, k) && !p.le(i, k))
                    add(PosetReport::Axiom::transitivity, i, j, k,
                        "transitivity fails at (" + name(i) + "," + name(j) + "," + name(k) + ")");
        }
    for (int j = 0; j < m; ++j)
        if (!p.le(0, j))
            add(PosetReport::Axiom::least_element, 0, j, -1, name(0) + " is not below " + name(j));

    // sH <= tH  =>  (sH <= rH <= tH  <=>  s^-1 rH <= s^-1 tH)
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            if (!p.le(s, t)) continue;
            const int sinv = g.inv(p.cosets.reps[s]);
            const int st = p.cosets.coset_of[g.mul(sinv, p.cosets.reps[t])];
            for (int r = 0; r < m; ++r) {
                const bool between = p.le(s, r) && p.le(r, t);
                const int sr = p.cosets.coset_of[g.mul(sinv, p.cosets.reps[r])];
                if (between != p.le(sr, st))
                    add(PosetReport::Axiom::lower_subtractivity, s, t, r,
                        "lower subtractivity fails at (s=" + name(s) + ", t=" + name(t) +
                            ", r=" + name(r) + ")");
            }
        }
    return report;
}

/// The order sH <= tH iff e(s, s^-1 t) = 1 for a verified idempotent cocycle.
/// Representative independence and all axioms are checked before returning.
inline CosetPoset poset_from_idempotent(const IdempotentCocycle& e) {
    auto ereport = verify_cocycle(e);
    if (!ereport.ok()) throw axiom_failure("input is not a cocycle:\n" + ereport.summary());
    const auto& g = *e.group;
    const Subgroup h = inertial_group(e);
    CosetPoset p;
    p.cosets = left_cosets(e.group, h);
    const int m = p.count();
    p.leq.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int si = p.cosets.reps[i];
            const char value = e(si, g.mul(g.inv(si), p.cosets.reps[j])) == 1 ? 1 : 0;
            for (int x : p.cosets.members[i])
                for (int y : p.cosets.members[j])
                    if ((e(x, g.mul(g.inv(x), y)) == 1 ? 1 : 0) != value)
                        throw axiom_failure("order relation depends on coset representatives at (" +
                                            g.elements[x] + "," + g.elements[y] + ")");
            p.leq[i][j] = value;
        }
    auto report = verify_poset(p);
    if (!report.ok()) throw axiom_failure("induced relation is not a valid order:\n" + report.summary());
    return p;
}

/// The order sH <= tH iff r(t) = r(s) + r(s^-1 t), with H the zero subgroup.
/// Always agrees with the route through the idempotent cocycle of r, which is
/// cross-checked on every call.
inline CosetPoset poset_from_r(const SubadditiveFn& r) {
    const auto& g = *r.group;
    const Subgroup h = zero_subgroup(r);
    CosetPoset p;
    p.cosets = left_cosets(r.group, h);
    const int m = p.count();
    p.leq.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int s = p.cosets.reps[i];
            const int t = p.cosets.reps[j];
            p.leq[i][j] = r(t) == r(s) + r(g.mul(g.inv(s), t)) ? 1 : 0;
        }
    CosetPoset via_e = poset_from_idempotent(idempotent_from_r(r));
    if (!(p == via_e))
        throw internal_inconsistency("order from r disagrees with the order from its idempotent cocycle");
    auto report = verify_poset(p);
    if (!report.ok()) throw axiom_failure("induced relation is not a valid order:\n" + report.summary());
    return p;
}

// ---------------------------------------------------------------------------
// Hasse reduction and rendering

struct HasseDiagram {
    CosetSpace cosets;
    std::vector<std::pair<int, int>> covers;  // (lower, upper), sorted
};

/// Cover relations: x < y with nothing strictly between.
inline HasseDiagram hasse(const CosetPoset& p) {
    const int m = p.count();
    HasseDiagram h{p.cosets, {}};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || !p.le(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < m && cover; ++k)
                if (k != i && k != j && p.le(i, k) && p.le(k, j)) cover = false;
            if (cover) h.covers.emplace_back(i, j);
        }
    std::sort(h.covers.begin(), h.covers.end());
    return h;
}

/// Longest-chain heights over the cover relation; the least coset has 0.
inline std::vector<int> cover_heights(const HasseDiagram& h) {
    const int m = h.cosets.count();
    std::vector<int> height(m, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [lo, hi] : h.covers)
            if (height[hi] < height[lo] + 1) {
                height[hi] = height[lo] + 1;
                changed = true;
            }
    }
    return height;
}

enum class DotMode { coset, element_expanded };

inline std::string coset_node_label(const CosetSpace& cs, int c) {
    if (cs.subgroup.size() == 1) return cs.group->elements[cs.reps[c]];
    return c == 0 ? "H" : cs.group->elements[cs.reps[c]] + "H";
}

/// Deterministic DOT rendering, edges lower -> upper, one rank per height.
/// Element-expanded mode draws every member of a coset as its own node, each
/// inheriting all cover edges of its coset.
inline std::string to_dot(const HasseDiagram& h, DotMode mode) {
    const auto& cs = h.cosets;
    const int m = cs.count();
    const auto height = cover_heights(h);
    std::ostringstream os;
    os << "digraph coset_order {\n  rankdir=BT;\n";
    if (mode == DotMode::coset) {
        for (int c = 0; c < m; ++c) os << "  \"" << coset_node_label(cs, c) << "\";\n";
        for (const auto& [lo, hi] : h.covers)
            os << "  \"" << coset_node_label(cs, lo) << "\" -> \"" << coset_node_label(cs, hi)
               << "\";\n";
        const int top = m == 0 ? 0 : 1 + *std::max_element(height.begin(), height.end());
        for (int lvl = 0; lvl < top; ++lvl) {
            os << "  { rank=same;";
            for (int c = 0; c < m; ++c)
                if (height[c] == lvl) os << " \"" << coset_node_label(cs, c) << "\";";
            os << " }\n";
        }
    } else {
        const auto& labels = cs.group->elements;
        for (int g = 0; g < cs.group->size(); ++g) os << "  \"" << labels[g] << "\";\n";
        std::vector<std::pair<int, int>> edges;
        for (const auto& [lo, hi] : h.covers)
            for (int x : cs.members[lo])
                for (int y : cs.members[hi]) edges.emplace_back(x, y);
        std::sort(edges.begin(), edges.end());
        for (const auto& [x, y] : edges)
            os << "  \"" << labels[x] << "\" -> \"" << labels[y] << "\";\n";
        const int top = m == 0 ? 0 : 1 + *std::max_element(height.begin(), height.end());
        for (int lvl = 0; lvl < top; ++lvl) {
            os << "  { rank=same;";
            for (int c = 0; c < m; ++c)
                if (height[c] == lvl)
                    for (int x : cs.members[c]) os << " \"" << labels[x] << "\";";
            os << " }\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace wcpo
