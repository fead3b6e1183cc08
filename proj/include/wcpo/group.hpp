#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcpo/errors.hpp"

namespace wcpo {

/// Largest supported group order. Every axiom of a candidate table is checked
/// exhaustively at construction time, so the cap keeps that affordable.
inline constexpr int kMaxGroupOrder = 64;

/// A finite group given by its Cayley table. Element 0 is always the
/// identity; all algebra downstream is index arithmetic on this table.
/// Instances are immutable after construction and shared by pointer.
struct FiniteGroup {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;  // table[i][j] = index of e_i * e_j
    std::vector<int> inverse_of;

    int size() const { return static_cast<int>(elements.size()); }
    int mul(int i, int j) const { return table[i][j]; }
    int inv(int i) const { return inverse_of[i]; }
    static constexpr int identity = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Two groups are interchangeable when their tables agree; labels are
/// presentation only.
inline bool structural_equal(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table == b.table;
}

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
    return a == b || (a && b && structural_equal(*a, *b));
}

// ---------------------------------------------------------------------------
// Axiom verification

struct GroupAxiomReport {
    enum class Axiom {
        shape,          // not square / entry out of range
        identity_law,   // table[0][j] != j or table[i][0] != i
        row_permutation,
        column_permutation,
        associativity,
        inverse,
    };
    struct Violation {
        Axiom axiom;
        int i = -1, j = -1, k = -1;
        std::string detail;
    };
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    std::string summary() const {
        if (ok()) return "all group axioms hold";
        std::ostringstream os;
        for (const auto& v : violations) os << v.detail << "\n";
        return os.str();
    }
};

/// Checks every group axiom of a candidate table, collecting all violations
/// with witnesses. Empty report iff the table is a group with identity 0.
inline GroupAxiomReport verify_group_axioms(const std::vector<std::vector<int>>& table) {
    GroupAxiomReport report;
    const int n = static_cast<int>(table.size());
    auto add = [&](GroupAxiomReport::Axiom a, int i, int j, int k, std::string detail) {
        report.violations.push_back({a, i, j, k, std::move(detail)});
    };
    if (n == 0) {
        add(GroupAxiomReport::Axiom::shape, -1, -1, -1, "empty table");
        return report;
    }
    bool shaped = true;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) {
            add(GroupAxiomReport::Axiom::shape, i, -1, -1,
                "row " + std::to_string(i) + " has wrong length");
            shaped = false;
            continue;
        }
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n) {
                add(GroupAxiomReport::Axiom::shape, i, j, -1,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
                shaped = false;
            }
        }
    }
    if (!shaped) return report;  // remaining checks would index out of bounds

    for (int j = 0; j < n; ++j)
        if (table[0][j] != j)
            add(GroupAxiomReport::Axiom::identity_law, 0, j, -1,
                "identity law fails: table[0][" + std::to_string(j) + "] != " + std::to_string(j));
    for (int i = 0; i < n; ++i)
        if (table[i][0] != i)
            add(GroupAxiomReport::Axiom::identity_law, i, 0, -1,
                "identity law fails: table[" + std::to_string(i) + "][0] != " + std::to_string(i));

    for (int i = 0; i < n; ++i) {
        std::vector<char> seen(n, 0);
        for (int j = 0; j < n; ++j) seen[table[i][j]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            add(GroupAxiomReport::Axiom::row_permutation, i, -1, -1,
                "row " + std::to_string(i) + " is not a permutation");
    }
    for (int j = 0; j < n; ++j) {
        std::vector<char> seen(n, 0);
        for (int i = 0; i < n; ++i) seen[table[i][j]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            add(GroupAxiomReport::Axiom::column_permutation, j, -1, -1,
                "column " + std::to_string(j) + " is not a permutation");
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    add(GroupAxiomReport::Axiom::associativity, i, j, k,
                        "associativity fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")");

    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (int j = 0; j < n; ++j)
            if (table[i][j] == 0 && table[j][i] == 0) found = true;
        if (!found)
            add(GroupAxiomReport::Axiom::inverse, i, -1, -1,
                "element " + std::to_string(i) + " has no two-sided inverse");
    }
    return report;
}

/// Validates and freezes a group. Throws non_group_table with the full axiom
/// report on failure.
inline GroupPtr make_group(std::string name, std::vector<std::string> elements,
                           std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n > kMaxGroupOrder)
        throw too_large("group order " + std::to_string(n) + " exceeds the supported cap of " +
                        std::to_string(kMaxGroupOrder));
    if (static_cast<int>(elements.size()) != n)
        throw input_error("element label count does not match table size");
    if (std::set<std::string>(elements.begin(), elements.end()).size() != elements.size())
        throw input_error("element labels must be distinct");
    auto report = verify_group_axioms(table);
    if (!report.ok()) throw non_group_table("not a group table:\n" + report.summary());

    auto g = std::make_shared<FiniteGroup>();
    g->name = std::move(name);
    g->elements = std::move(elements);
    g->table = std::move(table);
    g->inverse_of.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g->table[i][j] == 0 && g->table[j][i] == 0) g->inverse_of[i] = j;
    return g;
}

// ---------------------------------------------------------------------------
// Presets

inline GroupPtr build_cyclic(int n) {
    if (n < 1) throw unsupported_spec("cyclic group needs order >= 1");
    std::vector<std::string> labels(n);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return make_group("C" + std::to_string(n), std::move(labels), std::move(table));
}

/// Dihedral group of the given (even) order 2n, generated by a rotation a of
/// order n and a reflection s with s*a*s^-1 = a^-1. Element order is
/// 1, a, ..., a^(n-1), s, a*s, ..., a^(n-1)*s.
inline GroupPtr build_dihedral(int order) {
    if (order < 2 || order % 2 != 0) throw unsupported_spec("dihedral group needs even order >= 2");
    const int n = order / 2;
    std::vector<std::string> labels(order);
    for (int i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "1" : (i == 1 ? "a" : "a" + std::to_string(i));
        labels[n + i] = i == 0 ? "s" : (i == 1 ? "as" : "a" + std::to_string(i) + "s");
    }
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    auto idx = [n](bool flip, int rot) { return (flip ? n : 0) + ((rot % n) + n) % n; };
    for (int i = 0; i < order; ++i) {
        const bool fi = i >= n;
        const int ri = fi ? i - n : i;
        for (int j = 0; j < order; ++j) {
            const bool fj = j >= n;
            const int rj = fj ? j - n : j;
            // a^ri s^fi * a^rj s^fj = a^(ri + rj or ri - rj) s^(fi xor fj)
            table[i][j] = idx(fi != fj, fi ? ri - rj : ri + rj);
        }
    }
    return make_group("D" + std::to_string(order), std::move(labels), std::move(table));
}

/// Symmetric group on {0..n-1}, n <= 4, elements in lexicographic one-line
/// order so the identity lands at index 0. table[i][j] = p_i o p_j.
inline GroupPtr build_symmetric(int n) {
    if (n < 1 || n > 4) throw unsupported_spec("symmetric preset supports 1 <= n <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        index[perms[i]] = i;
        std::string s;
        for (int x : perms[i]) s += std::to_string(x);
        labels[i] = s;
    }
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[i][perms[j][x]];
            table[i][j] = index.at(c);
        }
    return make_group("S" + std::to_string(n), std::move(labels), std::move(table));
}

// ---------------------------------------------------------------------------
// Subgroups and cosets

/// A subgroup as a sorted set of element indices of its parent group.
struct Subgroup {
    GroupPtr group;
    std::vector<int> members;  // sorted, contains 0

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int g) const {
        return std::binary_search(members.begin(), members.end(), g);
    }
};

inline bool same_members(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }

/// Wraps a member set as a Subgroup after checking it really is one.
inline Subgroup make_subgroup(GroupPtr group, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const int n = group->size();
    for (int m : members)
        if (m < 0 || m >= n) throw input_error("subgroup member index out of range");
    Subgroup h{group, std::move(members)};
    if (!h.contains(FiniteGroup::identity))
        throw not_a_subgroup("subgroup must contain the identity");
    for (int x : h.members) {
        if (!h.contains(group->inv(x)))
            throw not_a_subgroup("set is not inverse-closed at element " + std::to_string(x));
        for (int y : h.members)
            if (!h.contains(group->mul(x, y)))
                throw not_a_subgroup("set is not product-closed at (" + std::to_string(x) + "," +
                                     std::to_string(y) + ")");
    }
    return h;
}

/// Smallest subgroup containing the seed set.
inline Subgroup generated_subgroup(const GroupPtr& group, const std::vector<int>& seed) {
    const int n = group->size();
    std::vector<char> in(n, 0);
    in[FiniteGroup::identity] = 1;
    std::vector<int> work{FiniteGroup::identity};
    for (int s : seed) {
        if (s < 0 || s >= n) throw input_error("seed index out of range");
        if (!in[s]) {
            in[s] = 1;
            work.push_back(s);
        }
    }
    // In a finite group, closing under products also yields inverses.
    for (std::size_t head = 0; head < work.size(); ++head)
        for (std::size_t j = 0; j < work.size(); ++j) {
            for (int z : {group->mul(work[head], work[j]), group->mul(work[j], work[head])})
                if (!in[z]) {
                    in[z] = 1;
                    work.push_back(z);
                }
        }
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
        if (in[i]) members.push_back(i);
    return Subgroup{group, std::move(members)};
}

inline bool is_normal(const Subgroup& h) {
    const auto& g = *h.group;
    for (int x = 0; x < g.size(); ++x)
        for (int m : h.members)
            if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
    return true;
}

/// The left cosets gH of a subgroup. Representatives are the minimal element
/// index of each coset, discovered in index order, so coset 0 is H itself.
struct CosetSpace {
    GroupPtr group;
    Subgroup subgroup;
    std::vector<int> reps;
    std::vector<int> coset_of;               // element index -> coset index
    std::vector<std::vector<int>> members;   // per coset, sorted

    int count() const { return static_cast<int>(reps.size()); }
};

inline CosetSpace left_cosets(const GroupPtr& group, const Subgroup& h) {
    if (!same_group(group, h.group)) throw group_mismatch("subgroup belongs to a different group");
    const int n = group->size();
    CosetSpace cs;
    cs.group = group;
    cs.subgroup = h;
    cs.coset_of.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (cs.coset_of[g] != -1) continue;
        const int c = cs.count();
        cs.reps.push_back(g);
        cs.members.emplace_back();
        for (int m : h.members) {
            const int x = group->mul(g, m);
            cs.coset_of[x] = c;
            cs.members.back().push_back(x);
        }
        std::sort(cs.members.back().begin(), cs.members.back().end());
    }
    return cs;
}

/// The double coset H a H.
inline std::vector<int> double_coset(const GroupPtr& group, const Subgroup& h, int a) {
    if (a < 0 || a >= group->size()) throw input_error("element index out of range");
    std::set<int> out;
    for (int x : h.members)
        for (int y : h.members) out.insert(group->mul(group->mul(x, a), y));
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Quotients

struct Quotient {
    GroupPtr group;               // the quotient as a group in its own right
    std::vector<int> projection;  // parent element index -> quotient index
    CosetSpace cosets;
};

inline Quotient quotient_group(const GroupPtr& group, const Subgroup& n) {
    if (!same_group(group, n.group)) throw group_mismatch("subgroup belongs to a different group");
    if (!is_normal(n)) throw not_normal("subgroup is not normal");
    CosetSpace cs = left_cosets(group, n);
    const int m = cs.count();
    std::vector<std::string> labels(m);
    for (int c = 0; c < m; ++c) labels[c] = group->elements[cs.reps[c]] + "N";
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int c1 = 0; c1 < m; ++c1)
        for (int c2 = 0; c2 < m; ++c2)
            table[c1][c2] = cs.coset_of[group->mul(cs.reps[c1], cs.reps[c2])];
    Quotient q;
    q.group = make_group(group->name + "/N", std::move(labels), std::move(table));
    q.projection = cs.coset_of;
    q.cosets = std::move(cs);
    return q;
}

// ---------------------------------------------------------------------------
// Canonical factorizations over a generating set

/// Breadth-first tree of shortest factorizations into generators, found by
/// multiplying generators on the left (no inverses). Levels are processed in
/// element-index order and generators tried in index order, so the tree is
/// deterministic.
struct FactorizationTree {
    GroupPtr group;
    std::vector<int> generators;
    std::vector<int> dist;                     // word length, 0 at identity
    std::vector<std::pair<int, int>> parent;   // w -> (s, w') with w = s*w'

    /// Generator sequence multiplying (left to right) to the element.
    std::vector<int> word(int g) const {
        std::vector<int> out;
        while (g != FiniteGroup::identity) {
            out.push_back(parent[g].first);
            g = parent[g].second;
        }
        return out;
    }
};

inline FactorizationTree canonical_factorization(const GroupPtr& group,
                                                 const std::vector<int>& generators) {
    const int n = group->size();
    std::vector<int> gens(generators);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (int s : gens)
        if (s < 0 || s >= n) throw input_error("generator index out of range");

    FactorizationTree t;
    t.group = group;
    t.generators = gens;
    t.dist.assign(n, -1);
    t.parent.assign(n, {-1, -1});
    t.dist[FiniteGroup::identity] = 0;
    std::vector<int> level{FiniteGroup::identity};
    while (!level.empty()) {
        std::vector<int> next;
        for (int w : level)
            for (int s : gens) {
                const int v = group->mul(s, w);
                if (t.dist[v] == -1) {
                    t.dist[v] = t.dist[w] + 1;
                    t.parent[v] = {s, w};
                    next.push_back(v);
                }
            }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    std::vector<int> unreached;
    for (int i = 0; i < n; ++i)
        if (t.dist[i] == -1) unreached.push_back(i);
    if (!unreached.empty()) {
        std::ostringstream os;
        os << "generating set does not reach";
        for (int u : unreached) os << " " << group->elements[u];
        throw not_generating(os.str(), std::move(unreached));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Misc helpers

/// A subgroup viewed as a group of its own; members (sorted) give the
/// new-index -> parent-index map.
inline std::pair<GroupPtr, std::vector<int>> subgroup_as_group(const Subgroup& h) {
    const auto& g = *h.group;
    const int m = h.size();
    std::vector<int> back(g.size(), -1);
    for (int i = 0; i < m; ++i) back[h.members[i]] = i;
    std::vector<std::string> labels(m);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        labels[i] = g.elements[h.members[i]];
        for (int j = 0; j < m; ++j) table[i][j] = back[g.mul(h.members[i], h.members[j])];
    }
    return {make_group(g.name + "|" + std::to_string(m), std::move(labels), std::move(table)),
            h.members};
}

/// All subgroups, found by closing each known subgroup with one extra element.
inline std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<std::vector<int>> work;
    auto push = [&](Subgroup h) {
        if (seen.insert(h.members).second) {
            work.push_back(h.members);
            out.push_back(std::move(h));
        }
    };
    push(generated_subgroup(group, {}));
    for (std::size_t head = 0; head < work.size(); ++head) {
        const std::vector<int> base = work[head];
        for (int g = 0; g < group->size(); ++g) {
            if (std::binary_search(base.begin(), base.end(), g)) continue;
            std::vector<int> seed(base);
            seed.push_back(g);
            push(generated_subgroup(group, seed));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.members.size() != b.members.size() ? a.members.size() < b.members.size()
                                                    : a.members < b.members;
    });
    return out;
}

}  // namespace wcpo
