#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcpo/errors.hpp"
#include "wcpo/group.hpp"
#include "wcpo/subadditive.hpp"
#include "wcpo/unit_word.hpp"

namespace wcpo {

// ---------------------------------------------------------------------------
// Value types

/// A normalized weak 2-cocycle with values in {0, 1}.
struct IdempotentCocycle {
    GroupPtr group;
    std::vector<std::vector<int>> values;

    int operator()(int s, int t) const { return values[s][t]; }
};

inline bool operator==(const IdempotentCocycle& a, const IdempotentCocycle& b) {
    return same_group(a.group, b.group) && a.values == b.values;
}

/// A formal value unit * pi^exp, or zero. This is all the arithmetic the
/// valuation-level statements need: exponents add, units multiply formally,
/// zero absorbs.
struct ValuedMonomial {
    bool is_zero = false;
    UnitWord unit;
    int exp = 0;

    static ValuedMonomial zero() { return {true, {}, 0}; }
    static ValuedMonomial one() { return {}; }
    static ValuedMonomial pi_power(int k) { return {false, {}, k}; }
};

inline bool raw_equal(const ValuedMonomial& a, const ValuedMonomial& b) {
    if (a.is_zero || b.is_zero) return a.is_zero == b.is_zero;
    return a.exp == b.exp && a.unit == b.unit;
}

inline ValuedMonomial monomial_mul(const ValuedMonomial& a, const ValuedMonomial& b) {
    if (a.is_zero || b.is_zero) return ValuedMonomial::zero();
    return {false, a.unit * b.unit, a.exp + b.exp};
}

inline ValuedMonomial monomial_inverse(const ValuedMonomial& a) {
    if (a.is_zero) throw check_error("zero has no inverse");
    return {false, inverse(a.unit), -a.exp};
}

/// Applies a group element: s(unit * pi^k) = s(unit) * u(s)^k * pi^k.
inline ValuedMonomial monomial_twist(const FiniteGroup& group, int s, const ValuedMonomial& m) {
    if (m.is_zero) return ValuedMonomial::zero();
    ValuedMonomial out{false, apply_twist(group, s, m.unit), m.exp};
    if (s != FiniteGroup::identity) out.unit.mul_symbol(u_symbol(s), m.exp);
    return out;
}

/// Seed of a coboundary: a function a on the group with a(1) = 1, unit parts
/// written in W symbols and pi-exponents free.
struct CoboundarySeed {
    GroupPtr group;
    std::vector<ValuedMonomial> a;
};

inline CoboundarySeed make_seed(GroupPtr group, std::vector<ValuedMonomial> a) {
    if (static_cast<int>(a.size()) != group->size())
        throw input_error("seed length does not match group order");
    if (a[FiniteGroup::identity].is_zero || a[FiniteGroup::identity].exp != 0 ||
        !a[FiniteGroup::identity].unit.raw_trivial())
        throw input_error("seed must be 1 at the identity");
    for (const auto& m : a) {
        if (m.is_zero) throw input_error("seed values must be nonzero");
        for (const auto& [sym, k] : m.unit.exps)
            if (sym.tag != UnitTag::w) throw input_error("seed unit parts must use W symbols only");
    }
    return CoboundarySeed{std::move(group), std::move(a)};
}

/// A normalized weak 2-cocycle with formal monomial values. Carries its seed
/// when it was built as a coboundary, which is what decompose() consumes.
struct ValuedCocycle {
    GroupPtr group;
    std::vector<std::vector<ValuedMonomial>> values;
    std::optional<std::vector<ValuedMonomial>> seed;

    const ValuedMonomial& operator()(int s, int t) const { return values[s][t]; }

    bool has_zero_entry() const {
        for (const auto& row : values)
            for (const auto& m : row)
                if (m.is_zero) return true;
        return false;
    }
    /// True when every value lies in the integral monomials (no zero entries,
    /// no negative exponents).
    bool integral() const {
        for (const auto& row : values)
            for (const auto& m : row)
                if (m.is_zero || m.exp < 0) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Verification

struct CocycleReport {
    enum class Kind { shape, normalization, zero_mismatch, exponent, unit };
    struct Violation {
        Kind kind;
        int s = -1, t = -1, u = -1;
        std::string detail;
    };
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const {
        if (ok()) return "cocycle conditions hold";
        std::ostringstream os;
        for (const auto& v : violations) os << v.detail << "\n";
        return os.str();
    }
};

enum class VerifyLevel { valuation, strict };

inline CocycleReport verify_cocycle(const IdempotentCocycle& e) {
    CocycleReport report;
    const auto& g = *e.group;
    const int n = g.size();
    auto add = [&](CocycleReport::Kind k, int s, int t, int u, std::string d) {
        report.violations.push_back({k, s, t, u, std::move(d)});
    };
    if (static_cast<int>(e.values.size()) != n)
        add(CocycleReport::Kind::shape, -1, -1, -1, "table size does not match group order");
    for (int i = 0; i < n && report.ok(); ++i)
        if (static_cast<int>(e.values[i].size()) != n)
            add(CocycleReport::Kind::shape, i, -1, -1, "row " + std::to_string(i) + " has wrong length");
    if (!report.ok()) return report;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (e.values[i][j] != 0 && e.values[i][j] != 1)
                add(CocycleReport::Kind::shape, i, j, -1, "entries must be 0 or 1");
    if (!report.ok()) return report;
    for (int j = 0; j < n; ++j) {
        if (e(0, j) != 1)
            add(CocycleReport::Kind::normalization, 0, j, -1,
                "normalization fails at (1," + g.elements[j] + ")");
        if (e(j, 0) != 1)
            add(CocycleReport::Kind::normalization, j, 0, -1,
                "normalization fails at (" + g.elements[j] + ",1)");
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u)
                if (e(s, t) * e(g.mul(s, t), u) != e(t, u) * e(s, g.mul(t, u)))
                    add(CocycleReport::Kind::zero_mismatch, s, t, u,
                        "cocycle identity fails at (" + g.elements[s] + "," + g.elements[t] + "," +
                            g.elements[u] + ")");
    return report;
}

/// Checks normalization and all |G|^3 instances of the cocycle identity.
/// At valuation level only pi-exponents are compared (with zero absorption);
/// at strict level the unit words must also agree modulo the U relations.
inline CocycleReport verify_cocycle(const ValuedCocycle& f, VerifyLevel level,
                                    const UnitLattice* lattice = nullptr) {
    CocycleReport report;
    const auto& g = *f.group;
    const int n = g.size();
    auto add = [&](CocycleReport::Kind k, int s, int t, int u, std::string d) {
        report.violations.push_back({k, s, t, u, std::move(d)});
    };
    if (static_cast<int>(f.values.size()) != n) {
        add(CocycleReport::Kind::shape, -1, -1, -1, "table size does not match group order");
        return report;
    }
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(f.values[i].size()) != n) {
            add(CocycleReport::Kind::shape, i, -1, -1, "row " + std::to_string(i) + " has wrong length");
            return report;
        }

    std::optional<UnitLattice> local;
    if (level == VerifyLevel::strict && lattice == nullptr) {
        local.emplace(f.group);
        lattice = &*local;
    }

    auto is_one = [&](const ValuedMonomial& m) {
        if (m.is_zero || m.exp != 0) return false;
        if (level == VerifyLevel::valuation) return true;
        return lattice->equivalent(m.unit, UnitWord::one());
    };
    for (int j = 0; j < n; ++j) {
        if (!is_one(f(0, j)))
            add(CocycleReport::Kind::normalization, 0, j, -1,
                "normalization fails at (1," + g.elements[j] + ")");
        if (!is_one(f(j, 0)))
            add(CocycleReport::Kind::normalization, j, 0, -1,
                "normalization fails at (" + g.elements[j] + ",1)");
    }

    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const int st = g.mul(s, t);
            for (int u = 0; u < n; ++u) {
                const int tu = g.mul(t, u);
                const ValuedMonomial& l1 = f(s, t);
                const ValuedMonomial& l2 = f(st, u);
                const ValuedMonomial& r1 = f(t, u);
                const ValuedMonomial& r2 = f(s, tu);
                const bool lz = l1.is_zero || l2.is_zero;
                const bool rz = r1.is_zero || r2.is_zero;
                if (lz || rz) {
                    if (lz != rz)
                        add(CocycleReport::Kind::zero_mismatch, s, t, u,
                            "one side of the cocycle identity vanishes at (" + g.elements[s] + "," +
                                g.elements[t] + "," + g.elements[u] + ")");
                    continue;
                }
                if (l1.exp + l2.exp != r1.exp + r2.exp) {
                    add(CocycleReport::Kind::exponent, s, t, u,
                        "exponents disagree at (" + g.elements[s] + "," + g.elements[t] + "," +
                            g.elements[u] + "): " + std::to_string(l1.exp + l2.exp) + " vs " +
                            std::to_string(r1.exp + r2.exp));
                    continue;
                }
                if (level == VerifyLevel::strict) {
                    UnitWord lhs = l1.unit * l2.unit;
                    UnitWord rhs = monomial_twist(g, s, r1).unit * r2.unit;
                    if (!lattice->equivalent(lhs, rhs))
                        add(CocycleReport::Kind::unit, s, t, u,
                            "unit words disagree at (" + g.elements[s] + "," + g.elements[t] + "," +
                                g.elements[u] + "): " + to_string(g, lhs) + " vs " + to_string(g, rhs));
                }
            }
        }
    return report;
}

// ---------------------------------------------------------------------------
// Inertial groups

inline Subgroup inertial_group(const IdempotentCocycle& e) {
    std::vector<int> members;
    for (int s = 0; s < e.group->size(); ++s)
        if (e(s, e.group->inv(s)) == 1) members.push_back(s);
    try {
        return make_subgroup(e.group, std::move(members));
    } catch (const not_a_subgroup& err) {
        throw not_a_subgroup(std::string("inertial set is not a subgroup (not a cocycle?): ") +
                             err.what());
    }
}

inline Subgroup inertial_group(const ValuedCocycle& f) {
    std::vector<int> members;
    for (int s = 0; s < f.group->size(); ++s) {
        const auto& m = f(s, f.group->inv(s));
        if (!m.is_zero && m.exp == 0) members.push_back(s);
    }
    try {
        return make_subgroup(f.group, std::move(members));
    } catch (const not_a_subgroup& err) {
        throw not_a_subgroup(std::string("inertial set is not a subgroup (not a cocycle?): ") +
                             err.what());
    }
}

// ---------------------------------------------------------------------------
// Constructions from subadditive functions

/// The idempotent cocycle supported on the defect-zero pairs of r.
inline IdempotentCocycle idempotent_from_r(const SubadditiveFn& r) {
    const auto d = defect_table(r);
    const int n = r.group->size();
    IdempotentCocycle e{r.group, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.values[i][j] = d.d[i][j] == 0 ? 1 : 0;
    return e;
}

/// The pure pi-exponent part of the canonical cocycle of r; identical to the
/// defect table, exposed for table display.
inline std::vector<std::vector<int>> pi_power_table(const SubadditiveFn& r) {
    return defect_table(r).d;
}

/// The canonical valued cocycle of r: entry (s, t) is u(s)^r(t) * pi^d(s,t).
/// Seed-built from a(s) = pi^r(s), so it decomposes back to (1, r).
inline ValuedCocycle valued_from_r(const SubadditiveFn& r) {
    const auto d = defect_table(r);
    const int n = r.group->size();
    ValuedCocycle b;
    b.group = r.group;
    b.values.assign(n, std::vector<ValuedMonomial>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            ValuedMonomial m = ValuedMonomial::pi_power(d.d[s][t]);
            if (s != FiniteGroup::identity) m.unit.mul_symbol(u_symbol(s), r(t));
            b.values[s][t] = m;
        }
    std::vector<ValuedMonomial> seed(n);
    for (int s = 0; s < n; ++s) seed[s] = ValuedMonomial::pi_power(r(s));
    b.seed = std::move(seed);
    return b;
}

/// Residues mod pi: the unit word where the exponent vanishes, zero where it
/// is positive. Requires an integral cocycle.
inline std::vector<std::vector<std::optional<UnitWord>>> residue_table(const ValuedCocycle& b) {
    if (!b.integral()) throw not_integral("residues need an integral cocycle");
    const int n = b.group->size();
    std::vector<std::vector<std::optional<UnitWord>>> out(n);
    for (int s = 0; s < n; ++s) {
        out[s].reserve(n);
        for (int t = 0; t < n; ++t)
            out[s].push_back(b(s, t).exp == 0 ? std::optional<UnitWord>(b(s, t).unit) : std::nullopt);
    }
    return out;
}

/// b(s, t) = a(s) * s(a(t)) * a(st)^-1 for a seed a. Rejects seeds whose
/// output would leave the integral monomials.
inline ValuedCocycle coboundary_from_seed(const CoboundarySeed& seed) {
    const auto& g = *seed.group;
    const int n = g.size();
    ValuedCocycle b;
    b.group = seed.group;
    b.values.assign(n, std::vector<ValuedMonomial>(n));
    std::vector<std::pair<int, int>> negatives;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const int st = g.mul(s, t);
            ValuedMonomial m = monomial_mul(seed.a[s], monomial_twist(g, s, seed.a[t]));
            m = monomial_mul(m, monomial_inverse(seed.a[st]));
            if (m.exp < 0) negatives.emplace_back(s, t);
            b.values[s][t] = m;
        }
    if (!negatives.empty()) {
        std::ostringstream os;
        os << "seed exponents are not subadditive; negative valuation at";
        for (auto [s, t] : negatives) os << " (" << g.elements[s] << "," << g.elements[t] << ")";
        throw not_integral_output(os.str());
    }
    b.seed = seed.a;
    return b;
}

/// Pointwise product. Seeds multiply along when both factors carry one.
inline ValuedCocycle multiply(const ValuedCocycle& a, const ValuedCocycle& b) {
    if (!same_group(a.group, b.group)) throw group_mismatch("cocycles live on different groups");
    const int n = a.group->size();
    ValuedCocycle out;
    out.group = a.group;
    out.values.assign(n, std::vector<ValuedMonomial>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) out.values[s][t] = monomial_mul(a(s, t), b(s, t));
    if (a.seed && b.seed) {
        std::vector<ValuedMonomial> seed(n);
        for (int s = 0; s < n; ++s) seed[s] = monomial_mul((*a.seed)[s], (*b.seed)[s]);
        out.seed = std::move(seed);
    }
    return out;
}

/// Entrywise equality with unit words compared modulo the U relations.
inline bool strict_equal(const ValuedCocycle& a, const ValuedCocycle& b, const UnitLattice& lattice) {
    if (!same_group(a.group, b.group)) return false;
    const int n = a.group->size();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const auto& x = a(s, t);
            const auto& y = b(s, t);
            if (x.is_zero || y.is_zero) {
                if (x.is_zero != y.is_zero) return false;
                continue;
            }
            if (x.exp != y.exp || !lattice.equivalent(x.unit, y.unit)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Decomposition (coboundary = unit coboundary * canonical cocycle)

struct Decomposition {
    ValuedCocycle unit_part;  // all exponents zero
    SubadditiveFn r;
};

/// Splits a seed-built cocycle uniquely as (unit coboundary) * (canonical
/// cocycle of r), with r the valuations of the seed. The inertial group of
/// the input equals the zero subgroup of r.
inline Decomposition decompose(const ValuedCocycle& b, const UnitLattice* lattice = nullptr) {
    if (!b.seed) throw not_decomposable("input does not carry a coboundary seed");
    std::optional<UnitLattice> local;
    if (lattice == nullptr) {
        local.emplace(b.group);
        lattice = &*local;
    }
    auto report = verify_cocycle(b, VerifyLevel::strict, lattice);
    if (!report.ok()) throw not_decomposable("input fails strict verification:\n" + report.summary());

    std::vector<int> exps(b.group->size());
    for (int s = 0; s < b.group->size(); ++s) {
        if ((*b.seed)[s].is_zero) throw not_decomposable("seed has a zero value");
        exps[s] = (*b.seed)[s].exp;
    }
    SubadditiveFn r = [&] {
        try {
            return validate_subadditive(b.group, exps);
        } catch (const check_error& e) {
            throw not_decomposable(std::string("seed valuations are not subadditive: ") + e.what());
        }
    }();

    const auto d = defect_table(r);
    const int n = b.group->size();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (b(s, t).is_zero || b(s, t).exp != d.d[s][t])
                throw not_decomposable("entry exponents do not match the defect of the seed valuations at (" +
                                       b.group->elements[s] + "," + b.group->elements[t] + ")");

    ValuedCocycle c;
    c.group = b.group;
    c.values.assign(n, std::vector<ValuedMonomial>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            UnitWord unit = b(s, t).unit;
            if (s != FiniteGroup::identity) unit.mul_symbol(u_symbol(s), -r(t));
            c.values[s][t] = {false, std::move(unit), 0};
        }
    std::vector<ValuedMonomial> cseed(n);
    for (int s = 0; s < n; ++s) cseed[s] = {false, (*b.seed)[s].unit, 0};
    c.seed = std::move(cseed);

    if (!same_members(inertial_group(b), zero_subgroup(r)))
        throw internal_inconsistency("inertial group differs from the zero subgroup of the seed valuations");
    if (!strict_equal(multiply(c, valued_from_r(r)), b, *lattice))
        throw internal_inconsistency("decomposition does not multiply back to the input");
    return {std::move(c), std::move(r)};
}

// ---------------------------------------------------------------------------
// Valuation profile and partners

/// True iff every anti-diagonal valuation v(f(s, s^-1)) is at most 1 — the
/// valuation test for hereditariness of the associated order.
inline bool hereditary_criterion(const ValuedCocycle& f) {
    if (f.has_zero_entry()) throw not_integral("criterion needs nonzero values");
    for (int s = 0; s < f.group->size(); ++s)
        if (f(s, f.group->inv(s)).exp > 1) return false;
    return true;
}

/// The anti-diagonal valuations r(s) = v(f(s, s^-1)) of an integral cocycle.
/// Subadditive for every genuine cocycle; symmetric under inversion; its zero
/// subgroup is the inertial group.
inline SubadditiveFn r_from_cocycle(const ValuedCocycle& f) {
    const auto& g = *f.group;
    if (!f.integral()) throw not_integral("valuation profile needs an integral cocycle");
    std::vector<int> values(g.size());
    for (int s = 0; s < g.size(); ++s) values[s] = f(s, g.inv(s)).exp;
    SubadditiveFn r = validate_subadditive(f.group, std::move(values));
    for (int s = 0; s < g.size(); ++s)
        if (r(s) != r(g.inv(s)))
            throw internal_inconsistency("anti-diagonal valuations are not inversion-symmetric (not a cocycle?)");
    if (!same_members(zero_subgroup(r), inertial_group(f)))
        throw internal_inconsistency("zero subgroup of the valuation profile differs from the inertial group");
    return r;
}

/// The partner h = f^-1 * (canonical cocycle of r), so f * h equals that
/// canonical cocycle entrywise. For r the valuation profile of f the partner
/// is integral; for its halved profile the anti-diagonal valuations of h land
/// in {0, 1}.
inline ValuedCocycle partner_cocycle(const ValuedCocycle& f, const SubadditiveFn& r) {
    if (!same_group(f.group, r.group)) throw group_mismatch("function lives on a different group");
    if (f.has_zero_entry()) throw not_integral("partner needs nonzero values");
    const auto& g = *f.group;
    const int n = g.size();
    const auto d = defect_table(r);
    ValuedCocycle h;
    h.group = f.group;
    h.values.assign(n, std::vector<ValuedMonomial>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            UnitWord unit = inverse(f(s, t).unit);
            if (s != FiniteGroup::identity) unit.mul_symbol(u_symbol(s), r(t));
            h.values[s][t] = {false, std::move(unit), d.d[s][t] - f(s, t).exp};
        }

    const SubadditiveFn profile = r_from_cocycle(f);
    if (r.values == profile.values) {
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (h(s, t).exp < 0)
                    throw internal_inconsistency(
                        "partner for the valuation profile left the integral monomials at (" +
                        g.elements[s] + "," + g.elements[t] + ")");
    }
    if (r.values == halve(profile).values) {
        for (int s = 0; s < n; ++s) {
            const int v = h(s, g.inv(s)).exp;
            if (v < 0 || v > 1)
                throw internal_inconsistency("partner for the halved profile has anti-diagonal valuation " +
                                             std::to_string(v) + " at " + g.elements[s]);
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// Restriction and inflation

inline IdempotentCocycle restrict_to(const IdempotentCocycle& e, const Subgroup& m) {
    if (!same_group(e.group, m.group)) throw group_mismatch("subgroup of a different group");
    auto [sub, members] = subgroup_as_group(m);
    const int k = sub->size();
    IdempotentCocycle out{sub, std::vector<std::vector<int>>(k, std::vector<int>(k))};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.values[i][j] = e(members[i], members[j]);
    return out;
}

inline ValuedCocycle restrict_to(const ValuedCocycle& f, const Subgroup& m) {
    if (!same_group(f.group, m.group)) throw group_mismatch("subgroup of a different group");
    auto [sub, members] = subgroup_as_group(m);
    std::vector<int> back(f.group->size(), -1);
    for (int i = 0; i < sub->size(); ++i) back[members[i]] = i;
    auto remap = [&](const UnitWord& w) {
        UnitWord out;
        for (const auto& [sym, kk] : w.exps) {
            if (back[sym.twist] == -1 || back[sym.base] == -1)
                throw input_error("unit word mentions elements outside the subgroup");
            out.mul_symbol({back[sym.twist], sym.tag, back[sym.base]}, kk);
        }
        return out;
    };
    const int k = sub->size();
    ValuedCocycle out;
    out.group = sub;
    out.values.assign(k, std::vector<ValuedMonomial>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const auto& m0 = f(members[i], members[j]);
            out.values[i][j] =
                m0.is_zero ? ValuedMonomial::zero() : ValuedMonomial{false, remap(m0.unit), m0.exp};
        }
    return out;
}

/// Lifts an idempotent cocycle on G/N to G along the projection. The inertial
/// group of the lift is the preimage of the quotient one.
inline IdempotentCocycle inflate(const GroupPtr& group, const Subgroup& n,
                                 const IdempotentCocycle& eps) {
    Quotient q = quotient_group(group, n);
    if (!same_group(eps.group, q.group))
        throw group_mismatch("cocycle is not defined on the quotient by the given subgroup");
    const int m = group->size();
    IdempotentCocycle e{group, std::vector<std::vector<int>>(m, std::vector<int>(m))};
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) e.values[s][t] = eps(q.projection[s], q.projection[t]);
    auto report = verify_cocycle(e);
    if (!report.ok()) throw internal_inconsistency("inflated table fails verification:\n" + report.summary());
    const Subgroup h_eps = inertial_group(eps);
    std::vector<int> preimage;
    for (int s = 0; s < m; ++s)
        if (h_eps.contains(q.projection[s])) preimage.push_back(s);
    if (inertial_group(e).members != preimage)
        throw internal_inconsistency("inertial group of the lift is not the projection preimage");
    return e;
}

/// Pushes an idempotent cocycle on G down to G/N. Possible exactly when N
/// lies inside the inertial group; the value on a pair of cosets is then
/// independent of the chosen representatives.
inline IdempotentCocycle deflate(const IdempotentCocycle& e, const Subgroup& n) {
    const GroupPtr& group = e.group;
    if (!same_group(group, n.group)) throw group_mismatch("subgroup of a different group");
    if (!is_normal(n)) throw not_normal("subgroup is not normal");
    const Subgroup h = inertial_group(e);
    for (int x : n.members)
        if (!h.contains(x))
            throw not_in_inertial_group("element " + group->elements[x] +
                                        " of the subgroup lies outside the inertial group; no quotient cocycle exists");
    Quotient q = quotient_group(group, n);
    const int m = q.group->size();
    IdempotentCocycle eps{q.group, std::vector<std::vector<int>>(m, std::vector<int>(m))};
    for (int c1 = 0; c1 < m; ++c1)
        for (int c2 = 0; c2 < m; ++c2) {
            const int value = e(q.cosets.reps[c1], q.cosets.reps[c2]);
            for (int x : q.cosets.members[c1])
                for (int y : q.cosets.members[c2])
                    if (e(x, y) != value)
                        throw well_definedness_failure("value depends on coset representatives at (" +
                                                       group->elements[x] + "," + group->elements[y] + ")");
            eps.values[c1][c2] = value;
        }
    auto report = verify_cocycle(eps);
    if (!report.ok())
        throw internal_inconsistency("deflated table fails verification:\n" + report.summary());
    return eps;
}

}  // namespace wcpo
