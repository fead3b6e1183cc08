#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcpo/errors.hpp"
#include "wcpo/group.hpp"

namespace wcpo {

/// Formal unit generators. A symbol (g, U, b) stands for the unit u(b) of the
/// base: the one with b(pi) = u(b) * pi, twisted by the group element g. A
/// symbol (g, W, b) is the free unit w(b) contributed by a coboundary seed,
/// likewise twisted. U symbols satisfy u(st) = u(s) * s(u(t)); W symbols are
/// free.
enum class UnitTag : std::uint8_t { u, w };

struct UnitSymbol {
    int twist;
    UnitTag tag;
    int base;

    friend bool operator<(const UnitSymbol& a, const UnitSymbol& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        if (a.twist != b.twist) return a.twist < b.twist;
        return a.base < b.base;
    }
    friend bool operator==(const UnitSymbol& a, const UnitSymbol& b) {
        return a.tag == b.tag && a.twist == b.twist && a.base == b.base;
    }
};

inline UnitSymbol u_symbol(int base, int twist = FiniteGroup::identity) {
    return {twist, UnitTag::u, base};
}
inline UnitSymbol w_symbol(int base, int twist = FiniteGroup::identity) {
    return {twist, UnitTag::w, base};
}

/// A formal product of unit symbols with integer exponents. The unit group is
/// commutative, so a sparse exponent map is a faithful representation; entries
/// with exponent zero are never stored.
struct UnitWord {
    std::map<UnitSymbol, int> exps;

    static UnitWord one() { return {}; }
    bool raw_trivial() const { return exps.empty(); }

    UnitWord& mul_symbol(UnitSymbol s, int k) {
        if (k == 0) return *this;
        auto it = exps.find(s);
        if (it == exps.end()) {
            exps.emplace(s, k);
        } else if ((it->second += k) == 0) {
            exps.erase(it);
        }
        return *this;
    }

    friend bool operator==(const UnitWord& a, const UnitWord& b) { return a.exps == b.exps; }
};

inline UnitWord operator*(const UnitWord& a, const UnitWord& b) {
    UnitWord out(a);
    for (const auto& [s, k] : b.exps) out.mul_symbol(s, k);
    return out;
}

inline UnitWord inverse(const UnitWord& a) {
    UnitWord out;
    for (const auto& [s, k] : a.exps) out.exps.emplace(s, -k);
    return out;
}

inline UnitWord pow(const UnitWord& a, int e) {
    UnitWord out;
    if (e == 0) return out;
    for (const auto& [s, k] : a.exps) out.exps.emplace(s, k * e);
    return out;
}

/// Applies a group element to every symbol: g . (t, X, b) = (g*t, X, b).
inline UnitWord apply_twist(const FiniteGroup& group, int g, const UnitWord& word) {
    UnitWord out;
    for (const auto& [s, k] : word.exps)
        out.mul_symbol({group.mul(g, s.twist), s.tag, s.base}, k);
    return out;
}

inline std::string to_string(const FiniteGroup& group, const UnitWord& word) {
    if (word.exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, k] : word.exps) {
        if (!first) os << "*";
        first = false;
        if (s.twist != FiniteGroup::identity) os << group.elements[s.twist] << ".";
        os << (s.tag == UnitTag::u ? "u(" : "w(") << group.elements[s.base] << ")";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

/// Decides equality of unit words modulo the relations among U symbols.
///
/// The relations are generated by g(u(st)) = g(u(s)) * (gs)(u(t)) together
/// with g(u(1)) = 1. Rewriting with them directly is not confluent once the
/// group is nonabelian, so instead the relation vectors span an integer
/// lattice over the |G|^2 U-coordinates and equality of words is membership
/// of their difference in that lattice. The lattice basis is brought to
/// column-echelon (Hermite) form once per group; reduction against it also
/// yields canonical representatives. W symbols carry no relations and must
/// match exactly.
///
/// When the uniformizer below is fixed by the whole group, every u(s) is 1;
/// the collapse_u flag models that by dropping U symbols entirely.
class UnitLattice {
public:
    explicit UnitLattice(GroupPtr group, bool collapse_u = false)
        : group_(std::move(group)), collapse_u_(collapse_u), dim_(group_->size() * group_->size()) {
        if (!collapse_u_) build();
    }

    const GroupPtr& group() const { return group_; }
    bool collapses_u() const { return collapse_u_; }

    UnitWord normalize(const UnitWord& word) const {
        UnitWord out;
        for (const auto& [s, k] : word.exps)
            if (s.tag == UnitTag::w) out.mul_symbol(s, k);
        if (collapse_u_) return out;
        std::vector<long long> vec(dim_, 0);
        for (const auto& [s, k] : word.exps)
            if (s.tag == UnitTag::u) vec[coord(s)] += k;
        reduce(vec);
        const int n = group_->size();
        for (int c = 0; c < dim_; ++c)
            if (vec[c] != 0)
                out.mul_symbol({c / n, UnitTag::u, c % n}, static_cast<int>(vec[c]));
        return out;
    }

    bool equivalent(const UnitWord& a, const UnitWord& b) const {
        std::map<UnitSymbol, int> wdiff;
        std::vector<long long> vec(dim_, 0);
        auto feed = [&](const UnitWord& w, int sign) {
            for (const auto& [s, k] : w.exps) {
                if (s.tag == UnitTag::w) {
                    auto it = wdiff.find(s);
                    if (it == wdiff.end())
                        wdiff.emplace(s, sign * k);
                    else if ((it->second += sign * k) == 0)
                        wdiff.erase(it);
                } else if (!collapse_u_) {
                    vec[coord(s)] += sign * k;
                }
            }
        };
        feed(a, 1);
        feed(b, -1);
        if (!wdiff.empty()) return false;
        if (collapse_u_) return true;
        reduce(vec);
        for (long long v : vec)
            if (v != 0) return false;
        return true;
    }

private:
    int coord(const UnitSymbol& s) const { return s.twist * group_->size() + s.base; }

    void build() {
        const int n = group_->size();
        std::vector<long long> row(dim_, 0);
        auto insert_current = [&] {
            insert(row);
            std::fill(row.begin(), row.end(), 0);
        };
        for (int g = 0; g < n; ++g) {
            row[g * n + FiniteGroup::identity] += 1;  // g(u(1)) = 1
            insert_current();
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    row[g * n + group_->mul(s, t)] += 1;
                    row[g * n + s] -= 1;
                    row[group_->mul(g, s) * n + t] -= 1;
                    insert_current();
                }
        }
        back_reduce();
    }

    // Integer row-echelon insertion: combine with the existing pivot row via
    // the extended Euclidean step until the new row's support is exhausted.
    void insert(std::vector<long long> row) {
        while (true) {
            int lead = -1;
            for (int c = 0; c < dim_; ++c)
                if (row[c] != 0) {
                    lead = c;
                    break;
                }
            if (lead == -1) return;
            if (row[lead] < 0)
                for (auto& x : row) x = -x;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                pivots_.emplace(lead, std::move(row));
                return;
            }
            std::vector<long long>& p = it->second;
            const long long a = p[lead], b = row[lead];
            auto [g, x, y] = ext_gcd(a, b);
            if (g != a) {
                // replace pivot by x*p + y*row so its leading entry is gcd
                std::vector<long long> np(dim_, 0);
                for (int c = 0; c < dim_; ++c) np[c] = x * p[c] + y * row[c];
                std::vector<long long> nr(dim_, 0);
                for (int c = 0; c < dim_; ++c) nr[c] = (a / g) * row[c] - (b / g) * p[c];
                p = std::move(np);
                row = std::move(nr);
            } else {
                const long long q = b / a;
                for (int c = 0; c < dim_; ++c) row[c] -= q * p[c];
            }
        }
    }

    // Make entries above each pivot canonical (floor-reduced) so reduce()
    // yields unique coset representatives.
    void back_reduce() {
        for (auto& [lead, row] : pivots_) {
            for (auto& [other_lead, other] : pivots_) {
                if (other_lead >= lead) break;
                const long long q = floor_div(other[lead], row[lead]);
                if (q != 0)
                    for (int c = 0; c < dim_; ++c) other[c] -= q * row[c];
            }
        }
    }

    void reduce(std::vector<long long>& vec) const {
        for (const auto& [lead, row] : pivots_) {
            const long long q = floor_div(vec[lead], row[lead]);
            if (q != 0)
                for (int c = lead; c < dim_; ++c) vec[c] -= q * row[c];
        }
    }

    static long long floor_div(long long a, long long b) {
        long long q = a / b, r = a % b;
        return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
    }

    static std::tuple<long long, long long, long long> ext_gcd(long long a, long long b) {
        if (b == 0) return {a, 1, 0};
        auto [g, x, y] = ext_gcd(b, a % b);
        return {g, y, x - (a / b) * y};
    }

    GroupPtr group_;
    bool collapse_u_;
    int dim_;
    std::map<int, std::vector<long long>> pivots_;  // leading column -> row
};

/// Canonical representative of a word modulo the U relations.
inline UnitWord unit_word_normalize(const UnitLattice& lattice, const UnitWord& word) {
    return lattice.normalize(word);
}

}  // namespace wcpo
