#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "wcpo/subadditive.hpp"

using namespace wcpo;

namespace {

const std::vector<int> kR1{0, 2, 2, 3, 4, 5, 1, 2, 3, 4};       // over Z/10Z
const std::vector<int> kRHat{0, 1, 0, 1, 1, 2, 1, 2};           // over D8

SubadditiveFn r1() { return validate_subadditive(build_cyclic(10), kR1); }
SubadditiveFn rhat() { return validate_subadditive(build_dihedral(8), kRHat); }

}  // namespace

TEST_CASE("validation accepts and rejects correctly") {
    REQUIRE(r1().values == kR1);
    auto c3 = build_cyclic(3);
    REQUIRE(validate_subadditive(c3, {0, 0, 0}).values == std::vector<int>{0, 0, 0});

    auto z10 = build_cyclic(10);
    const std::vector<int> bad{0, 1, 3, 4, 5, 6, 7, 8, 9, 10};
    auto oracle = subadditivity_witnesses(*z10, bad);
    REQUIRE(std::count(oracle.begin(), oracle.end(), std::pair<int, int>{1, 1}) == 1);
    try {
        validate_subadditive(z10, bad);
        FAIL("expected not_subadditive");
    } catch (const not_subadditive& e) {
        REQUIRE(e.witnesses == oracle);
    }

    REQUIRE_THROWS_AS(validate_subadditive(c3, {0, -1, 0}), negative_value);
    REQUIRE_THROWS_AS(validate_subadditive(c3, {1, 0, 0}), nonzero_at_identity);
    REQUIRE_THROWS_AS(validate_subadditive(c3, {0, 0}), input_error);
}

TEST_CASE("zero subgroup") {
    REQUIRE(zero_subgroup(rhat()).members == std::vector<int>{0, 2});
    REQUIRE(zero_subgroup(r1()).members == std::vector<int>{0});
    auto d8 = build_dihedral(8);
    REQUIRE(zero_subgroup(validate_subadditive(d8, std::vector<int>(8, 0))).size() == 8);
}

TEST_CASE("pointwise sum") {
    auto r = r1();
    auto zero = validate_subadditive(r.group, std::vector<int>(10, 0));
    REQUIRE(add(r, zero) == r);
    REQUIRE(add(r, r).values == std::vector<int>{0, 4, 4, 6, 8, 10, 2, 4, 6, 8});
    REQUIRE(add(rhat(), halve(rhat())).values == std::vector<int>{0, 2, 0, 2, 2, 3, 2, 3});
    REQUIRE_THROWS_AS(add(r, rhat()), group_mismatch);
}

TEST_CASE("defect tables") {
    auto d = defect_table(r1());
    REQUIRE(d.d[1][1] == 2);
    REQUIRE(d.d[5][5] == 10);
    for (int j = 0; j < 10; ++j) {
        REQUIRE(d.d[0][j] == 0);
        REQUIRE(d.d[j][0] == 0);
    }
    // telescoping identity of the defect
    for (const auto& r : {r1(), rhat()}) {
        const auto& g = *r.group;
        auto t = defect_table(r);
        for (int s = 0; s < g.size(); ++s)
            for (int u = 0; u < g.size(); ++u)
                for (int v = 0; v < g.size(); ++v)
                    REQUIRE(t.d[s][u] + t.d[g.mul(s, u)][v] == t.d[u][v] + t.d[s][g.mul(u, v)]);
    }
}

TEST_CASE("word length functions") {
    auto z10 = build_cyclic(10);
    REQUIRE(word_length_fn(z10, {1, 6}).values == std::vector<int>{0, 1, 2, 3, 4, 5, 1, 2, 3, 4});

    auto d8 = build_dihedral(8);
    auto q = quotient_group(d8, make_subgroup(d8, {0, 2}));
    REQUIRE(word_length_fn(q.group, {1, 2}).values == std::vector<int>{0, 1, 1, 2});

    REQUIRE(word_length_fn(build_cyclic(2), {1}).values == std::vector<int>{0, 1});
    REQUIRE_THROWS_AS(word_length_fn(z10, {2}), not_generating);
}

TEST_CASE("bump candidates match the factorization search") {
    auto z10 = build_cyclic(10);
    auto r = word_length_fn(z10, {1, 6});
    // oracle: exhaustive search for defect-zero factorizations into positive parts
    auto oracle = [](const SubadditiveFn& f) {
        const auto& g = *f.group;
        std::vector<int> out;
        for (int s = 0; s < g.size(); ++s) {
            if (f(s) == 0) continue;
            bool splits = false;
            for (int x = 0; x < g.size(); ++x)
                for (int y = 0; y < g.size(); ++y)
                    if (g.mul(x, y) == s && f(x) > 0 && f(y) > 0 && f(s) == f(x) + f(y)) splits = true;
            if (!splits) out.push_back(s);
        }
        return out;
    };
    REQUIRE(bump_candidates(r) == oracle(r));
    REQUIRE(bump_candidates(r) == std::vector<int>{1, 6});

    REQUIRE(bump_candidates(rhat()) == oracle(rhat()));
    REQUIRE(bump_candidates(rhat()) == std::vector<int>{1, 3, 4, 6});

    auto zero = validate_subadditive(z10, std::vector<int>(10, 0));
    REQUIRE(bump_candidates(zero).empty());
}

TEST_CASE("bump") {
    auto z10 = build_cyclic(10);
    auto r = word_length_fn(z10, {1, 6});
    REQUIRE(bump(r, 1).values == kR1);
    REQUIRE_THROWS_AS(bump(r, 2), not_bumpable);
    REQUIRE(bump(rhat(), 1).values == std::vector<int>{0, 2, 0, 2, 1, 2, 1, 2});
}

TEST_CASE("halve and evenize") {
    REQUIRE(halve(r1()).values == std::vector<int>{0, 1, 1, 2, 2, 3, 1, 1, 2, 2});
    REQUIRE(evenize(r1()).values == std::vector<int>{0, 2, 2, 4, 4, 6, 2, 2, 4, 4});
    REQUIRE(halve(rhat()).values == std::vector<int>{0, 1, 0, 1, 1, 1, 1, 1});
    auto zero = validate_subadditive(build_cyclic(4), {0, 0, 0, 0});
    REQUIRE(halve(zero) == zero);
    REQUIRE(evenize(zero) == zero);
    for (const auto& r : enumerate_subadditive(build_dihedral(8), 2))
        REQUIRE(evenize(r) == add(halve(r), halve(r)));
}

TEST_CASE("inflation of functions") {
    auto d8 = build_dihedral(8);
    auto n = make_subgroup(d8, {0, 2});
    auto q = quotient_group(d8, n);
    auto rq = validate_subadditive(q.group, {0, 1, 1, 2});
    REQUIRE(inflate(d8, n, rq).values == kRHat);

    auto trivial = make_subgroup(d8, {0});
    auto self = quotient_group(d8, trivial);
    auto r_on_self = validate_subadditive(self.group, kRHat);
    REQUIRE(inflate(d8, trivial, r_on_self).values == kRHat);

    auto zero_q = validate_subadditive(q.group, {0, 0, 0, 0});
    auto lifted = inflate(d8, n, zero_q);
    REQUIRE(zero_subgroup(lifted).size() == 8);

    REQUIRE_THROWS_AS(inflate(d8, n, validate_subadditive(build_cyclic(3), {0, 1, 1})),
                      group_mismatch);
}

TEST_CASE("enumeration agrees with a brute-force oracle") {
    // oracle: plain odometer plus an inline subadditivity check
    auto oracle = [](const GroupPtr& g, int maxval) {
        std::vector<std::vector<int>> out;
        const int n = g->size();
        std::vector<int> v(n, 0);
        while (true) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    if (v[g->mul(i, j)] > v[i] + v[j]) ok = false;
            if (ok) out.push_back(v);
            int pos = n - 1;
            while (pos >= 1 && v[pos] == maxval) v[pos--] = 0;
            if (pos < 1) break;
            ++v[pos];
        }
        return out;
    };

    auto c2 = build_cyclic(2);
    auto got = enumerate_subadditive(c2, 2);
    REQUIRE(got.size() == 3);
    REQUIRE(got[0].values == std::vector<int>{0, 0});
    REQUIRE(got[1].values == std::vector<int>{0, 1});
    REQUIRE(got[2].values == std::vector<int>{0, 2});

    auto c3 = build_cyclic(3);
    auto got3 = enumerate_subadditive(c3, 1);
    REQUIRE(got3.size() == 2);
    REQUIRE(got3[0].values == std::vector<int>{0, 0, 0});
    REQUIRE(got3[1].values == std::vector<int>{0, 1, 1});

    auto c4 = build_cyclic(4);
    auto expect = oracle(c4, 2);
    auto have = enumerate_subadditive(c4, 2);
    REQUIRE(have.size() == expect.size());
    for (std::size_t i = 0; i < have.size(); ++i) REQUIRE(have[i].values == expect[i]);
    REQUIRE(std::is_sorted(expect.begin(), expect.end()));

    REQUIRE(enumerate_subadditive(build_dihedral(8), 0).size() == 1);
    REQUIRE_THROWS_AS(enumerate_subadditive(build_cyclic(16), 3), too_large);
}

TEST_CASE("transforms preserve the zero subgroup across a family") {
    for (const auto& r : enumerate_subadditive(build_symmetric(3), 2)) {
        const auto m = zero_subgroup(r).members;
        REQUIRE(zero_subgroup(halve(r)).members == m);
        REQUIRE(zero_subgroup(evenize(r)).members == m);
        for (int a : bump_candidates(r)) REQUIRE(zero_subgroup(bump(r, a)).members == m);
    }
}
