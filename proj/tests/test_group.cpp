#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "wcpo/group.hpp"

using namespace wcpo;

TEST_CASE("cyclic preset is addition mod n") {
    auto g = build_cyclic(10);
    REQUIRE(g->size() == 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) REQUIRE(g->mul(i, j) == (i + j) % 10);
    REQUIRE(g->inv(3) == 7);
    REQUIRE(g->elements[7] == "7");
}

TEST_CASE("explicit table of order two") {
    auto g = make_group("C2", {"e", "g"}, {{0, 1}, {1, 0}});
    REQUIRE(g->mul(1, 1) == 0);
    REQUIRE(g->inv(1) == 1);
}

TEST_CASE("dihedral preset satisfies its defining relations") {
    auto g = build_dihedral(8);
    const int a = 1, s = 4;
    // a^4 = 1, s^2 = 1
    REQUIRE(g->mul(g->mul(g->mul(a, a), a), a) == 0);
    REQUIRE(g->mul(s, s) == 0);
    // s a s^-1 = a^-1 = a^3
    REQUIRE(g->mul(g->mul(s, a), g->inv(s)) == 3);
    REQUIRE(g->elements == std::vector<std::string>{"1", "a", "a2", "a3", "s", "as", "a2s", "a3s"});
    REQUIRE(verify_group_axioms(g->table).ok());
}

TEST_CASE("symmetric preset composes permutations") {
    auto g = build_symmetric(3);
    REQUIRE(g->size() == 6);
    REQUIRE(g->elements[0] == "012");
    REQUIRE(verify_group_axioms(g->table).ok());
    // (021) o (102) sends 0 -> 2, 1 -> 0, 2 -> 1
    const int i = 1, j = 2;  // "021", "102"
    REQUIRE(g->elements[g->mul(i, j)] == "201");
    REQUIRE_THROWS_AS(build_symmetric(5), unsupported_spec);
}

TEST_CASE("axiom report flags broken tables") {
    REQUIRE(verify_group_axioms({{0, 1}, {1, 0}}).ok());

    auto rep = verify_group_axioms({{0, 1}, {0, 1}});
    REQUIRE_FALSE(rep.ok());
    bool row_violation = false;
    for (const auto& v : rep.violations)
        if (v.axiom == GroupAxiomReport::Axiom::row_permutation) row_violation = true;
    REQUIRE(row_violation);

    // Latin-square defect and associativity defect are reported independently.
    const std::vector<std::vector<int>> t{{0, 1, 2}, {1, 0, 2}, {2, 2, 1}};
    std::set<std::tuple<int, int, int>> assoc_oracle;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) assoc_oracle.insert({i, j, k});
    REQUIRE(assoc_oracle.count({1, 2, 2}) == 1);

    rep = verify_group_axioms(t);
    std::set<std::tuple<int, int, int>> assoc_reported;
    bool latin_reported = false;
    for (const auto& v : rep.violations) {
        if (v.axiom == GroupAxiomReport::Axiom::associativity) assoc_reported.insert({v.i, v.j, v.k});
        if (v.axiom == GroupAxiomReport::Axiom::row_permutation ||
            v.axiom == GroupAxiomReport::Axiom::column_permutation)
            latin_reported = true;
    }
    REQUIRE(assoc_reported == assoc_oracle);
    REQUIRE(latin_reported);

    REQUIRE_THROWS_AS(make_group("bad", {"e", "g"}, {{0, 1}, {0, 1}}), non_group_table);
}

TEST_CASE("generated subgroups") {
    auto d8 = build_dihedral(8);
    REQUIRE(generated_subgroup(d8, {2}).members == std::vector<int>{0, 2});
    REQUIRE(generated_subgroup(d8, {}).members == std::vector<int>{0});

    // closure by repeated addition
    auto z10 = build_cyclic(10);
    std::set<int> oracle{0};
    int x = 2;
    while (!oracle.count(x)) {
        oracle.insert(x);
        x = (x + 2) % 10;
    }
    REQUIRE(generated_subgroup(z10, {2}).members == std::vector<int>(oracle.begin(), oracle.end()));

    REQUIRE_THROWS_AS(make_subgroup(d8, {0, 1}), not_a_subgroup);
    REQUIRE_THROWS_AS(make_subgroup(d8, {2}), not_a_subgroup);
}

TEST_CASE("normality") {
    auto d8 = build_dihedral(8);
    REQUIRE(is_normal(make_subgroup(d8, {0, 2})));
    REQUIRE_FALSE(is_normal(make_subgroup(d8, {0, 4})));  // a s a^-1 = a2s
    REQUIRE(is_normal(make_subgroup(d8, {0})));
}

TEST_CASE("left cosets") {
    auto d8 = build_dihedral(8);
    auto h = make_subgroup(d8, {0, 2});
    auto cs = left_cosets(d8, h);
    REQUIRE(cs.reps == std::vector<int>{0, 1, 4, 5});
    REQUIRE(cs.members[0] == h.members);
    REQUIRE(cs.count() * h.size() == d8->size());
    for (int g = 0; g < d8->size(); ++g)
        for (int m : h.members) REQUIRE(cs.coset_of[d8->mul(g, m)] == cs.coset_of[g]);

    REQUIRE(left_cosets(d8, generated_subgroup(d8, {1, 4})).count() == 1);

    auto z10 = build_cyclic(10);
    auto cs10 = left_cosets(z10, make_subgroup(z10, {0, 5}));
    REQUIRE(cs10.reps == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("double cosets") {
    auto z10 = build_cyclic(10);
    REQUIRE(double_coset(z10, make_subgroup(z10, {0}), 1) == std::vector<int>{1});

    auto d8 = build_dihedral(8);
    auto h = make_subgroup(d8, {0, 2});
    REQUIRE(double_coset(d8, h, 1) == std::vector<int>{1, 3});
    REQUIRE(double_coset(d8, h, 2) == h.members);

    for (const auto& sub : enumerate_subgroups(d8))
        for (int a = 0; a < d8->size(); ++a) {
            const int size = static_cast<int>(double_coset(d8, sub, a).size());
            REQUIRE(sub.size() * sub.size() % size == 0);
        }
}

TEST_CASE("quotients") {
    auto d8 = build_dihedral(8);
    auto n = make_subgroup(d8, {0, 2});
    auto q = quotient_group(d8, n);
    REQUIRE(q.group->size() == 4);
    for (int c = 0; c < 4; ++c) REQUIRE(q.group->mul(c, c) == 0);  // Klein four
    // projection is a homomorphism with kernel N
    for (int x = 0; x < d8->size(); ++x)
        for (int y = 0; y < d8->size(); ++y)
            REQUIRE(q.projection[d8->mul(x, y)] == q.group->mul(q.projection[x], q.projection[y]));
    for (int x = 0; x < d8->size(); ++x)
        REQUIRE((q.projection[x] == 0) == n.contains(x));

    REQUIRE(structural_equal(*quotient_group(d8, make_subgroup(d8, {0})).group, *d8));

    auto z10 = build_cyclic(10);
    REQUIRE(structural_equal(*quotient_group(z10, make_subgroup(z10, {0, 5})).group,
                             *build_cyclic(5)));

    REQUIRE_THROWS_AS(quotient_group(d8, make_subgroup(d8, {0, 4})), not_normal);
}

TEST_CASE("canonical factorization") {
    auto z10 = build_cyclic(10);
    auto t = canonical_factorization(z10, {1, 6});
    REQUIRE(t.dist == std::vector<int>{0, 1, 2, 3, 4, 5, 1, 2, 3, 4});
    for (int g = 1; g < 10; ++g) {
        // parent chain shrinks the distance by one each step
        int steps = 0, w = g;
        while (w != 0) {
            auto [s, prev] = t.parent[w];
            REQUIRE(z10->mul(s, prev) == w);
            REQUIRE(t.dist[prev] == t.dist[w] - 1);
            w = prev;
            ++steps;
        }
        REQUIRE(steps == t.dist[g]);
        // the word multiplies back to the element
        int prod = 0;
        auto word = t.word(g);
        for (auto it = word.rbegin(); it != word.rend(); ++it) prod = z10->mul(*it, prod);
        REQUIRE(prod == g);
    }

    auto c2 = build_cyclic(2);
    REQUIRE(canonical_factorization(c2, {1}).dist == std::vector<int>{0, 1});

    try {
        canonical_factorization(z10, {2});
        FAIL("expected not_generating");
    } catch (const not_generating& e) {
        REQUIRE(e.unreached == std::vector<int>{1, 3, 5, 7, 9});
    }

    // shortest word length is subadditive
    auto d8 = build_dihedral(8);
    for (auto [g, gens] : {std::pair{z10, std::vector<int>{1, 6}}, {d8, {1, 4}}}) {
        auto tree = canonical_factorization(g, gens);
        for (int x = 0; x < g->size(); ++x)
            for (int y = 0; y < g->size(); ++y)
                REQUIRE(tree.dist[g->mul(x, y)] <= tree.dist[x] + tree.dist[y]);
    }
}

TEST_CASE("subgroup viewed as a group") {
    auto d8 = build_dihedral(8);
    auto [rot, members] = subgroup_as_group(generated_subgroup(d8, {1}));
    REQUIRE(structural_equal(*rot, *build_cyclic(4)));
    REQUIRE(members == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("subgroup enumeration covers the known lattice") {
    auto d8 = build_dihedral(8);
    auto subs = enumerate_subgroups(d8);
    REQUIRE(subs.size() == 10);
    int normal = 0;
    for (const auto& h : subs)
        if (is_normal(h)) ++normal;
    REQUIRE(normal == 6);
}

TEST_CASE("size cap") {
    REQUIRE_THROWS_AS(build_cyclic(65), too_large);
}
