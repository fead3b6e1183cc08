#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wcpo/io.hpp"
#include "cli.hpp"

using namespace wcpo;
using io::json;

namespace {

const std::vector<int> kR1{0, 2, 2, 3, 4, 5, 1, 2, 3, 4};
const std::vector<int> kRHat{0, 1, 0, 1, 1, 2, 1, 2};

int run(const std::vector<std::string>& args, const std::string& input, std::string* out_text,
        std::string* err_text = nullptr) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int rc = cli::run_cli(args, in, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

}  // namespace

TEST_CASE("group json round trip") {
    for (auto g : {build_cyclic(10), build_dihedral(8), build_symmetric(3)}) {
        auto back = io::group_from_json(io::group_to_json(*g));
        REQUIRE(structural_equal(*back, *g));
        REQUIRE(back->elements == g->elements);
        REQUIRE(back->name == g->name);
    }
    REQUIRE_THROWS_AS(io::group_from_json(json{{"table", {{0, 1}, {0, 1}}}}), non_group_table);
    auto [labels, table] = io::raw_group_from_json(json{{"table", {{0, 1}, {1, 0}}}});
    REQUIRE(labels == std::vector<std::string>{"g0", "g1"});
}

TEST_CASE("function json round trip and group-by-path") {
    auto r = validate_subadditive(build_cyclic(10), kR1);
    auto back = io::subadditive_from_json(io::subadditive_to_json(r));
    REQUIRE(back == r);

    const auto path = std::filesystem::temp_directory_path() / "wcpo_test_group.json";
    {
        std::ofstream f(path);
        f << io::group_to_json(*r.group).dump();
    }
    json by_path{{"group", path.string()}, {"values", kR1}};
    REQUIRE(io::subadditive_from_json(by_path) == r);
    std::filesystem::remove(path);

    REQUIRE_THROWS_AS(io::subadditive_from_json(json{{"values", kR1}}), input_error);
}

TEST_CASE("cocycle json round trips") {
    auto r8 = validate_subadditive(build_dihedral(8), kRHat);
    auto b = valued_from_r(r8);
    auto any = io::cocycle_from_json(io::cocycle_to_json(b));
    REQUIRE(std::holds_alternative<ValuedCocycle>(any));
    const auto& back = std::get<ValuedCocycle>(any);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) REQUIRE(raw_equal(back(i, j), b(i, j)));
    REQUIRE(back.seed.has_value());
    for (int i = 0; i < 8; ++i) REQUIRE(raw_equal((*back.seed)[i], (*b.seed)[i]));

    auto e = idempotent_from_r(r8);
    auto any_e = io::cocycle_from_json(io::cocycle_to_json(e));
    REQUIRE(std::get<IdempotentCocycle>(any_e) == e);

    ValuedCocycle with_zero = b;
    with_zero.values[3][3] = ValuedMonomial::zero();
    with_zero.seed.reset();
    auto any_z = io::cocycle_from_json(io::cocycle_to_json(with_zero));
    REQUIRE(std::get<ValuedCocycle>(any_z)(3, 3).is_zero);

    json bad = io::cocycle_to_json(b);
    bad["entries"][1][2]["unit"][0]["tag"] = "X";
    REQUIRE_THROWS_AS(io::cocycle_from_json(bad), input_error);
}

TEST_CASE("poset json round trip") {
    auto p = poset_from_r(validate_subadditive(build_dihedral(8), kRHat));
    auto back = io::poset_from_json(io::poset_to_json(p));
    REQUIRE(back == p);
}

TEST_CASE("pi table formatting") {
    REQUIRE(io::pi_power_string(0) == "1");
    REQUIRE(io::pi_power_string(1) == "π");
    REQUIRE(io::pi_power_string(10) == "π^10");

    auto r = validate_subadditive(build_cyclic(2), {0, 1});
    REQUIRE(io::format_pi_table(r.group->elements, pi_power_table(r)) ==
            "(σ,τ)  0  1\n"
            "0      1  1\n"
            "1      1  π^2\n");
    REQUIRE(io::format_pi_table(r.group->elements, pi_power_table(r), true) ==
            "(σ,τ)  0  1\n"
            "0      0  0\n"
            "1      0  2\n");
}

TEST_CASE("cli builds groups and verifies tables") {
    std::string out, err;
    REQUIRE(run({"group", "make", "cyclic", "10"}, "", &out) == 0);
    auto g = io::group_from_json(io::parse_json(out));
    REQUIRE(g->size() == 10);

    REQUIRE(run({"group", "make", "explicit"}, R"({"table": [[0,1],[1,0]]})", &out) == 0);
    REQUIRE(io::group_from_json(io::parse_json(out))->size() == 2);

    REQUIRE(run({"group", "verify"}, R"({"table": [[0,1],[0,1]]})", &out, &err) == 1);
    REQUIRE(err.find("permutation") != std::string::npos);

    REQUIRE(run({"group", "verify"}, R"({"table": [[0,1],[1,0]]})", &out) == 0);
    REQUIRE(out.find("ok") == 0);

    REQUIRE(run({"group", "make", "nonsense", "3"}, "", &out, &err) == 2);
    REQUIRE(run({"group", "make", "explicit"}, "{not json", &out, &err) == 2);
}

TEST_CASE("cli pipeline reproduces the golden construction") {
    std::string group_json, r_json, r1_json, table, expect;
    REQUIRE(run({"group", "make", "cyclic", "10"}, "", &group_json) == 0);
    REQUIRE(run({"r", "from-gens", "--gens", "1,6"}, group_json, &r_json) == 0);
    REQUIRE(io::subadditive_from_json(io::parse_json(r_json)).values ==
            std::vector<int>{0, 1, 2, 3, 4, 5, 1, 2, 3, 4});

    REQUIRE(run({"r", "transform", "--op", "bump", "--at", "1"}, r_json, &r1_json) == 0);
    auto r1 = io::subadditive_from_json(io::parse_json(r1_json));
    REQUIRE(r1.values == kR1);

    REQUIRE(run({"cocycle", "eps-table"}, r1_json, &table) == 0);
    REQUIRE(table == io::format_pi_table(r1.group->elements, pi_power_table(r1)));

    std::string validated;
    REQUIRE(run({"r", "validate"}, r1_json, &validated) == 0);
    REQUIRE(io::parse_json(validated) == io::parse_json(r1_json));

    // every downstream consumer accepts the r file
    std::string er_json, br_json, poset_json, dot;
    REQUIRE(run({"cocycle", "er"}, r1_json, &er_json) == 0);
    REQUIRE(run({"cocycle", "br"}, r1_json, &br_json) == 0);
    REQUIRE(run({"poset", "from-r"}, r1_json, &poset_json) == 0);
    REQUIRE(run({"poset", "dot", "--mode", "coset"}, poset_json, &dot) == 0);
    REQUIRE(dot.find("digraph") == 0);
    REQUIRE(run({"poset", "from-e"}, er_json, &poset_json) == 0);

    std::string verify_out;
    REQUIRE(run({"cocycle", "verify", "--level", "strict"}, br_json, &verify_out) == 0);
    REQUIRE(run({"cocycle", "verify", "--level", "strict", "--unramified"}, br_json, &verify_out) == 0);

    std::string rf_json;
    REQUIRE(run({"cocycle", "rf"}, br_json, &rf_json) == 0);
    REQUIRE(io::subadditive_from_json(io::parse_json(rf_json)).values ==
            std::vector<int>{0, 6, 5, 5, 6, 10, 5, 5, 5, 6});

    std::string hered;
    REQUIRE(run({"cocycle", "hereditary"}, br_json, &hered) == 0);
    REQUIRE(hered == "false\n");

    std::string partner_json;
    REQUIRE(run({"cocycle", "partner", "--r", "half"}, br_json, &partner_json) == 0);
    REQUIRE(run({"cocycle", "hereditary"}, partner_json, &hered) == 0);
    REQUIRE(hered == "true\n");

    std::string dec_json;
    REQUIRE(run({"cocycle", "decompose"}, br_json, &dec_json) == 0);
    auto dec = io::parse_json(dec_json);
    REQUIRE(io::subadditive_from_json(dec.at("r")).values == kR1);

    // pushing down by a subgroup outside the inertial group is refused
    std::string defl_err;
    REQUIRE(run({"cocycle", "deflate", "--normal", "5"}, er_json, &dot, &defl_err) == 1);
    REQUIRE(defl_err.find("inertial") != std::string::npos);
}

TEST_CASE("cli transforms across a quotient") {
    std::string d8_json, q_r_json, rhat_json;
    REQUIRE(run({"group", "make", "dihedral", "8"}, "", &d8_json) == 0);
    const auto path = std::filesystem::temp_directory_path() / "wcpo_test_d8.json";
    {
        std::ofstream f(path);
        f << d8_json;
    }

    auto d8 = io::group_from_json(io::parse_json(d8_json));
    auto q = quotient_group(d8, make_subgroup(d8, {0, 2}));
    json rq{{"group", io::group_to_json(*q.group)}, {"values", {0, 1, 1, 2}}};

    REQUIRE(run({"r", "transform", "--op", "inflate", "--group-file", path.string(), "--normal",
                 "2"},
                rq.dump(), &rhat_json) == 0);
    REQUIRE(io::subadditive_from_json(io::parse_json(rhat_json)).values == kRHat);

    std::string er_json, defl_json, infl_json;
    REQUIRE(run({"cocycle", "er"}, rhat_json, &er_json) == 0);
    REQUIRE(run({"cocycle", "deflate", "--normal", "2"}, er_json, &defl_json) == 0);
    REQUIRE(run({"cocycle", "inflate", "--group-file", path.string(), "--normal", "2"}, defl_json,
                &infl_json) == 0);
    REQUIRE(io::parse_json(infl_json).at("entries") == io::parse_json(er_json).at("entries"));
    std::filesystem::remove(path);
}

TEST_CASE("cli enumeration and property suite") {
    std::string c2_json, out;
    REQUIRE(run({"group", "make", "cyclic", "2"}, "", &c2_json) == 0);

    REQUIRE(run({"r", "enumerate", "--max", "2"}, c2_json, &out) == 0);
    auto listing = io::parse_json(out);
    REQUIRE(listing.at("count").get<int>() == 3);
    REQUIRE(listing.at("functions").size() == 3);

    REQUIRE(run({"check", "all", "--max", "2"}, c2_json, &out) == 0);
    REQUIRE(out.find("PASS C2 cocycle-verification") != std::string::npos);
    REQUIRE(out.find("FAIL") == std::string::npos);

    std::string err;
    REQUIRE(run({"r", "validate"}, R"({"group": {"table": [[0,1],[1,0]]}, "values": [0, 7]})",
                &out) == 0);
    REQUIRE(run({"r", "validate"}, R"({"group": {"table": [[0,1],[1,0]]}, "values": [1, 0]})",
                &out, &err) == 1);
    REQUIRE(run({"bogus"}, "", &out, &err) == 2);
}
