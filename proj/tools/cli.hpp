#pragma once

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wcpo/checks.hpp"
#include "wcpo/cocycle.hpp"
#include "wcpo/group.hpp"
#include "wcpo/io.hpp"
#include "wcpo/poset.hpp"
#include "wcpo/subadditive.hpp"

namespace wcpo::cli {

using io::json;

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return io::read_file(path);
}

inline void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw input_error("cannot open output file: " + path);
    f << text;
}

inline std::vector<int> parse_index_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw input_error("expected a comma-separated list of element indices, got \"" + csv + "\"");
        }
    }
    return out;
}

/// Full command dispatcher. Exit codes: 0 success, 1 failed verification or
/// property (witnesses on the error stream), 2 malformed request.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"computations with subadditive functions on finite groups, their weak 2-cocycles, "
                 "crossed-product-order invariants and coset orders"};
    app.require_subcommand(1);
    int rc = 0;

    std::string in_path = "-", out_path = "-";
    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", in_path, "input file (default: stdin)");
        cmd->add_option("-o,--output", out_path, "output file (default: stdout)");
    };
    auto input_json = [&] { return io::parse_json(read_input(in_path, in)); };
    auto emit = [&](const json& j) { write_output(out_path, out, j.dump(2) + "\n"); };
    auto emit_text = [&](const std::string& t) { write_output(out_path, out, t); };

    // ---- group ----
    auto* group_cmd = app.add_subcommand("group", "build and verify groups");
    group_cmd->require_subcommand(1);
    {
        auto* make = group_cmd->add_subcommand("make", "emit a group as JSON");
        static const std::vector<std::string> kinds{"cyclic", "dihedral", "symmetric", "explicit"};
        std::shared_ptr<std::string> kind = std::make_shared<std::string>();
        auto order = std::make_shared<int>(0);
        make->add_option("kind", *kind, "cyclic | dihedral | symmetric | explicit")
            ->required()
            ->check(CLI::IsMember(kinds));
        make->add_option("order", *order, "group order (degree for symmetric)");
        add_io(make);
        make->callback([&, kind, order] {
            GroupPtr g;
            if (*kind == "cyclic") {
                g = build_cyclic(*order);
            } else if (*kind == "dihedral") {
                g = build_dihedral(*order);
            } else if (*kind == "symmetric") {
                g = build_symmetric(*order);
            } else {
                g = io::group_from_json(input_json());
            }
            emit(io::group_to_json(*g));
        });

        auto* verify = group_cmd->add_subcommand("verify", "report violated group axioms");
        add_io(verify);
        verify->callback([&] {
            auto [labels, table] = io::raw_group_from_json(input_json());
            auto report = verify_group_axioms(table);
            if (report.ok()) {
                emit_text("ok: " + std::to_string(table.size()) + " elements, all group axioms hold\n");
            } else {
                err << report.summary();
                rc = 1;
            }
        });
    }

    // ---- r ----
    auto* r_cmd = app.add_subcommand("r", "subadditive functions and their transforms");
    r_cmd->require_subcommand(1);
    {
        auto* from_gens = r_cmd->add_subcommand("from-gens", "word length over a generating set");
        auto gens = std::make_shared<std::string>();
        from_gens->add_option("--gens", *gens, "comma-separated generator indices")->required();
        add_io(from_gens);
        from_gens->callback([&, gens] {
            GroupPtr g = io::group_from_json(input_json());
            emit(io::subadditive_to_json(word_length_fn(g, parse_index_list(*gens))));
        });

        auto* validate = r_cmd->add_subcommand("validate", "check and normalize a function file");
        add_io(validate);
        validate->callback([&] { emit(io::subadditive_to_json(io::subadditive_from_json(input_json()))); });

        auto* transform = r_cmd->add_subcommand("transform", "bump | halve | evenize | inflate");
        auto op = std::make_shared<std::string>();
        auto at = std::make_shared<int>(-1);
        auto group_file = std::make_shared<std::string>();
        auto normal = std::make_shared<std::string>();
        transform->add_option("--op", *op, "transform to apply")
            ->required()
            ->check(CLI::IsMember(std::vector<std::string>{"bump", "halve", "evenize", "inflate"}));
        transform->add_option("--at", *at, "element index to bump at");
        transform->add_option("--group-file", *group_file, "base group for inflate");
        transform->add_option("--normal", *normal, "generators of the normal subgroup for inflate");
        add_io(transform);
        transform->callback([&, op, at, group_file, normal] {
            SubadditiveFn r = io::subadditive_from_json(input_json());
            SubadditiveFn result = r;
            if (*op == "bump") {
                if (*at < 0) throw input_error("--op bump needs --at <element index>");
                result = bump(r, *at);
            } else if (*op == "halve") {
                result = halve(r);
            } else if (*op == "evenize") {
                result = evenize(r);
            } else {
                if (group_file->empty()) throw input_error("--op inflate needs --group-file");
                GroupPtr g = io::group_from_json(io::parse_json(io::read_file(*group_file)));
                Subgroup n = generated_subgroup(g, parse_index_list(*normal));
                result = inflate(g, n, r);
            }
            emit(io::subadditive_to_json(result));
        });

        auto* enumerate = r_cmd->add_subcommand("enumerate", "all functions with bounded values");
        auto maxval = std::make_shared<int>(0);
        enumerate->add_option("--max", *maxval, "largest value allowed")->required();
        add_io(enumerate);
        enumerate->callback([&, maxval] {
            GroupPtr g = io::group_from_json(input_json());
            auto rs = enumerate_subadditive(g, *maxval);
            json fns = json::array();
            for (const auto& r : rs) fns.push_back(r.values);
            emit(json{{"group", io::group_to_json(*g)},
                      {"maxval", *maxval},
                      {"count", rs.size()},
                      {"functions", fns}});
        });
    }

    // ---- cocycle ----
    auto* coc_cmd = app.add_subcommand("cocycle", "idempotent and valued weak 2-cocycles");
    coc_cmd->require_subcommand(1);
    {
        auto* er = coc_cmd->add_subcommand("er", "idempotent cocycle of a function");
        add_io(er);
        er->callback([&] {
            emit(io::cocycle_to_json(idempotent_from_r(io::subadditive_from_json(input_json()))));
        });

        auto* br = coc_cmd->add_subcommand("br", "canonical valued cocycle of a function");
        add_io(br);
        br->callback([&] {
            emit(io::cocycle_to_json(valued_from_r(io::subadditive_from_json(input_json()))));
        });

        auto* eps = coc_cmd->add_subcommand("eps-table", "print the pi-power table of a function");
        auto raw = std::make_shared<bool>(false);
        eps->add_flag("--raw", *raw, "print plain exponents");
        add_io(eps);
        eps->callback([&, raw] {
            SubadditiveFn r = io::subadditive_from_json(input_json());
            emit_text(io::format_pi_table(r.group->elements, pi_power_table(r), *raw));
        });

        auto* verify = coc_cmd->add_subcommand("verify", "check the cocycle conditions");
        auto level = std::make_shared<std::string>("valuation");
        auto unram = std::make_shared<bool>(false);
        verify->add_option("--level", *level, "valuation | strict")
            ->check(CLI::IsMember(std::vector<std::string>{"valuation", "strict"}));
        verify->add_flag("--unramified", *unram, "collapse the uniformizer units to 1");
        add_io(verify);
        verify->callback([&, level, unram] {
            auto any = io::cocycle_from_json(input_json());
            CocycleReport report;
            if (std::holds_alternative<IdempotentCocycle>(any)) {
                report = verify_cocycle(std::get<IdempotentCocycle>(any));
            } else {
                const auto& f = std::get<ValuedCocycle>(any);
                UnitLattice lattice(f.group, *unram);
                report = verify_cocycle(
                    f, *level == "strict" ? VerifyLevel::strict : VerifyLevel::valuation, &lattice);
            }
            if (report.ok()) {
                emit_text("ok: cocycle conditions hold\n");
            } else {
                err << report.summary();
                rc = 1;
            }
        });

        auto* dec = coc_cmd->add_subcommand("decompose", "split into unit coboundary and canonical part");
        auto unram2 = std::make_shared<bool>(false);
        dec->add_flag("--unramified", *unram2, "collapse the uniformizer units to 1");
        add_io(dec);
        dec->callback([&, unram2] {
            auto any = io::cocycle_from_json(input_json());
            if (!std::holds_alternative<ValuedCocycle>(any))
                throw input_error("decompose expects a valued cocycle");
            const auto& f = std::get<ValuedCocycle>(any);
            UnitLattice lattice(f.group, *unram2);
            auto d = decompose(f, &lattice);
            emit(json{{"unit_part", io::cocycle_to_json(d.unit_part)},
                      {"r", io::subadditive_to_json(d.r)}});
        });

        auto* hered = coc_cmd->add_subcommand("hereditary", "anti-diagonal valuation test");
        add_io(hered);
        hered->callback([&] {
            auto any = io::cocycle_from_json(input_json());
            if (!std::holds_alternative<ValuedCocycle>(any))
                throw input_error("hereditary expects a valued cocycle");
            emit_text(hereditary_criterion(std::get<ValuedCocycle>(any)) ? "true\n" : "false\n");
        });

        auto* rf = coc_cmd->add_subcommand("rf", "anti-diagonal valuation profile");
        add_io(rf);
        rf->callback([&] {
            auto any = io::cocycle_from_json(input_json());
            if (!std::holds_alternative<ValuedCocycle>(any))
                throw input_error("rf expects a valued cocycle");
            emit(io::subadditive_to_json(r_from_cocycle(std::get<ValuedCocycle>(any))));
        });

        auto* partner = coc_cmd->add_subcommand("partner", "cocycle h with f*h canonical");
        auto which = std::make_shared<std::string>();
        partner->add_option("--r", *which, "rf | half: use the valuation profile or its halved form")
            ->required()
            ->check(CLI::IsMember(std::vector<std::string>{"rf", "half"}));
        add_io(partner);
        partner->callback([&, which] {
            auto any = io::cocycle_from_json(input_json());
            if (!std::holds_alternative<ValuedCocycle>(any))
                throw input_error("partner expects a valued cocycle");
            const auto& f = std::get<ValuedCocycle>(any);
            SubadditiveFn r = r_from_cocycle(f);
            if (*which == "half") r = halve(r);
            emit(io::cocycle_to_json(partner_cocycle(f, r)));
        });

        auto* infl = coc_cmd->add_subcommand("inflate", "lift an idempotent cocycle from a quotient");
        auto group_file = std::make_shared<std::string>();
        auto normal = std::make_shared<std::string>();
        infl->add_option("--group-file", *group_file, "base group")->required();
        infl->add_option("--normal", *normal, "generators of the normal subgroup");
        add_io(infl);
        infl->callback([&, group_file, normal] {
            auto any = io::cocycle_from_json(input_json());
            if (!std::holds_alternative<IdempotentCocycle>(any))
                throw input_error("inflate expects an idempotent cocycle");
            GroupPtr g = io::group_from_json(io::parse_json(io::read_file(*group_file)));
            Subgroup n = generated_subgroup(g, parse_index_list(*normal));
            emit(io::cocycle_to_json(inflate(g, n, std::get<IdempotentCocycle>(any))));
        });

        auto* defl = coc_cmd->add_subcommand("deflate", "push an idempotent cocycle to a quotient");
        auto normal2 = std::make_shared<std::string>();
        defl->add_option("--normal", *normal2, "generators of the normal subgroup")->required();
        add_io(defl);
        defl->callback([&, normal2] {
            auto any = io::cocycle_from_json(input_json());
            if (!std::holds_alternative<IdempotentCocycle>(any))
                throw input_error("deflate expects an idempotent cocycle");
            const auto& e = std::get<IdempotentCocycle>(any);
            Subgroup n = generated_subgroup(e.group, parse_index_list(*normal2));
            emit(io::cocycle_to_json(deflate(e, n)));
        });
    }

    // ---- poset ----
    auto* poset_cmd = app.add_subcommand("poset", "coset orders and their diagrams");
    poset_cmd->require_subcommand(1);
    {
        auto* from_r = poset_cmd->add_subcommand("from-r", "order induced by a function");
        add_io(from_r);
        from_r->callback(
            [&] { emit(io::poset_to_json(poset_from_r(io::subadditive_from_json(input_json())))); });

        auto* from_e = poset_cmd->add_subcommand("from-e", "order induced by an idempotent cocycle");
        add_io(from_e);
        from_e->callback([&] {
            auto any = io::cocycle_from_json(input_json());
            if (!std::holds_alternative<IdempotentCocycle>(any))
                throw input_error("from-e expects an idempotent cocycle");
            emit(io::poset_to_json(poset_from_idempotent(std::get<IdempotentCocycle>(any))));
        });

        auto* dot = poset_cmd->add_subcommand("dot", "render the cover diagram as DOT");
        auto mode = std::make_shared<std::string>("coset");
        dot->add_option("--mode", *mode, "coset | expanded")
            ->check(CLI::IsMember(std::vector<std::string>{"coset", "expanded"}));
        add_io(dot);
        dot->callback([&, mode] {
            CosetPoset p = io::poset_from_json(input_json());
            emit_text(to_dot(hasse(p),
                             *mode == "expanded" ? DotMode::element_expanded : DotMode::coset));
        });
    }

    // ---- check ----
    auto* check_cmd = app.add_subcommand("check", "property suites");
    check_cmd->require_subcommand(1);
    {
        auto* all = check_cmd->add_subcommand("all", "run the full property suite for one group");
        auto maxval = std::make_shared<int>(3);
        auto seed = std::make_shared<unsigned>(7u);
        auto pair_cap = std::make_shared<std::size_t>(200);
        all->add_option("--max", *maxval, "largest function value enumerated (default 3)");
        all->add_option("--seed", *seed, "seed for sampled pairwise laws");
        all->add_option("--pair-cap", *pair_cap, "sampled pair count for large runs");
        add_io(all);
        all->callback([&, maxval, seed, pair_cap] {
            GroupPtr g = io::group_from_json(input_json());
            CheckOptions opts;
            opts.maxval = *maxval;
            opts.seed = *seed;
            opts.pair_cap = *pair_cap;
            auto items = run_group_suite(g, opts);
            std::ostringstream os;
            bool all_ok = true;
            for (const auto& item : items) {
                os << (item.passed ? "PASS " : "FAIL ") << g->name << " " << item.name << "\n";
                if (!item.passed) {
                    all_ok = false;
                    err << g->name << " " << item.name << ": " << item.detail << "\n";
                }
            }
            emit_text(os.str());
            if (!all_ok) rc = 1;
        });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("wcpo");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const check_error& e) {
        err << "failed: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "failed: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace wcpo::cli
