#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wcpo/cocycle.hpp"
#include "wcpo/errors.hpp"
#include "wcpo/group.hpp"
#include "wcpo/poset.hpp"
#include "wcpo/subadditive.hpp"

namespace wcpo::io {

using nlohmann::json;

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ---------------------------------------------------------------------------
// Groups: {"name": str, "elements": [str], "table": [[int]]}

inline json group_to_json(const FiniteGroup& g) {
    return json{{"name", g.name}, {"elements", g.elements}, {"table", g.table}};
}

/// Parses the raw table and labels without validating the group axioms;
/// `group verify` uses this to inspect broken tables.
inline std::pair<std::vector<std::string>, std::vector<std::vector<int>>> raw_group_from_json(
    const json& j) {
    try {
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        std::vector<std::string> labels;
        if (j.contains("elements")) {
            labels = j.at("elements").get<std::vector<std::string>>();
        } else {
            for (std::size_t i = 0; i < table.size(); ++i) labels.push_back("g" + std::to_string(i));
        }
        return {std::move(labels), std::move(table)};
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed group object: ") + e.what());
    }
}

inline GroupPtr group_from_json(const json& j) {
    auto [labels, table] = raw_group_from_json(j);
    std::string name = j.value("name", "G");
    return make_group(std::move(name), std::move(labels), std::move(table));
}

/// Resolves a "group" field that is either an inline object or a file path.
inline GroupPtr resolve_group(const json& j) {
    if (j.is_string()) return group_from_json(parse_json(read_file(j.get<std::string>())));
    return group_from_json(j);
}

// ---------------------------------------------------------------------------
// Subadditive functions: {"group": object-or-path, "values": [int]}

inline json subadditive_to_json(const SubadditiveFn& r) {
    return json{{"group", group_to_json(*r.group)}, {"values", r.values}};
}

inline SubadditiveFn subadditive_from_json(const json& j) {
    try {
        GroupPtr g = resolve_group(j.at("group"));
        auto values = j.at("values").get<std::vector<int>>();
        return validate_subadditive(std::move(g), std::move(values));
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed function object: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Unit words and cocycles

inline json unit_word_to_json(const UnitWord& w) {
    json out = json::array();
    for (const auto& [s, k] : w.exps)
        out.push_back(json{{"twist", s.twist},
                           {"tag", s.tag == UnitTag::u ? "U" : "W"},
                           {"base", s.base},
                           {"pow", k}});
    return out;
}

inline UnitWord unit_word_from_json(const json& j) {
    UnitWord w;
    for (const auto& item : j) {
        const std::string tag = item.at("tag").get<std::string>();
        if (tag != "U" && tag != "W") throw input_error("unit symbol tag must be \"U\" or \"W\"");
        w.mul_symbol({item.at("twist").get<int>(), tag == "U" ? UnitTag::u : UnitTag::w,
                      item.at("base").get<int>()},
                     item.at("pow").get<int>());
    }
    return w;
}

inline json monomial_to_json(const ValuedMonomial& m) {
    if (m.is_zero) return json("zero");
    return json{{"exp", m.exp}, {"unit", unit_word_to_json(m.unit)}};
}

inline ValuedMonomial monomial_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "zero") return ValuedMonomial::zero();
        throw input_error("monomial entries are objects or the string \"zero\"");
    }
    ValuedMonomial m;
    m.exp = j.at("exp").get<int>();
    if (j.contains("unit")) m.unit = unit_word_from_json(j.at("unit"));
    return m;
}

inline json cocycle_to_json(const IdempotentCocycle& e) {
    return json{{"group", group_to_json(*e.group)}, {"kind", "idempotent"}, {"entries", e.values}};
}

inline json cocycle_to_json(const ValuedCocycle& f) {
    json entries = json::array();
    for (const auto& row : f.values) {
        json jrow = json::array();
        for (const auto& m : row) jrow.push_back(monomial_to_json(m));
        entries.push_back(std::move(jrow));
    }
    json out{{"group", group_to_json(*f.group)}, {"kind", "valued"}, {"entries", std::move(entries)}};
    if (f.seed) {
        json seed = json::array();
        for (const auto& m : *f.seed) seed.push_back(monomial_to_json(m));
        out["seed"] = std::move(seed);
    }
    return out;
}

using AnyCocycle = std::variant<IdempotentCocycle, ValuedCocycle>;

inline AnyCocycle cocycle_from_json(const json& j) {
    try {
        GroupPtr g = resolve_group(j.at("group"));
        const std::string kind = j.at("kind").get<std::string>();
        const json& entries = j.at("entries");
        const int n = g->size();
        if (static_cast<int>(entries.size()) != n)
            throw input_error("entry matrix size does not match group order");
        if (kind == "idempotent") {
            IdempotentCocycle e{std::move(g), entries.get<std::vector<std::vector<int>>>()};
            return e;
        }
        if (kind != "valued") throw input_error("kind must be \"idempotent\" or \"valued\"");
        ValuedCocycle f;
        f.group = std::move(g);
        f.values.assign(n, {});
        for (int s = 0; s < n; ++s) {
            if (static_cast<int>(entries[s].size()) != n)
                throw input_error("entry matrix row has wrong length");
            for (int t = 0; t < n; ++t) f.values[s].push_back(monomial_from_json(entries[s][t]));
        }
        if (j.contains("seed")) {
            std::vector<ValuedMonomial> seed;
            for (const auto& item : j.at("seed")) seed.push_back(monomial_from_json(item));
            if (static_cast<int>(seed.size()) != n)
                throw input_error("seed length does not match group order");
            f.seed = std::move(seed);
        }
        return f;
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed cocycle object: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Posets: {"group", "subgroup", "cosets", "reps", "leq"}

inline json poset_to_json(const CosetPoset& p) {
    std::vector<std::vector<bool>> leq;
    for (const auto& row : p.leq) leq.emplace_back(row.begin(), row.end());
    return json{{"group", group_to_json(*p.cosets.group)},
                {"subgroup", p.cosets.subgroup.members},
                {"cosets", p.cosets.members},
                {"reps", p.cosets.reps},
                {"leq", leq}};
}

inline CosetPoset poset_from_json(const json& j) {
    try {
        GroupPtr g = resolve_group(j.at("group"));
        Subgroup h = make_subgroup(g, j.at("subgroup").get<std::vector<int>>());
        CosetPoset p;
        p.cosets = left_cosets(g, h);
        auto leq = j.at("leq").get<std::vector<std::vector<bool>>>();
        if (static_cast<int>(leq.size()) != p.cosets.count())
            throw input_error("leq matrix size does not match the coset count");
        for (const auto& row : leq) {
            if (static_cast<int>(row.size()) != p.cosets.count())
                throw input_error("leq matrix row has wrong length");
            p.leq.emplace_back(row.begin(), row.end());
        }
        return p;
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed poset object: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Table display

inline std::string pi_power_string(int k) {
    if (k == 0) return "1";
    if (k == 1) return "π";
    return "π^" + std::to_string(k);
}

/// Column width in display characters; the two-byte pi glyph counts as one.
inline std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

/// Prints an exponent matrix the way the pi-power tables are usually typeset:
/// exponent 0 as "1", exponent 1 as the plain uniformizer, exponent k as a
/// power. raw mode prints the integers instead.
inline std::string format_pi_table(const std::vector<std::string>& labels,
                                   const std::vector<std::vector<int>>& mat, bool raw = false) {
    const std::size_t n = labels.size();
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    cells[0][0] = "(σ,τ)";
    for (std::size_t j = 0; j < n; ++j) cells[0][j + 1] = labels[j];
    for (std::size_t i = 0; i < n; ++i) {
        cells[i + 1][0] = labels[i];
        for (std::size_t j = 0; j < n; ++j)
            cells[i + 1][j + 1] = raw ? std::to_string(mat[i][j]) : pi_power_string(mat[i][j]);
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : cells)
        for (std::size_t j = 0; j <= n; ++j) width[j] = std::max(width[j], display_width(row[j]));
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j) line += "  ";
            line += row[j];
            line.append(width[j] - display_width(row[j]), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += "\n";
    }
    return out;
}

}  // namespace wcpo::io
