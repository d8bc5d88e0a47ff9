// One self-describing file format for every structure: a JSON document
// with an "n", a "kind" tag (rack | solution | ops | brace | permutation)
// and the tables as arrays of arrays. Emission is canonical, so
// parse . emit is the identity.

#pragma once

#include <fstream>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "braces.hpp"
#include "solution.hpp"

namespace birack {

struct rack_file {
    op_table tri;  // not necessarily a rack; predicates classify it
};

using parsed_file = std::variant<rack_file, solution, ops_triple, brace_tables, permutation>;

namespace detail {

inline int line_of_offset(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline op_table table_field(const nlohmann::json& j, const char* field, int n) {
    if (!j.contains(field))
        throw validation_error(std::string("missing field \"") + field + "\"");
    const auto& arr = j.at(field);
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
        throw validation_error(std::string("field \"") + field + "\" must be an n x n array");
    std::vector<std::vector<int>> rows;
    for (const auto& row : arr) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw validation_error(std::string("field \"") + field + "\" must be an n x n array");
        rows.push_back(row.get<std::vector<int>>());
    }
    try {
        return op_table::from_rows(rows);
    } catch (const validation_error& e) {
        throw validation_error(std::string("field \"") + field + "\": " + e.what());
    }
}

inline nlohmann::json table_json(const op_table& T) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : T.rows()) rows.push_back(row);
    return rows;
}

// scalar arrays inline, arrays of rows one row per line
inline void print_value(std::string& out, const nlohmann::json& v, int indent) {
    if (!v.is_array()) {
        out += v.dump();
        return;
    }
    const bool nested = !v.empty() && v.front().is_array();
    if (!nested) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += v[i].dump();
        }
        out += "]";
        return;
    }
    const std::string pad(indent + 2, ' ');
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += pad;
        print_value(out, v[i], indent + 2);
        if (i + 1 < v.size()) out += ",";
        out += "\n";
    }
    out += std::string(indent, ' ') + "]";
}

}  // namespace detail

inline parsed_file parse_string(const std::string& text, const std::string& name = "<memory>") {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(name + ":" + std::to_string(detail::line_of_offset(text, e.byte)) + ": " +
                          e.what());
    }
    try {
        if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
            throw validation_error("document must be an object with a \"kind\" tag");
        const std::string kind = j.at("kind").get<std::string>();

        if (kind == "permutation") {
            if (!j.contains("image") || !j.at("image").is_array())
                throw validation_error("permutation needs an \"image\" array");
            return permutation(j.at("image").get<std::vector<int>>());
        }

        if (!j.contains("n") || !j.at("n").is_number_integer())
            throw validation_error("document needs an integer \"n\"");
        const int n = j.at("n").get<int>();
        if (n < 1) throw validation_error("\"n\" must be >= 1");

        if (kind == "rack") return rack_file{detail::table_field(j, "tri", n)};
        if (kind == "solution")
            return solution(detail::table_field(j, "G", n), detail::table_field(j, "F", n));
        if (kind == "ops") {
            op_table star = detail::table_field(j, "star", n);
            op_table dot = detail::table_field(j, "dot", n);
            op_table tri = detail::table_field(j, "tri", n);
            try {
                return ops_triple::from_tables(std::move(star), std::move(dot), std::move(tri));
            } catch (const not_row_bijective&) {
                throw validation_error("ops: \"star\" rows must be bijections");
            }
        }
        if (kind == "brace") {
            if (!j.contains("zero") || !j.at("zero").is_number_integer())
                throw validation_error("brace needs an integer \"zero\"");
            const int zero = j.at("zero").get<int>();
            if (zero < 0 || zero >= n) throw validation_error("brace \"zero\" out of range");
            return brace_tables{detail::table_field(j, "add", n), detail::table_field(j, "circ", n),
                                zero};
        }
        throw validation_error("unknown kind \"" + kind + "\"");
    } catch (const validation_error& e) {
        throw validation_error(name + ": " + e.what());
    }
}

inline parsed_file parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

inline std::string emit_string(const parsed_file& obj) {
    nlohmann::json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, rack_file>) {
                j["kind"] = "rack";
                j["n"] = v.tri.n;
                j["tri"] = detail::table_json(v.tri);
            } else if constexpr (std::is_same_v<T, solution>) {
                j["kind"] = "solution";
                j["n"] = v.n();
                j["G"] = detail::table_json(v.G);
                j["F"] = detail::table_json(v.F);
            } else if constexpr (std::is_same_v<T, ops_triple>) {
                j["kind"] = "ops";
                j["n"] = v.n();
                j["star"] = detail::table_json(v.star);
                j["dot"] = detail::table_json(v.dot);
                j["tri"] = detail::table_json(v.tri);
            } else if constexpr (std::is_same_v<T, brace_tables>) {
                j["kind"] = "brace";
                j["n"] = v.add.n;
                j["add"] = detail::table_json(v.add);
                j["circ"] = detail::table_json(v.circ);
                j["zero"] = v.zero;
            } else if constexpr (std::is_same_v<T, permutation>) {
                j["kind"] = "permutation";
                j["image"] = v.image;
            }
        },
        obj);
    std::string out = "{\n";
    for (auto it = j.begin(); it != j.end();) {
        out += "  \"" + it.key() + "\": ";
        detail::print_value(out, it.value(), 2);
        ++it;
        out += it != j.end() ? ",\n" : "\n";
    }
    out += "}\n";
    return out;
}

inline void emit_file(const parsed_file& obj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("emit_file: cannot write " + path);
    out << emit_string(obj);
}

}  // namespace birack
