#include "bnsl/csv.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bnsl/errors.hpp"

namespace bnsl {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        const std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++number;
        const std::string_view t = trim(raw);
        if (!t.empty() && t.front() != '#') out.push_back({number, raw});
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

std::string position(const Line& line, std::size_t column) {
    return "line " + std::to_string(line.number) + ", column " + std::to_string(column + 1);
}

}  // namespace

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<Variable> parse_schema(std::string_view text) {
    std::vector<Variable> out;
    std::set<std::string> names;
    for (const Line& line : content_lines(text)) {
        const std::string_view t = trim(line.text);
        const auto colon = t.find(':');
        if (colon == std::string_view::npos)
            throw InputError("schema line " + std::to_string(line.number) + ": expected 'name:level1,level2,...'");
        const std::string name(trim(t.substr(0, colon)));
        std::vector<std::string> levels = split_fields(t.substr(colon + 1));
        if (name.empty() || std::any_of(levels.begin(), levels.end(), [](const auto& l) { return l.empty(); }))
            throw InputError("schema line " + std::to_string(line.number) + ": empty variable name or level");
        if (!names.insert(name).second)
            throw InputError("schema line " + std::to_string(line.number) + ": variable '" + name + "' declared twice");
        try {
            out.emplace_back(name, std::move(levels));
        } catch (const std::invalid_argument& e) {
            throw InputError("schema line " + std::to_string(line.number) + ": " + e.what());
        }
    }
    return out;
}

std::string write_schema(const std::vector<Variable>& variables) {
    std::string out;
    for (const auto& v : variables) {
        out += v.name() + ":";
        for (std::size_t k = 0; k < v.levels().size(); ++k) out += (k ? "," : "") + v.levels()[k];
        out += "\n";
    }
    return out;
}

CsvDataset read_csv_dataset(std::string_view text, const std::optional<std::vector<Variable>>& schema) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw HeaderMismatch("CSV input has no header row");
    const std::vector<std::string> header = split_fields(lines.front().text);
    {
        std::set<std::string> seen;
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c].empty()) throw HeaderMismatch("empty column name at " + position(lines.front(), c));
            if (!seen.insert(header[c]).second) throw HeaderMismatch("duplicate column '" + header[c] + "'");
        }
    }

    // Raw label table, validated for shape first.
    std::vector<std::vector<std::string>> cells;
    cells.reserve(lines.size() - 1);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        auto fields = split_fields(lines[li].text);
        if (fields.size() > header.size())
            throw HeaderMismatch("row at line " + std::to_string(lines[li].number) + " has " +
                                 std::to_string(fields.size()) + " cells, header has " + std::to_string(header.size()));
        for (std::size_t c = 0; c < header.size(); ++c)
            if (c >= fields.size() || fields[c].empty())
                throw MissingCell("missing value for '" + header[c] + "' at " + position(lines[li], c));
        cells.push_back(std::move(fields));
    }

    std::vector<std::string> warnings;
    std::vector<Variable> variables;
    if (schema) {
        std::map<std::string, const Variable*> by_name;
        for (const auto& v : *schema) by_name.emplace(v.name(), &v);
        for (const auto& name : header) {
            auto it = by_name.find(name);
            if (it == by_name.end()) throw HeaderMismatch("column '" + name + "' is not declared in the schema");
            variables.push_back(*it->second);
        }
        if (header.size() != schema->size())
            throw HeaderMismatch("schema declares " + std::to_string(schema->size()) + " variables, header has " +
                                 std::to_string(header.size()));
    } else {
        for (std::size_t c = 0; c < header.size(); ++c) {
            std::set<std::string> distinct;
            for (const auto& row : cells) distinct.insert(row[c]);
            if (distinct.empty())
                throw MissingCell("column '" + header[c] + "' has no values to infer levels from; supply a schema");
            variables.emplace_back(header[c], std::vector<std::string>(distinct.begin(), distinct.end()));
            warnings.push_back("levels of '" + header[c] + "' inferred from data (r = " +
                               std::to_string(distinct.size()) + ")");
        }
    }

    std::vector<std::vector<Level>> columns(header.size(), std::vector<Level>(cells.size()));
    for (std::size_t c = 0; c < header.size(); ++c) {
        std::map<std::string, Level> lookup;
        for (std::size_t k = 0; k < variables[c].levels().size(); ++k)
            lookup.emplace(variables[c].levels()[k], static_cast<Level>(k));
        for (std::size_t r = 0; r < cells.size(); ++r) {
            auto it = lookup.find(cells[r][c]);
            if (it == lookup.end())
                throw UnknownLevel("value '" + cells[r][c] + "' is not a declared level of '" + header[c] + "' at " +
                                   position(lines[r + 1], c));
            columns[c][r] = it->second;
        }
    }
    return {Dataset::from_columns(std::move(variables), std::move(columns)), std::move(warnings)};
}

std::string write_csv_dataset(const Dataset& data) {
    std::string out;
    for (NodeId v = 0; v < data.variable_count(); ++v) out += (v ? "," : "") + data.variable(v).name();
    out += "\n";
    for (std::size_t r = 0; r < data.row_count(); ++r) {
        for (NodeId v = 0; v < data.variable_count(); ++v)
            out += (v ? "," : "") + data.variable(v).levels()[data.at(r, v)];
        out += "\n";
    }
    return out;
}

Structure parse_structure(std::string_view text) {
    std::optional<std::vector<std::string>> names;
    std::map<std::string, NodeId> index;
    std::vector<Arc> arcs;
    for (const Line& line : content_lines(text)) {
        const std::string_view t = trim(line.text);
        if (t.rfind("nodes:", 0) == 0) {
            if (names) throw InputError("structure line " + std::to_string(line.number) + ": duplicate 'nodes:' line");
            names = split_fields(t.substr(6));
            for (NodeId i = 0; i < names->size(); ++i)
                if ((*names)[i].empty() || !index.emplace((*names)[i], i).second)
                    throw InputError("structure line " + std::to_string(line.number) + ": bad node list");
            continue;
        }
        if (!names) throw InputError("structure line " + std::to_string(line.number) + ": expected 'nodes:' first");
        const auto arrow = t.find("->");
        if (arrow == std::string_view::npos)
            throw InputError("structure line " + std::to_string(line.number) + ": expected 'from -> to'");
        const std::string from(trim(t.substr(0, arrow)));
        const std::string to(trim(t.substr(arrow + 2)));
        auto f = index.find(from);
        auto g = index.find(to);
        if (f == index.end() || g == index.end())
            throw InputError("structure line " + std::to_string(line.number) + ": unknown node in '" + std::string(t) + "'");
        arcs.push_back({f->second, g->second});
    }
    if (!names || names->empty()) throw InputError("structure has no 'nodes:' line");
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) throw InputError("structure lists an arc twice");
    try {
        Dag dag(names->size(), arcs);
        return {std::move(*names), std::move(dag)};
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid structure: ") + e.what());
    } catch (const CyclicResult&) {
        throw InputError("structure contains a directed cycle");
    }
}

std::string write_structure(const Dag& dag, const std::vector<std::string>& names) {
    if (names.size() != dag.node_count()) throw DimensionMismatch("one name per node required");
    std::string out = "# bnsl structure v1\nnodes: ";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    out += "\n";
    for (const Arc& a : dag.arcs()) out += names[a.from] + " -> " + names[a.to] + "\n";
    return out;
}

}  // namespace bnsl
