#include "bnsl/bif.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "bnsl/errors.hpp"

namespace bnsl {

namespace {

bool is_punct(char c) {
    return c == '{' || c == '}' || c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == ';' ||
           c == '|';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

struct Token {
    enum class Kind { Word, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;

    bool is(char c) const { return kind == Kind::Punct && text.size() == 1 && text[0] == c; }
    bool is_word(std::string_view w) const { return kind == Kind::Word && text == w; }
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    const Token& peek() {
        if (!peeked_) {
            token_ = scan();
            peeked_ = true;
        }
        return token_;
    }

    Token next() {
        peek();
        peeked_ = false;
        return token_;
    }

    /// Text up to (excluding) the next ';', which is consumed. Used for opaque property lines.
    std::string raw_until_semicolon() {
        if (peeked_) throw std::logic_error("raw scan after peek");
        const std::size_t line = line_, column = column_;
        std::string out;
        while (pos_ < src_.size() && src_[pos_] != ';') out.push_back(advance());
        if (pos_ >= src_.size()) throw SyntaxError(line, column, "';' terminating property");
        advance();
        const auto first = out.find_first_not_of(" \t\r\n");
        const auto last = out.find_last_not_of(" \t\r\n");
        return first == std::string::npos ? std::string{} : out.substr(first, last - first + 1);
    }

private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (is_space(c)) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
                const std::size_t line = line_, column = column_;
                advance();
                advance();
                while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) advance();
                if (pos_ + 1 >= src_.size()) throw SyntaxError(line, column, "'*/' closing comment");
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    Token scan() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (is_punct(c)) {
            t.kind = Token::Kind::Punct;
            t.text = std::string(1, advance());
            return t;
        }
        t.kind = Token::Kind::Word;
        if (c == '"') {
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"') t.text.push_back(advance());
            if (pos_ >= src_.size()) throw SyntaxError(t.line, t.column, "closing '\"'");
            advance();
            return t;
        }
        while (pos_ < src_.size() && !is_space(src_[pos_]) && !is_punct(src_[pos_]) && src_[pos_] != '"')
            t.text.push_back(advance());
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token token_;
    bool peeked_ = false;
};

std::string describe(const Token& t) {
    if (t.kind == Token::Kind::End) return "end of input";
    return "'" + t.text + "'";
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    BifDocument document() {
        BifDocument doc;
        while (lex_.peek().kind != Token::Kind::End) {
            const Token head = lex_.next();
            if (head.is_word("network")) network(doc);
            else if (head.is_word("variable")) doc.variables.push_back(variable(head.line));
            else if (head.is_word("probability")) doc.probabilities.push_back(probability(head.line));
            else fail(head, "'network', 'variable' or 'probability'");
        }
        return doc;
    }

private:
    [[noreturn]] static void fail(const Token& t, const std::string& expected) {
        throw SyntaxError(t.line, t.column, expected + " (found " + describe(t) + ")");
    }

    void expect(char c) {
        const Token t = lex_.next();
        if (!t.is(c)) fail(t, std::string("'") + c + "'");
    }

    std::string word(const std::string& what) {
        const Token t = lex_.next();
        if (t.kind != Token::Kind::Word) fail(t, what);
        return t.text;
    }

    double number() {
        const Token t = lex_.next();
        double value = 0.0;
        if (t.kind == Token::Kind::Word) {
            const char* end = t.text.data() + t.text.size();
            auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
            if (ec == std::errc() && ptr == end && std::isfinite(value)) return value;
        }
        fail(t, "probability value");
    }

    // Comma-separated (commas optional) numbers up to ';'.
    std::vector<double> numbers() {
        std::vector<double> out{number()};
        while (!lex_.peek().is(';')) {
            if (lex_.peek().is(',')) lex_.next();
            out.push_back(number());
        }
        lex_.next();
        return out;
    }

    // Comma-separated words up to the closing character.
    std::vector<std::string> word_list(char close, const std::string& what) {
        std::vector<std::string> out{word(what)};
        while (!lex_.peek().is(close)) {
            expect(',');
            out.push_back(word(what));
        }
        lex_.next();
        return out;
    }

    void network(BifDocument& doc) {
        doc.network_name = word("network name");
        expect('{');
        while (!lex_.peek().is('}')) {
            const Token t = lex_.next();
            if (!t.is_word("property")) fail(t, "'property' or '}'");
            doc.network_properties.push_back(lex_.raw_until_semicolon());
        }
        lex_.next();
    }

    BifVariable variable(std::size_t line) {
        BifVariable var;
        var.line = line;
        var.name = word("variable name");
        expect('{');
        bool typed = false;
        while (!lex_.peek().is('}')) {
            const Token t = lex_.next();
            if (t.is_word("property")) {
                var.properties.push_back(lex_.raw_until_semicolon());
            } else if (t.is_word("type")) {
                const Token kind = lex_.next();
                if (!kind.is_word("discrete")) fail(kind, "'discrete'");
                expect('[');
                const Token size = lex_.next();
                std::size_t declared = 0;
                const char* end = size.text.data() + size.text.size();
                auto [ptr, ec] = std::from_chars(size.text.data(), end, declared);
                if (size.kind != Token::Kind::Word || ec != std::errc() || ptr != end) fail(size, "level count");
                expect(']');
                expect('{');
                var.levels = word_list('}', "level label");
                expect(';');
                if (var.levels.size() != declared)
                    throw SemanticError("variable '" + var.name + "' declares " + std::to_string(declared) +
                                        " levels but lists " + std::to_string(var.levels.size()));
                typed = true;
            } else {
                fail(t, "'type', 'property' or '}'");
            }
        }
        const Token close = lex_.next();
        if (!typed) fail(close, "'type discrete' declaration");
        return var;
    }

    BifProbability probability(std::size_t line) {
        BifProbability block;
        block.line = line;
        expect('(');
        block.child = word("child variable name");
        if (lex_.peek().is('|')) {
            lex_.next();
            block.parents = word_list(')', "parent variable name");
        } else {
            expect(')');
        }
        expect('{');
        while (!lex_.peek().is('}')) {
            const Token t = lex_.next();
            if (t.is_word("property")) {
                block.properties.push_back(lex_.raw_until_semicolon());
            } else if (t.is_word("table")) {
                if (block.table) throw SemanticError("probability block for '" + block.child + "' has two tables");
                block.table = numbers();
            } else if (t.is('(')) {
                BifEntry entry;
                entry.line = t.line;
                entry.parent_levels = word_list(')', "parent level");
                entry.probabilities = numbers();
                block.entries.push_back(std::move(entry));
            } else {
                fail(t, "'(', 'table', 'property' or '}'");
            }
        }
        lex_.next();
        return block;
    }

    Lexer lex_;
};

bool plain_word(const std::string& s) {
    if (s.empty()) return false;
    if (s.find("//") != std::string::npos || s.find("/*") != std::string::npos) return false;
    return std::none_of(s.begin(), s.end(), [](char c) { return is_space(c) || is_punct(c) || c == '"'; });
}

std::string quoted(const std::string& s) { return plain_word(s) ? s : "\"" + s + "\""; }

std::string format_probability(double p) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p);
    return std::string(buf, ptr);
}

}  // namespace

BifDocument parse_bif_document(std::string_view text) { return Parser(text).document(); }

Bn to_bn(const BifDocument& doc) {
    std::map<std::string, NodeId> index;
    std::vector<Variable> variables;
    for (const auto& v : doc.variables) {
        if (!index.emplace(v.name, variables.size()).second)
            throw SemanticError("variable '" + v.name + "' declared twice (line " + std::to_string(v.line) + ")");
        try {
            variables.emplace_back(v.name, v.levels);
        } catch (const std::invalid_argument& e) {
            throw SemanticError(e.what());
        }
    }
    if (variables.empty()) throw SemanticError("document declares no variables");

    const std::size_t n = variables.size();
    std::vector<const BifProbability*> block_of(n, nullptr);
    for (const auto& block : doc.probabilities) {
        auto it = index.find(block.child);
        if (it == index.end())
            throw SemanticError("probability block at line " + std::to_string(block.line) +
                                " refers to undeclared variable '" + block.child + "'");
        if (block_of[it->second])
            throw SemanticError("duplicate probability block for '" + block.child + "' (line " +
                                std::to_string(block.line) + ")");
        block_of[it->second] = &block;
    }

    ParentSets parents(n);
    for (NodeId i = 0; i < n; ++i) {
        if (!block_of[i]) throw SemanticError("no probability block for '" + variables[i].name() + "'");
        std::set<NodeId> seen;
        for (const auto& p : block_of[i]->parents) {
            auto it = index.find(p);
            if (it == index.end())
                throw SemanticError("probability block for '" + variables[i].name() +
                                    "' refers to undeclared parent '" + p + "'");
            if (it->second == i || !seen.insert(it->second).second)
                throw SemanticError("probability block for '" + variables[i].name() + "' has an invalid parent list");
            parents[i].push_back(it->second);
        }
    }
    if (!is_acyclic(parents)) throw SemanticError("parent lists form a directed cycle");

    std::vector<Cpt> cpts;
    for (NodeId i = 0; i < n; ++i) {
        const BifProbability& block = *block_of[i];
        const std::string where = "probability block for '" + variables[i].name() + "'";
        const std::size_t r = variables[i].cardinality();
        const std::vector<NodeId>& listed = parents[i];
        std::vector<NodeId> sorted = listed;
        std::sort(sorted.begin(), sorted.end());

        std::size_t q = 1;
        for (NodeId p : listed) q *= variables[p].cardinality();

        // Maps a configuration in listed-parent order to its index in sorted-parent order.
        auto sorted_index = [&](const std::vector<std::size_t>& levels_listed) {
            std::size_t j = 0;
            for (NodeId p : sorted) {
                const auto pos = static_cast<std::size_t>(std::find(listed.begin(), listed.end(), p) - listed.begin());
                j = j * variables[p].cardinality() + levels_listed[pos];
            }
            return j;
        };

        std::vector<double> table(q * r, 0.0);
        std::vector<char> filled(q, 0);
        auto place = [&](const std::vector<std::size_t>& levels_listed, const std::vector<double>& row,
                         std::size_t line) {
            if (row.size() != r)
                throw SemanticError(where + ": row at line " + std::to_string(line) + " has " +
                                    std::to_string(row.size()) + " values, expected " + std::to_string(r));
            double sum = 0.0;
            for (double p : row) {
                if (p < 0.0 || p > 1.0 + 1e-6)
                    throw SemanticError(where + ": probability outside [0, 1] at line " + std::to_string(line));
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-6)
                throw SemanticError(where + ": row at line " + std::to_string(line) + " sums to " +
                                    format_probability(sum));
            const std::size_t j = sorted_index(levels_listed);
            if (filled[j]) throw SemanticError(where + ": configuration listed twice (line " + std::to_string(line) + ")");
            filled[j] = 1;
            for (std::size_t k = 0; k < r; ++k) table[j * r + k] = row[k];
        };

        if (block.table && !block.entries.empty())
            throw SemanticError(where + " mixes a flat table with per-configuration entries");
        if (block.table) {
            if (block.table->size() != q * r)
                throw SemanticError(where + ": table has " + std::to_string(block.table->size()) +
                                    " values, expected " + std::to_string(q * r));
            std::vector<std::size_t> levels(listed.size(), 0);
            for (std::size_t c = 0; c < q; ++c) {
                std::size_t rest = c;
                for (std::size_t k = listed.size(); k-- > 0;) {
                    const std::size_t card = variables[listed[k]].cardinality();
                    levels[k] = rest % card;
                    rest /= card;
                }
                std::vector<double> row(block.table->begin() + static_cast<std::ptrdiff_t>(c * r),
                                        block.table->begin() + static_cast<std::ptrdiff_t>((c + 1) * r));
                place(levels, row, block.line);
            }
        } else {
            for (const auto& entry : block.entries) {
                if (entry.parent_levels.size() != listed.size())
                    throw SemanticError(where + ": entry at line " + std::to_string(entry.line) + " names " +
                                        std::to_string(entry.parent_levels.size()) + " parent levels, expected " +
                                        std::to_string(listed.size()));
                std::vector<std::size_t> levels;
                for (std::size_t k = 0; k < listed.size(); ++k) {
                    const auto idx = variables[listed[k]].level_index(entry.parent_levels[k]);
                    if (!idx)
                        throw SemanticError(where + ": unknown level '" + entry.parent_levels[k] + "' of '" +
                                            variables[listed[k]].name() + "' at line " + std::to_string(entry.line));
                    levels.push_back(*idx);
                }
                place(levels, entry.probabilities, entry.line);
            }
        }
        if (std::find(filled.begin(), filled.end(), 0) != filled.end())
            throw SemanticError(where + " does not cover every parent configuration");

        // Rows already within rounding of one are kept verbatim so that
        // emit/parse round trips are exact.
        for (std::size_t j = 0; j < q; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < r; ++k) sum += table[j * r + k];
            if (std::abs(sum - 1.0) <= 1e-13) continue;
            for (std::size_t k = 0; k < r; ++k) table[j * r + k] = std::clamp(table[j * r + k] / sum, 0.0, 1.0);
        }
        std::vector<std::size_t> parent_cards;
        for (NodeId p : sorted) parent_cards.push_back(variables[p].cardinality());
        cpts.emplace_back(r, std::move(parent_cards), std::move(table));
    }
    return Bn(Dag(std::move(parents)), std::move(variables), std::move(cpts),
              doc.network_name.empty() ? "network" : doc.network_name);
}

Bn parse_bif(std::string_view text) { return to_bn(parse_bif_document(text)); }

std::string emit_bif(const Bn& bn) {
    std::string out;
    out += "network " + quoted(bn.name()) + " {\n}\n";
    for (const auto& v : bn.variables()) {
        out += "variable " + quoted(v.name()) + " {\n  type discrete [ " + std::to_string(v.cardinality()) + " ] { ";
        for (std::size_t k = 0; k < v.levels().size(); ++k) out += (k ? ", " : "") + quoted(v.levels()[k]);
        out += " };\n}\n";
    }
    for (NodeId i = 0; i < bn.node_count(); ++i) {
        const auto& ps = bn.dag().parents(i);
        const Cpt& cpt = bn.cpt(i);
        out += "probability ( " + quoted(bn.variables()[i].name());
        for (std::size_t k = 0; k < ps.size(); ++k) out += (k ? ", " : " | ") + quoted(bn.variables()[ps[k]].name());
        out += " ) {\n";
        auto row_text = [&](std::size_t j) {
            std::string s;
            const auto row = cpt.row(j);
            for (std::size_t k = 0; k < row.size(); ++k) s += (k ? ", " : "") + format_probability(row[k]);
            return s;
        };
        if (ps.empty()) {
            out += "  table " + row_text(0) + ";\n";
        } else {
            std::vector<std::size_t> levels(ps.size(), 0);
            for (std::size_t j = 0; j < cpt.config_count(); ++j) {
                out += "  (";
                for (std::size_t k = 0; k < ps.size(); ++k)
                    out += (k ? ", " : " ") + quoted(bn.variables()[ps[k]].levels()[levels[k]]);
                out += " ) " + row_text(j) + ";\n";
                for (std::size_t k = ps.size(); k-- > 0;) {
                    if (++levels[k] < bn.variables()[ps[k]].cardinality()) break;
                    levels[k] = 0;
                }
            }
        }
        out += "}\n";
    }
    return out;
}

}  // namespace bnsl
