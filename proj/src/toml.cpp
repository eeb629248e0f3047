#include "logbb/toml.hpp"

#include "logbb/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace logbb::toml {

const std::string& Value::str() const {
    if (!is_string()) throw ValidationError("TOML value is not a string");
    return std::get<std::string>(v_);
}
long Value::integer() const {
    if (!is_int()) throw ValidationError("TOML value is not an integer");
    return std::get<long>(v_);
}
bool Value::boolean() const {
    if (!is_bool()) throw ValidationError("TOML value is not a boolean");
    return std::get<bool>(v_);
}
const Array& Value::array() const {
    if (!is_array()) throw ValidationError("TOML value is not an array");
    return std::get<Array>(v_);
}
const Table& Value::table() const {
    if (!is_table()) throw ValidationError("TOML value is not a table");
    return std::get<Table>(v_);
}
Table& Value::table() {
    if (!is_table()) throw ValidationError("TOML value is not a table");
    return std::get<Table>(v_);
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Table parse() {
        Table root;
        Table* current = &root;
        skip_filler();
        while (pos_ < text_.size()) {
            if (peek() == '[') {
                current = header(root);
            } else {
                key_value(*current);
            }
            skip_filler();
        }
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("TOML: " + msg, pos_);
    }

    char peek() const { return text_[pos_]; }
    bool eof() const { return pos_ >= text_.size(); }

    void skip_inline_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }

    void skip_comment() {
        if (!eof() && peek() == '#')
            while (!eof() && peek() != '\n') ++pos_;
    }

    // whitespace, comments, newlines
    void skip_filler() {
        for (;;) {
            skip_inline_ws();
            skip_comment();
            if (!eof() && (peek() == '\n' || peek() == '\r'))
                ++pos_;
            else
                return;
        }
    }

    void expect_line_end() {
        skip_inline_ws();
        skip_comment();
        if (eof()) return;
        if (peek() == '\n' || peek() == '\r') return;
        fail("expected end of line");
    }

    std::string bare_key() {
        std::size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '_' || peek() == '-'))
            ++pos_;
        if (pos_ == start) fail("expected key");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::vector<std::string> key_path() {
        std::vector<std::string> path{bare_key()};
        while (!eof() && peek() == '.') {
            ++pos_;
            path.push_back(bare_key());
        }
        return path;
    }

    Table* header(Table& root) {
        ++pos_; // '['
        bool array_of_tables = !eof() && peek() == '[';
        if (array_of_tables) ++pos_;
        skip_inline_ws();
        auto path = key_path();
        skip_inline_ws();
        if (eof() || peek() != ']') fail("expected ']'");
        ++pos_;
        if (array_of_tables) {
            if (eof() || peek() != ']') fail("expected ']]'");
            ++pos_;
        }
        expect_line_end();

        Table* t = &root;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            auto [it, ins] = t->try_emplace(path[i], Value(Table{}));
            if (it->second.is_array()) {
                // descend into the latest element of an array of tables
                auto& arr = const_cast<Array&>(it->second.array());
                if (arr.empty() || !arr.back().is_table())
                    fail("conflicting table path at " + path[i]);
                t = &arr.back().table();
            } else {
                t = &it->second.table();
            }
        }
        const auto& leaf = path.back();
        if (array_of_tables) {
            auto [it, ins] = t->try_emplace(leaf, Value(Array{}));
            if (!it->second.is_array()) fail("key " + leaf + " is not an array");
            auto& arr = const_cast<Array&>(it->second.array());
            arr.push_back(Value(Table{}));
            return &arr.back().table();
        }
        auto [it, ins] = t->try_emplace(leaf, Value(Table{}));
        if (!ins) fail("duplicate table " + leaf);
        return &it->second.table();
    }

    void key_value(Table& t) {
        auto key = bare_key();
        skip_inline_ws();
        if (eof() || peek() != '=') fail("expected '=' after key " + key);
        ++pos_;
        skip_inline_ws();
        auto val = value();
        expect_line_end();
        if (!t.try_emplace(key, std::move(val)).second)
            fail("duplicate key " + key);
    }

    Value value() {
        if (eof()) fail("expected value");
        char c = peek();
        if (c == '"') return Value(string_value());
        if (c == '[') return Value(array_value());
        if (c == 't' || c == 'f') {
            if (text_.substr(pos_, 4) == "true") {
                pos_ += 4;
                return Value(true);
            }
            if (text_.substr(pos_, 5) == "false") {
                pos_ += 5;
                return Value(false);
            }
            fail("invalid value");
        }
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return Value(int_value());
        fail("invalid value");
    }

    std::string string_value() {
        ++pos_; // '"'
        std::string out;
        while (!eof() && peek() != '"') {
            char c = peek();
            if (c == '\n') fail("unterminated string");
            if (c == '\\') {
                ++pos_;
                if (eof()) fail("unterminated escape");
                switch (peek()) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                default: fail("unsupported escape");
                }
                ++pos_;
            } else {
                out += c;
                ++pos_;
            }
        }
        if (eof()) fail("unterminated string");
        ++pos_; // closing '"'
        return out;
    }

    long int_value() {
        std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Array array_value() {
        ++pos_; // '['
        Array arr;
        for (;;) {
            skip_filler();
            if (eof()) fail("unterminated array");
            if (peek() == ']') {
                ++pos_;
                return arr;
            }
            arr.push_back(value());
            skip_filler();
            if (!eof() && peek() == ',') {
                ++pos_;
                continue;
            }
            if (!eof() && peek() == ']') {
                ++pos_;
                return arr;
            }
            fail("expected ',' or ']' in array");
        }
    }
};

} // namespace

Table parse(std::string_view text) { return Parser(text).parse(); }

Table parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scene file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const Value* find(const Table& t, const std::string& key) {
    auto it = t.find(key);
    return it == t.end() ? nullptr : &it->second;
}

const Table& require_table(const Table& t, const std::string& key) {
    auto* v = find(t, key);
    if (!v || !v->is_table())
        throw ValidationError("missing [" + key + "] table");
    return v->table();
}

std::string require_string(const Table& t, const std::string& key,
                           const std::string& context) {
    auto* v = find(t, key);
    if (!v || !v->is_string())
        throw ValidationError(context + "." + key + ": expected string");
    return v->str();
}

long require_int(const Table& t, const std::string& key,
                 const std::string& context) {
    auto* v = find(t, key);
    if (!v || !v->is_int())
        throw ValidationError(context + "." + key + ": expected integer");
    return v->integer();
}

std::vector<std::string> require_string_array(const Table& t,
                                              const std::string& key,
                                              const std::string& context) {
    auto* v = find(t, key);
    if (!v || !v->is_array())
        throw ValidationError(context + "." + key + ": expected array");
    std::vector<std::string> out;
    for (const auto& e : v->array()) {
        if (!e.is_string())
            throw ValidationError(context + "." + key +
                                  ": expected array of strings");
        out.push_back(e.str());
    }
    return out;
}

std::vector<long> require_int_array(const Table& t, const std::string& key,
                                    const std::string& context) {
    auto* v = find(t, key);
    if (!v || !v->is_array())
        throw ValidationError(context + "." + key + ": expected array");
    std::vector<long> out;
    for (const auto& e : v->array()) {
        if (!e.is_int())
            throw ValidationError(context + "." + key +
                                  ": expected array of integers");
        out.push_back(e.integer());
    }
    return out;
}

} // namespace logbb::toml
