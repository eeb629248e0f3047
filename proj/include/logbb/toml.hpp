#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace logbb::toml {

/// Minimal TOML subset: tables, arrays of tables, basic strings, integers,
/// booleans, (possibly multiline) arrays. Covers the scene schema.
class Value;
using Table = std::map<std::string, Value>;
using Array = std::vector<Value>;

class Value {
public:
    Value() : v_(std::monostate{}) {}
    explicit Value(std::string s) : v_(std::move(s)) {}
    explicit Value(long i) : v_(i) {}
    explicit Value(bool b) : v_(b) {}
    explicit Value(Array a) : v_(std::move(a)) {}
    explicit Value(Table t) : v_(std::move(t)) {}

    bool is_string() const { return std::holds_alternative<std::string>(v_); }
    bool is_int() const { return std::holds_alternative<long>(v_); }
    bool is_bool() const { return std::holds_alternative<bool>(v_); }
    bool is_array() const { return std::holds_alternative<Array>(v_); }
    bool is_table() const { return std::holds_alternative<Table>(v_); }

    const std::string& str() const;
    long integer() const;
    bool boolean() const;
    const Array& array() const;
    const Table& table() const;
    Table& table();

private:
    std::variant<std::monostate, std::string, long, bool, Array, Table> v_;
};

Table parse(std::string_view text);
Table parse_file(const std::string& path);

// lookup helpers; they throw ValidationError with a field path on mismatch
const Value* find(const Table& t, const std::string& key);
const Table& require_table(const Table& t, const std::string& key);
std::string require_string(const Table& t, const std::string& key,
                           const std::string& context);
long require_int(const Table& t, const std::string& key,
                 const std::string& context);
std::vector<std::string> require_string_array(const Table& t,
                                              const std::string& key,
                                              const std::string& context);
std::vector<long> require_int_array(const Table& t, const std::string& key,
                                    const std::string& context);

} // namespace logbb::toml
