#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmv/errors.hpp"

namespace pmv {

/// Minimal JSON value restricted to what the spec-file format and the report
/// emitter need: objects, arrays, strings and (64-bit) integers.  Floating
/// point literals, booleans and null are rejected on parse; exact values
/// travel as integers or "p/q" strings.
///
/// Every parsed node carries its 1-based source position so semantic errors
/// ("unknown kind", "n must be >= 0") can point at the offending token.
/// Object member order is preserved; the printer is canonical (compact, no
/// whitespace), so print(parse(print(x))) == print(x) byte for byte.
struct JsonValue {
    enum class Type { Object, Array, String, Int };

    Type type = Type::Object;
    std::vector<std::pair<std::string, JsonValue>> members; // Object
    std::vector<JsonValue> items;                           // Array
    std::string str;                                        // String
    long long integer = 0;                                  // Int
    int line = 0;
    int col = 0;

    static JsonValue object() { JsonValue v; v.type = Type::Object; return v; }
    static JsonValue array() { JsonValue v; v.type = Type::Array; return v; }
    static JsonValue string(std::string s) {
        JsonValue v;
        v.type = Type::String;
        v.str = std::move(s);
        return v;
    }
    static JsonValue number(long long n) {
        JsonValue v;
        v.type = Type::Int;
        v.integer = n;
        return v;
    }

    JsonValue& add(const std::string& key, JsonValue value) {
        members.emplace_back(key, std::move(value));
        return *this;
    }
    JsonValue& push(JsonValue value) {
        items.push_back(std::move(value));
        return *this;
    }

    bool is_object() const { return type == Type::Object; }
    bool is_array() const { return type == Type::Array; }
    bool is_string() const { return type == Type::String; }
    bool is_int() const { return type == Type::Int; }

    /// Member lookup; nullptr when absent or not an object.
    const JsonValue* find(std::string_view key) const;

    /// Member lookup that throws a position-annotated ParseError when absent.
    const JsonValue& at(std::string_view key) const;

    void print(std::string& out) const;
    std::string dump() const;
};

/// Parse strict JSON (objects/arrays/strings/integers only).
/// Throws ParseError with line/col on any lexical or structural problem,
/// including floating-point literals, which are rejected by design.
JsonValue json_parse(std::string_view text);

} // namespace pmv
