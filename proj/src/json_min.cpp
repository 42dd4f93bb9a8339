#include "pmv/json_min.hpp"

#include <cctype>

namespace pmv {

const JsonValue* JsonValue::find(std::string_view key) const {
    if (type != Type::Object) return nullptr;
    for (const auto& [k, v] : members)
        if (k == key) return &v;
    return nullptr;
}

const JsonValue& JsonValue::at(std::string_view key) const {
    const JsonValue* v = find(key);
    if (!v) throw ParseError(line, col, "missing required field \"" + std::string(key) + "\"");
    return *v;
}

namespace {

void print_escaped(const std::string& s, std::string& out) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    static const char* hex = "0123456789abcdef";
                    out += "\\u00";
                    out += hex[(ch >> 4) & 0xf];
                    out += hex[ch & 0xf];
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    JsonValue run() {
        JsonValue v = parse_value();
        skip_ws();
        if (pos_ < text_.size()) fail("trailing content after JSON value");
        return v;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char next() {
        char c = text_[pos_++];
        if (c == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                next();
            else
                break;
        }
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        next();
    }

    JsonValue parse_value() {
        skip_ws();
        if (eof()) fail("unexpected end of input");
        JsonValue v;
        v.line = line_;
        v.col = col_;
        char c = peek();
        if (c == '{') {
            v.type = JsonValue::Type::Object;
            parse_object(v);
        } else if (c == '[') {
            v.type = JsonValue::Type::Array;
            parse_array(v);
        } else if (c == '"') {
            v.type = JsonValue::Type::String;
            v.str = parse_string();
        } else if (c == '-' || (c >= '0' && c <= '9')) {
            v.type = JsonValue::Type::Int;
            v.integer = parse_int();
        } else if (c == 't' || c == 'f' || c == 'n') {
            fail("booleans and null are not accepted in this format");
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        return v;
    }

    void parse_object(JsonValue& v) {
        expect('{');
        skip_ws();
        if (!eof() && peek() == '}') {
            next();
            return;
        }
        while (true) {
            skip_ws();
            if (eof() || peek() != '"') fail("expected object key string");
            std::string key = parse_string();
            skip_ws();
            expect(':');
            JsonValue member = parse_value();
            for (const auto& [k, unused] : v.members)
                if (k == key) fail("duplicate object key \"" + key + "\"");
            v.members.emplace_back(std::move(key), std::move(member));
            skip_ws();
            if (eof()) fail("unterminated object");
            if (peek() == ',') {
                next();
            } else if (peek() == '}') {
                next();
                return;
            } else {
                fail("expected ',' or '}' in object");
            }
        }
    }

    void parse_array(JsonValue& v) {
        expect('[');
        skip_ws();
        if (!eof() && peek() == ']') {
            next();
            return;
        }
        while (true) {
            v.items.push_back(parse_value());
            skip_ws();
            if (eof()) fail("unterminated array");
            if (peek() == ',') {
                next();
            } else if (peek() == ']') {
                next();
                return;
            } else {
                fail("expected ',' or ']' in array");
            }
        }
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        while (true) {
            if (eof()) fail("unterminated string");
            char c = next();
            if (c == '"') return out;
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                char e = next();
                switch (e) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case '/': out += '/'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    case 'b': out += '\b'; break;
                    case 'f': out += '\f'; break;
                    case 'u': {
                        unsigned code = 0;
                        for (int i = 0; i < 4; i++) {
                            if (eof()) fail("unterminated \\u escape");
                            char h = next();
                            code <<= 4;
                            if (h >= '0' && h <= '9')
                                code |= static_cast<unsigned>(h - '0');
                            else if (h >= 'a' && h <= 'f')
                                code |= static_cast<unsigned>(h - 'a' + 10);
                            else if (h >= 'A' && h <= 'F')
                                code |= static_cast<unsigned>(h - 'A' + 10);
                            else
                                fail("invalid \\u escape");
                        }
                        if (code < 0x80) {
                            out += static_cast<char>(code);
                        } else if (code < 0x800) {
                            out += static_cast<char>(0xc0 | (code >> 6));
                            out += static_cast<char>(0x80 | (code & 0x3f));
                        } else {
                            out += static_cast<char>(0xe0 | (code >> 12));
                            out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
                            out += static_cast<char>(0x80 | (code & 0x3f));
                        }
                        break;
                    }
                    default: fail("invalid escape sequence");
                }
            } else {
                out += c;
            }
        }
    }

    long long parse_int() {
        int start_line = line_, start_col = col_;
        std::string digits;
        if (peek() == '-') digits += next();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected digits");
        }
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += next();
        if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
            throw ParseError(start_line, start_col,
                             "floating-point literals are not accepted; use an integer or a \"p/q\" string");
        }
        // JSON forbids redundant leading zeros.
        size_t first = digits[0] == '-' ? 1 : 0;
        if (digits.size() - first > 1 && digits[first] == '0')
            throw ParseError(start_line, start_col, "leading zeros are not accepted");
        try {
            return std::stoll(digits);
        } catch (const std::exception&) {
            throw ParseError(start_line, start_col,
                             "integer literal out of range; use a \"p/q\" string");
        }
    }
};

} // namespace

void JsonValue::print(std::string& out) const {
    switch (type) {
        case Type::Object: {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : members) {
                if (!first) out += ',';
                first = false;
                print_escaped(k, out);
                out += ':';
                v.print(out);
            }
            out += '}';
            break;
        }
        case Type::Array: {
            out += '[';
            bool first = true;
            for (const auto& v : items) {
                if (!first) out += ',';
                first = false;
                v.print(out);
            }
            out += ']';
            break;
        }
        case Type::String:
            print_escaped(str, out);
            break;
        case Type::Int:
            out += std::to_string(integer);
            break;
    }
}

std::string JsonValue::dump() const {
    std::string out;
    print(out);
    return out;
}

JsonValue json_parse(std::string_view text) {
    Parser p(text);
    return p.run();
}

} // namespace pmv
