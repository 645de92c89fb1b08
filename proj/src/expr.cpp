#include "starq/expr.hpp"

#include <cctype>

namespace starq {

namespace {

struct Parser {
    const std::string& s;
    const Ctx& ctx;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    Poly parse() {
        Poly p = expression();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return p;
    }

    Poly expression() {
        bool negate = false;
        skip_ws();
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Poly acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos;
            long e = integer();
            if (e < 0) {
                pos = at;
                fail("negative exponent");
            }
            Poly r = Poly::constant(ctx, 1);
            for (long k = 0; k < e; ++k) r *= base;
            return r;
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = expression();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ctx, rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ctx->index_of(name);
            if (idx < 0) {
                pos = start;
                fail("undeclared identifier '" + name + "'");
            }
            return Poly::variable(ctx, static_cast<std::uint32_t>(idx));
        }
        fail("unexpected character");
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    Rational rational() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        Integer num(s.substr(start, pos - start));
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            Integer den(s.substr(dstart, pos - dstart));
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }
};

} // namespace

Poly parse_expr(const std::string& text, const Ctx& ctx) {
    if (!ctx) throw error("parse_expr: null context");
    Parser p{text, ctx};
    return p.parse();
}

} // namespace starq
