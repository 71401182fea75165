#include "vft/expr.hpp"

#include <cctype>
#include <sstream>

namespace vft {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

constexpr int kMaxExponent = 1 << 20;

class Parser {
public:
    Parser(const std::string& text, const VariableContext& ctx) : text_(text), ctx_(ctx) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            skip_ws();
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) acc = acc * factor();
            else return acc;
        }
    }

    MultiPoly factor() {
        skip_ws();
        if (accept('-')) return -factor();
        MultiPoly b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            int e = parse_uint_bounded();
            return b.pow(e);
        }
        return b;
    }

    MultiPoly base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable_ref();
        fail(std::string("unexpected character '") + c + "'");
        return MultiPoly(ctx_.nvars()); // unreachable
    }

    MultiPoly rational_literal() {
        Integer num(digits());
        Rational value(num);
        // 'a/b' is one token: the slash must follow the digits immediately.
        if (pos_ < text_.size() && text_[pos_] == '/') {
            std::size_t slash = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = slash;
                fail("expected digits after '/' in rational literal");
            }
            Integer den(digits());
            if (den == 0) {
                pos_ = slash;
                fail("zero denominator in rational literal");
            }
            value = Rational(num, den);
        }
        return MultiPoly::constant(ctx_.nvars(), value);
    }

    MultiPoly variable_ref() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ++pos_;
            else break;
        }
        std::string name = text_.substr(start, pos_ - start);
        int idx = ctx_.index_of(name);
        if (idx < 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return MultiPoly::variable(ctx_.nvars(), idx);
    }

    int parse_uint_bounded() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected unsigned integer exponent");
        std::size_t start = pos_;
        Integer v(digits());
        if (v > kMaxExponent) {
            pos_ = start;
            fail("exponent overflow");
        }
        return static_cast<int>(v);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(pos_, message); }

    const std::string& text_;
    const VariableContext& ctx_;
    std::size_t pos_ = 0;
};

} // namespace

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("variable context needs at least one name");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_name(names_[i]))
            throw std::invalid_argument("invalid variable name '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
    }
}

VariableContext VariableContext::from_csv(const std::string& csv) {
    std::vector<std::string> names;
    std::string current;
    std::istringstream in(csv);
    while (std::getline(in, current, ',')) names.push_back(current);
    return VariableContext(std::move(names));
}

int VariableContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

MultiPoly parse_poly(const std::string& text, const VariableContext& ctx) {
    return Parser(text, ctx).run();
}

std::string print_poly(const MultiPoly& p, const VariableContext& ctx) {
    if (p.nvars() != ctx.nvars())
        throw std::invalid_argument("variable-count mismatch between polynomial and context");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Reverse graded-lex map order: highest degree first, x-heavy terms first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        Rational mag = negative ? Rational(-c) : c;
        bool has_vars = m.total_degree() > 0;
        bool printed = false;
        if (!has_vars || mag != 1) {
            out << rat_to_string(mag);
            printed = true;
        }
        for (int i = 0; i < p.nvars(); ++i) {
            int e = m.exponents[i];
            if (e == 0) continue;
            if (printed) out << "*";
            out << ctx.name(i);
            if (e > 1) out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

} // namespace vft
