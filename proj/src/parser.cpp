#include "logbb/parser.hpp"

#include "logbb/errors.hpp"

#include <cctype>

namespace logbb {

namespace {

struct Token {
    enum class Kind { Number, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string_view text;
    std::size_t offset;
};

const char* token_name(Token::Kind k) {
    switch (k) {
    case Token::Kind::Number: return "number";
    case Token::Kind::Name: return "name";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Caret: return "'^'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::End: return "end of input";
    }
    return "?";
}

class Parser {
public:
    Parser(std::string_view text, const AmbientPtr& amb) : text_(text), amb_(amb) {
        advance();
    }

    MPoly parse() {
        MPoly p = expr();
        expect(Token::Kind::End);
        return p;
    }

private:
    std::string_view text_;
    const AmbientPtr& amb_;
    Token cur_{Token::Kind::End, {}, 0};
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string msg = "unexpected ";
        msg += token_name(cur_.kind);
        if (!cur_.text.empty()) {
            msg += " '";
            msg += cur_.text;
            msg += "'";
        }
        throw ParseError(msg, cur_.offset, std::move(expected));
    }

    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            cur_ = {Token::Kind::End, {}, start};
            return;
        }
        char c = text_[pos_];
        auto single = [&](Token::Kind k) {
            ++pos_;
            cur_ = {k, text_.substr(start, 1), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            cur_ = {Token::Kind::Number, text_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ++pos_;
            cur_ = {Token::Kind::Name, text_.substr(start, pos_ - start), start};
            return;
        }
        switch (c) {
        case '+': single(Token::Kind::Plus); return;
        case '-': single(Token::Kind::Minus); return;
        case '*': single(Token::Kind::Star); return;
        case '^': single(Token::Kind::Caret); return;
        case '/': single(Token::Kind::Slash); return;
        case '(': single(Token::Kind::LParen); return;
        case ')': single(Token::Kind::RParen); return;
        default:
            cur_ = {Token::Kind::End, text_.substr(start, 1), start};
            throw ParseError(std::string("invalid character '") + c + "'", start,
                             {"number", "name", "operator"});
        }
    }

    bool accept(Token::Kind k) {
        if (cur_.kind != k) return false;
        advance();
        return true;
    }

    void expect(Token::Kind k) {
        if (cur_.kind != k) fail({token_name(k)});
        advance();
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    MPoly expr() {
        bool neg = false;
        if (accept(Token::Kind::Minus))
            neg = true;
        else
            accept(Token::Kind::Plus);
        MPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept(Token::Kind::Plus))
                acc += term();
            else if (accept(Token::Kind::Minus))
                acc -= term();
            else
                return acc;
        }
    }

    // term := factor ('*' factor)*
    MPoly term() {
        MPoly acc = factor();
        while (accept(Token::Kind::Star)) acc = acc * factor();
        return acc;
    }

    // factor := primary ['^' number]
    MPoly factor() {
        MPoly base = primary();
        if (accept(Token::Kind::Caret)) {
            if (cur_.kind != Token::Kind::Number) fail({"number"});
            unsigned long e = std::stoul(std::string(cur_.text));
            advance();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    // primary := number ['/' number] | name | '(' expr ')'
    MPoly primary() {
        switch (cur_.kind) {
        case Token::Kind::Number: {
            mpz_class num(std::string(cur_.text), 10);
            advance();
            if (accept(Token::Kind::Slash)) {
                if (cur_.kind != Token::Kind::Number) fail({"number"});
                mpz_class den(std::string(cur_.text), 10);
                if (den == 0)
                    throw ParseError("zero denominator in rational literal",
                                     cur_.offset, {"nonzero number"});
                advance();
                Rat q(num, den);
                q.canonicalize();
                return MPoly::constant(amb_, q);
            }
            return MPoly::constant(amb_, Rat(num));
        }
        case Token::Kind::Name: {
            int idx = amb_->index_of(cur_.text);
            if (idx < 0)
                throw UnknownVariable("unknown variable '" + std::string(cur_.text) +
                                      "' at byte " + std::to_string(cur_.offset));
            advance();
            return MPoly::variable(amb_, idx);
        }
        case Token::Kind::LParen: {
            advance();
            MPoly p = expr();
            expect(Token::Kind::RParen);
            return p;
        }
        default:
            fail({"number", "name", "'('"});
        }
    }
};

} // namespace

MPoly parse_poly(std::string_view text, const AmbientPtr& ambient) {
    return Parser(text, ambient).parse();
}

} // namespace logbb
