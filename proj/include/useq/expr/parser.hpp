#pragma once

#include "ast.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace useq::expr {

/// Syntax error with a 1-based source position.
struct parse_error : std::runtime_error {
    parse_error(const std::string& message, source_pos where)
        : std::runtime_error(where.line > 0 ? std::to_string(where.line) + ":" +
                                                  std::to_string(where.col) + ": " + message
                                            : message),
          pos(where) {}
    source_pos pos;
};

/**
 * Recursive-descent parser for the expression language.
 *
 *   expr   := term (("+" | "-") term)*
 *   term   := unary (("*" | "/") unary)*
 *   unary  := "-" unary | power
 *   power  := atom ("^" unary)?              right-associative
 *   atom   := NUMBER
 *           | IDENT
 *           | IDENT "(" expr ("," expr)* ")"
 *           | "(" expr ")"
 *           | "sum" "(" IDENT "=" expr ".." expr "," expr ")"
 *   NUMBER := integer | integer "/" integer  a rational literal; the "/"
 *                                            counts as part of the number
 *                                            only with no whitespace around it
 *
 * "^" binds tighter than unary minus on the left (-2^2 is -(2^2)) while
 * the exponent itself may be signed (2^-3). Whitespace is insignificant
 * apart from the rational-literal rule. Sequence calls F, L, P, Q take
 * one argument and U takes four; anything else followed by "(" is an
 * unknown function.
 */
node_ptr parse(std::string_view source);

namespace detail {

enum class tok {
    number,
    ident,
    kw_sum,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    comma,
    assign,
    dotdot,
    end,
};

struct token {
    tok kind;
    rational num;      // for number
    std::string text;  // for ident, and the spelling used in messages
    source_pos pos;
};

inline std::vector<token> lex(std::string_view src) {
    std::vector<token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto at = [&](std::size_t k) { return k < src.size() ? src[k] : '\0'; };
    while (i < src.size()) {
        const char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++col;
            ++i;
            continue;
        }
        const source_pos pos{line, col};
        auto push = [&](tok kind, std::string text) {
            out.push_back(token{kind, rational(), std::move(text), pos});
        };
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            while (std::isdigit(static_cast<unsigned char>(at(i)))) ++i;
            std::string digits(src.substr(start, i - start));
            rational value{mpz_class(digits, 10)};
            // "p/q" with no whitespace lexes as one rational literal
            if (at(i) == '/' && std::isdigit(static_cast<unsigned char>(at(i + 1)))) {
                std::size_t dstart = ++i;
                while (std::isdigit(static_cast<unsigned char>(at(i)))) ++i;
                std::string den(src.substr(dstart, i - dstart));
                mpz_class d(den, 10);
                if (d == 0) throw parse_error("zero denominator in rational literal", pos);
                value = rational(value.numerator(), std::move(d));
            }
            col += static_cast<int>(i - start);
            out.push_back(token{tok::number, std::move(value), digits, pos});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = i;
            while (std::isalnum(static_cast<unsigned char>(at(i))) || at(i) == '_') ++i;
            std::string name(src.substr(start, i - start));
            col += static_cast<int>(i - start);
            const tok kind = name == "sum" ? tok::kw_sum : tok::ident;
            push(kind, std::move(name));
            continue;
        }
        switch (ch) {
            case '+': push(tok::plus, "+"); break;
            case '-': push(tok::minus, "-"); break;
            case '*': push(tok::star, "*"); break;
            case '/': push(tok::slash, "/"); break;
            case '^': push(tok::caret, "^"); break;
            case '(': push(tok::lparen, "("); break;
            case ')': push(tok::rparen, ")"); break;
            case ',': push(tok::comma, ","); break;
            case '=': push(tok::assign, "="); break;
            case '.':
                if (at(i + 1) != '.')
                    throw parse_error("unexpected character '.'", pos);
                push(tok::dotdot, "..");
                ++i;
                ++col;
                break;
            default:
                throw parse_error(std::string("unexpected character '") + ch + "'", pos);
        }
        ++i;
        ++col;
    }
    out.push_back(token{tok::end, rational(), "end of input", {line, col}});
    return out;
}

class parser {
  public:
    explicit parser(std::string_view src) : toks_(lex(src)) {}

    node_ptr run() {
        node_ptr root = expression();
        if (peek().kind != tok::end)
            throw parse_error("unexpected token '" + peek().text + "'", peek().pos);
        return root;
    }

  private:
    const token& peek() const { return toks_[pos_]; }
    token take() { return toks_[pos_++]; }

    token expect(tok kind, const char* what) {
        if (peek().kind != kind)
            throw parse_error(std::string("expected ") + what + " before '" + peek().text + "'",
                              peek().pos);
        return take();
    }

    node_ptr expression() {
        node_ptr lhs = term();
        while (peek().kind == tok::plus || peek().kind == tok::minus) {
            const token op = take();
            node_ptr rhs = term();
            lhs = make_node(binary{op.kind == tok::plus ? binary_op::add : binary_op::sub,
                                   std::move(lhs), std::move(rhs)},
                            op.pos);
        }
        return lhs;
    }

    node_ptr term() {
        node_ptr lhs = unary();
        while (peek().kind == tok::star || peek().kind == tok::slash) {
            const token op = take();
            node_ptr rhs = unary();
            lhs = make_node(binary{op.kind == tok::star ? binary_op::mul : binary_op::div,
                                   std::move(lhs), std::move(rhs)},
                            op.pos);
        }
        return lhs;
    }

    node_ptr unary() {
        if (peek().kind == tok::minus) {
            const token op = take();
            return make_node(negate{unary()}, op.pos);
        }
        return power();
    }

    node_ptr power() {
        node_ptr base = atom();
        if (peek().kind == tok::caret) {
            const token op = take();
            node_ptr exponent = unary();  // right-associative, sign allowed
            return make_node(binary{binary_op::pow, std::move(base), std::move(exponent)},
                             op.pos);
        }
        return base;
    }

    node_ptr atom() {
        const token t = peek();
        switch (t.kind) {
            case tok::number:
                take();
                return make_node(literal{t.num}, t.pos);
            case tok::lparen: {
                take();
                node_ptr inner = expression();
                expect(tok::rparen, "')'");
                return inner;
            }
            case tok::kw_sum: {
                take();
                expect(tok::lparen, "'(' after sum");
                const token index = expect(tok::ident, "index variable");
                expect(tok::assign, "'='");
                node_ptr lower = expression();
                expect(tok::dotdot, "'..'");
                node_ptr upper = expression();
                expect(tok::comma, "','");
                node_ptr body = expression();
                expect(tok::rparen, "')'");
                return make_node(
                    sum{index.text, std::move(lower), std::move(upper), std::move(body)}, t.pos);
            }
            case tok::ident: {
                take();
                if (peek().kind != tok::lparen) return make_node(variable{t.text}, t.pos);
                take();
                std::vector<node_ptr> args;
                args.push_back(expression());
                while (peek().kind == tok::comma) {
                    take();
                    args.push_back(expression());
                }
                expect(tok::rparen, "')'");
                seq_fn fn;
                if (t.text == "F") fn = seq_fn::F;
                else if (t.text == "L") fn = seq_fn::L;
                else if (t.text == "P") fn = seq_fn::P;
                else if (t.text == "Q") fn = seq_fn::Q;
                else if (t.text == "U") fn = seq_fn::U;
                else throw parse_error("unknown function '" + t.text + "'", t.pos);
                if (args.size() != arity(fn))
                    throw parse_error(t.text + " expects " + std::to_string(arity(fn)) +
                                          (arity(fn) == 1 ? " argument, got " : " arguments, got ") +
                                          std::to_string(args.size()),
                                      t.pos);
                return make_node(seq_call{fn, std::move(args)}, t.pos);
            }
            default:
                throw parse_error("expected an expression before '" + t.text + "'", t.pos);
        }
    }

    std::vector<token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline node_ptr parse(std::string_view source) { return detail::parser(source).run(); }

}  // namespace useq::expr
