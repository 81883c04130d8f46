#pragma once

#include "../rational.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace useq::expr {

/// 1-based source location; {0, 0} marks synthetic nodes.
struct source_pos {
    int line = 0;
    int col = 0;
};

enum class binary_op { add, sub, mul, div, pow };

/// The five sequence functions of the language: F(n), L(n), P(n), Q(n)
/// and the fully parameterized U(a, b, r, n).
enum class seq_fn { F, L, P, Q, U };

struct node;
using node_ptr = std::shared_ptr<const node>;

/// Nonnegative by construction when produced by the parser; a leading
/// minus always parses as a negate node.
struct literal {
    rational value;
};

struct variable {
    std::string name;
};

struct binary {
    binary_op op;
    node_ptr lhs;
    node_ptr rhs;
};

struct negate {
    node_ptr operand;
};

struct seq_call {
    seq_fn fn;
    std::vector<node_ptr> args;  // 1 argument, or 4 for U
};

/// sum(index = lower..upper, body); bounds inclusive, index shadows
/// any outer binding of the same name inside body.
struct sum {
    std::string index;
    node_ptr lower;
    node_ptr upper;
    node_ptr body;
};

struct node {
    std::variant<literal, variable, binary, negate, seq_call, sum> value;
    source_pos pos;
};

inline node_ptr make_node(std::variant<literal, variable, binary, negate, seq_call, sum> v,
                          source_pos pos = {}) {
    return std::make_shared<const node>(node{std::move(v), pos});
}

inline constexpr std::size_t arity(seq_fn fn) { return fn == seq_fn::U ? 4 : 1; }

inline constexpr char fn_name(seq_fn fn) {
    switch (fn) {
        case seq_fn::F: return 'F';
        case seq_fn::L: return 'L';
        case seq_fn::P: return 'P';
        case seq_fn::Q: return 'Q';
        case seq_fn::U: return 'U';
    }
    return '?';
}

/// Structural equality; source positions are ignored.
inline bool equal(const node_ptr& x, const node_ptr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->value.index() != y->value.index()) return false;
    return std::visit(
        [&](const auto& xv) -> bool {
            using T = std::decay_t<decltype(xv)>;
            const auto& yv = std::get<T>(y->value);
            if constexpr (std::is_same_v<T, literal>) {
                return xv.value == yv.value;
            } else if constexpr (std::is_same_v<T, variable>) {
                return xv.name == yv.name;
            } else if constexpr (std::is_same_v<T, binary>) {
                return xv.op == yv.op && equal(xv.lhs, yv.lhs) && equal(xv.rhs, yv.rhs);
            } else if constexpr (std::is_same_v<T, negate>) {
                return equal(xv.operand, yv.operand);
            } else if constexpr (std::is_same_v<T, seq_call>) {
                if (xv.fn != yv.fn || xv.args.size() != yv.args.size()) return false;
                for (std::size_t i = 0; i < xv.args.size(); ++i)
                    if (!equal(xv.args[i], yv.args[i])) return false;
                return true;
            } else {
                return xv.index == yv.index && equal(xv.lower, yv.lower) &&
                       equal(xv.upper, yv.upper) && equal(xv.body, yv.body);
            }
        },
        x->value);
}

namespace detail {

// Binding strength used by the printer. Atoms bind tightest; the pow
// operand rules mirror the grammar (left of ^ is an atom, right a unary).
inline int prec(const node& n) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, binary>) {
                switch (v.op) {
                    case binary_op::add:
                    case binary_op::sub: return 0;
                    case binary_op::mul:
                    case binary_op::div: return 1;
                    case binary_op::pow: return 3;
                }
                return 0;
            } else if constexpr (std::is_same_v<T, negate>) {
                return 2;
            } else {
                return 4;
            }
        },
        n.value);
}

inline void print(const node_ptr& n, std::string& out);

inline void print_child(const node_ptr& child, int min_prec, std::string& out) {
    if (prec(*child) < min_prec) {
        out += '(';
        print(child, out);
        out += ')';
    } else {
        print(child, out);
    }
}

inline void print(const node_ptr& n, std::string& out) {
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, literal>) {
                out += v.value.str();
            } else if constexpr (std::is_same_v<T, variable>) {
                out += v.name;
            } else if constexpr (std::is_same_v<T, binary>) {
                // left-associative chains print unparenthesized on the left;
                // '^' is right-associative and its left operand must be an atom
                switch (v.op) {
                    case binary_op::add:
                        print_child(v.lhs, 0, out);
                        out += " + ";
                        print_child(v.rhs, 1, out);
                        break;
                    case binary_op::sub:
                        print_child(v.lhs, 0, out);
                        out += " - ";
                        print_child(v.rhs, 1, out);
                        break;
                    case binary_op::mul:
                        print_child(v.lhs, 1, out);
                        out += " * ";
                        print_child(v.rhs, 2, out);
                        break;
                    case binary_op::div:
                        print_child(v.lhs, 1, out);
                        out += " / ";
                        print_child(v.rhs, 2, out);
                        break;
                    case binary_op::pow:
                        print_child(v.lhs, 4, out);
                        out += " ^ ";
                        print_child(v.rhs, 2, out);
                        break;
                }
            } else if constexpr (std::is_same_v<T, negate>) {
                out += '-';
                print_child(v.operand, 2, out);
            } else if constexpr (std::is_same_v<T, seq_call>) {
                out += fn_name(v.fn);
                out += '(';
                for (std::size_t i = 0; i < v.args.size(); ++i) {
                    if (i) out += ", ";
                    print(v.args[i], out);
                }
                out += ')';
            } else {
                out += "sum(";
                out += v.index;
                out += " = ";
                print(v.lower, out);
                out += "..";
                print(v.upper, out);
                out += ", ";
                print(v.body, out);
                out += ')';
            }
        },
        n->value);
}

}  // namespace detail

/// Renders the tree so that parse(to_string(t)) is structurally equal to t.
/// Binary operators are always spaced, so a printed division of integer
/// literals cannot be re-lexed as a rational literal.
inline std::string to_string(const node_ptr& n) {
    std::string out;
    detail::print(n, out);
    return out;
}

}  // namespace useq::expr
