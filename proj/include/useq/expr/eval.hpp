#pragma once

#include "../identities.hpp"
#include "../sequences.hpp"
#include "ast.hpp"
#include "parser.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace useq::expr {

/// Runtime error (unbound variable, division by zero, non-integer index,
/// bound or exponent, zero to a negative power) with a source position.
struct eval_error : std::runtime_error {
    eval_error(const std::string& message, source_pos where)
        : std::runtime_error(where.line > 0 ? std::to_string(where.line) + ":" +
                                                  std::to_string(where.col) + ": " + message
                                            : message),
          pos(where) {}
    source_pos pos;
};

using environment = std::map<std::string, rational>;

namespace detail {

inline std::int64_t integer_operand(const rational& v, const char* what, source_pos pos) {
    const auto n = to_int64(v);
    if (!n) throw eval_error(std::string(what) + " must be an integer, got " + v.str(), pos);
    return *n;
}

class evaluator {
  public:
    explicit evaluator(environment env) : env_(std::move(env)) {}

    rational eval(const node_ptr& n) {
        return std::visit(
            [&](const auto& v) -> rational {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, literal>) {
                    return v.value;
                } else if constexpr (std::is_same_v<T, variable>) {
                    const auto it = env_.find(v.name);
                    if (it == env_.end())
                        throw eval_error("unbound variable '" + v.name + "'", n->pos);
                    return it->second;
                } else if constexpr (std::is_same_v<T, binary>) {
                    return eval_binary(v, n->pos);
                } else if constexpr (std::is_same_v<T, negate>) {
                    return -eval(v.operand);
                } else if constexpr (std::is_same_v<T, seq_call>) {
                    return eval_call(v, n->pos);
                } else {
                    return eval_sum(v, n->pos);
                }
            },
            n->value);
    }

  private:
    rational eval_binary(const binary& b, source_pos pos) {
        rational lhs = eval(b.lhs);
        rational rhs = eval(b.rhs);
        switch (b.op) {
            case binary_op::add: return lhs + rhs;
            case binary_op::sub: return lhs - rhs;
            case binary_op::mul: return lhs * rhs;
            case binary_op::div:
                if (rhs.is_zero()) throw eval_error("division by zero", pos);
                return lhs / rhs;
            case binary_op::pow: {
                const std::int64_t e = integer_operand(rhs, "exponent", pos);
                if (lhs.is_zero() && e < 0)
                    throw eval_error("zero cannot be raised to a negative power", pos);
                return pow(lhs, e);
            }
        }
        throw eval_error("corrupt operator", pos);
    }

    rational eval_call(const seq_call& call, source_pos pos) {
        sequence_params p;
        if (call.fn == seq_fn::U) {
            p = sequence_params{eval(call.args[0]), eval(call.args[1]), eval(call.args[2])};
        } else {
            switch (call.fn) {
                case seq_fn::F: p = {1, 1, 1}; break;
                case seq_fn::L: p = {1, 3, 1}; break;
                case seq_fn::P: p = {1, 2, 2}; break;
                case seq_fn::Q: p = {2, 6, 2}; break;
                default: break;
            }
        }
        const std::int64_t n =
            integer_operand(eval(call.args.back()), "sequence index", pos);
        return term_fast(p, n);
    }

    rational eval_sum(const sum& s, source_pos pos) {
        const std::int64_t lo = integer_operand(eval(s.lower), "sum bound", pos);
        const std::int64_t hi = integer_operand(eval(s.upper), "sum bound", pos);
        if (lo > hi + 1)
            throw eval_error("sum lower bound " + std::to_string(lo) +
                                 " exceeds upper bound " + std::to_string(hi) + " + 1",
                             pos);
        // the index shadows any outer binding of the same name
        std::optional<rational> shadowed;
        const auto it = env_.find(s.index);
        if (it != env_.end()) shadowed = it->second;
        rational acc(0);
        for (std::int64_t i = lo; i <= hi; ++i) {
            env_[s.index] = rational(i);
            acc += eval(s.body);
        }
        if (shadowed)
            env_[s.index] = std::move(*shadowed);
        else
            env_.erase(s.index);
        return acc;
    }

    environment env_;
};

}  // namespace detail

/// Evaluates with every free variable bound by env. Exact; all errors are
/// eval_error with the offending node's position.
inline rational evaluate(const node_ptr& root, const environment& env = {}) {
    return detail::evaluator(env).eval(root);
}

inline rational evaluate(std::string_view source, const environment& env = {}) {
    return evaluate(parse(source), env);
}

/// Parses and evaluates both sides and reports the exact residual.
/// Parse and evaluation failures are rethrown with the side named.
inline identity_report check_equal(std::string_view lhs_source, std::string_view rhs_source,
                                   const environment& env = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto side = [&](std::string_view src, const char* label) {
        try {
            return evaluate(parse(src), env);
        } catch (const parse_error& e) {
            throw parse_error(std::string(label) + " side: " + e.what(), {0, 0});
        } catch (const eval_error& e) {
            throw eval_error(std::string(label) + " side: " + e.what(), {0, 0});
        }
    };
    identity_report rep;
    rep.lhs = side(lhs_source, "left");
    rep.rhs = side(rhs_source, "right");
    rep.residual = rep.lhs - rep.rhs;
    rep.pass = rep.residual.is_zero();
    rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

}  // namespace useq::expr
