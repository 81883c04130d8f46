#pragma once

#include "sequences.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace useq {

/**
 * The identity registry. Every entry is one weighted-sum identity of the
 * unified family, represented as two independently evaluable sides:
 *
 *   master        c^(m+1)*U_{m+1} = b - r*a + sum_{i=0}^{m} c^i*((r-1)*U_i + (c-1)*U_{i+1} + U_{i-1})
 *   gen-fib       the r = 1 instance (generalized Fibonacci)
 *   fib-c         gen-fib at a = b = 1
 *   sury          fib-c at c = 2, right side written over Lucas numbers
 *   marques       fib-c at c = 3, right side split into a Lucas and a Fibonacci sum
 *   lucas-c       gen-fib at a = 1, b = 3
 *   gen-fib-c1    gen-fib at c = 1
 *   gen-pell      the r = 2 instance (generalized Pell)
 *   pell-c        gen-pell at a = 1, b = 2, right side using Pell and Pell-Lucas numbers
 *   pell-c2       pell-c at c = 2
 *   pell-lucas-c  gen-pell at a = 2, b = 6
 *   gen-pell-c1   gen-pell at c = 1
 *
 * Left and right sides never share code beyond the term computation, and
 * each right side is a literal term-by-term evaluation of the displayed
 * sum, so a verification cannot trivially agree with itself.
 */
enum class identity_id {
    master,
    gen_fib,
    fib_c,
    sury,
    marques,
    lucas_c,
    gen_fib_c1,
    gen_pell,
    pell_c,
    pell_c2,
    pell_lucas_c,
    gen_pell_c1,
};

struct identity_info {
    identity_id id;
    std::string_view name;
    // pinned parameters; disengaged means the parameter is free
    std::optional<rational> pin_a, pin_b, pin_r, pin_c;
    // both sides in the expression language, with a, b, c, m free as pinned above
    std::string_view lhs_expr;
    std::string_view rhs_expr;
};

inline const std::array<identity_info, 12>& identity_registry() {
    static const std::array<identity_info, 12> table = {{
        {identity_id::master, "master", {}, {}, {}, {},
         "c^(m+1) * U(a,b,r,m+1)",
         "b - r*a + sum(i=0..m, c^i * ((r-1)*U(a,b,r,i) + (c-1)*U(a,b,r,i+1) + U(a,b,r,i-1)))"},
        {identity_id::gen_fib, "gen-fib", {}, {}, rational(1), {},
         "c^(m+1) * U(a,b,1,m+1)",
         "b - a + sum(i=0..m, c^i * ((c-1)*U(a,b,1,i+1) + U(a,b,1,i-1)))"},
        {identity_id::fib_c, "fib-c", rational(1), rational(1), rational(1), {},
         "c^(m+1) * F(m+1)",
         "sum(i=0..m, c^i * ((c-1)*F(i+1) + F(i-1)))"},
        {identity_id::sury, "sury", rational(1), rational(1), rational(1), rational(2),
         "2^(m+1) * F(m+1)",
         "sum(i=0..m, 2^i * L(i))"},
        {identity_id::marques, "marques", rational(1), rational(1), rational(1), rational(3),
         "3^(m+1) * F(m+1)",
         "sum(i=0..m, 3^i * L(i)) + sum(i=0..m+1, 3^(i-1) * F(i))"},
        {identity_id::lucas_c, "lucas-c", rational(1), rational(3), rational(1), {},
         "c^(m+1) * L(m+1)",
         "2 + sum(i=0..m, c^i * ((c-1)*L(i+1) + L(i-1)))"},
        {identity_id::gen_fib_c1, "gen-fib-c1", {}, {}, rational(1), rational(1),
         "U(a,b,1,m+1)",
         "b - a + sum(i=0..m, U(a,b,1,i-1))"},
        {identity_id::gen_pell, "gen-pell", {}, {}, rational(2), {},
         "c^(m+1) * U(a,b,2,m+1)",
         "b - 2*a + sum(i=0..m, c^i * (U(a,b,2,i) + (c-1)*U(a,b,2,i+1) + U(a,b,2,i-1)))"},
        {identity_id::pell_c, "pell-c", rational(1), rational(2), rational(2), {},
         "c^(m+1) * P(m+1)",
         "sum(i=0..m, c^i * (P(i) + (c-2)*P(i+1) + Q(i)))"},
        {identity_id::pell_c2, "pell-c2", rational(1), rational(2), rational(2), rational(2),
         "2^(m+1) * P(m+1)",
         "sum(i=0..m, 2^i * (P(i) + Q(i)))"},
        {identity_id::pell_lucas_c, "pell-lucas-c", rational(2), rational(6), rational(2), {},
         "c^(m+1) * Q(m+1)",
         "2 + sum(i=0..m, c^i * (Q(i) + (c-1)*Q(i+1) + Q(i-1)))"},
        {identity_id::gen_pell_c1, "gen-pell-c1", {}, {}, rational(2), rational(1),
         "U(a,b,2,m+1)",
         "b - 2*a + sum(i=0..m, U(a,b,2,i) + U(a,b,2,i-1))"},
    }};
    return table;
}

inline const identity_info& info(identity_id id) {
    for (const auto& e : identity_registry())
        if (e.id == id) return e;
    throw std::logic_error("unknown identity id");
}

inline std::optional<identity_id> identity_from_name(std::string_view name) {
    for (const auto& e : identity_registry())
        if (e.name == name) return e.id;
    return std::nullopt;
}

/// One checkable claim: an identity with all parameters bound.
struct identity_instance {
    identity_id id = identity_id::master;
    sequence_params params;  // pins already applied
    rational c = 1;          // 1 for the c = 1 corollaries
    std::int64_t m = 0;
};

struct identity_report {
    std::optional<identity_instance> instance;
    rational lhs;
    rational rhs;
    rational residual;  // lhs - rhs
    bool pass = false;  // residual == 0
    std::chrono::nanoseconds elapsed{0};
};

namespace detail {

inline void require_m(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
}
inline void require_c(const rational& c) {
    if (c.is_zero()) throw std::invalid_argument("c must be nonzero");
}

}  // namespace detail

using side_pair = std::pair<rational, rational>;

/// c^(m+1) * U_{m+1}, the closed-form side of the master identity.
inline rational lhs_master(const sequence_params& p, const rational& c, std::int64_t m) {
    detail::require_c(c);
    detail::require_m(m);
    return pow(c, m + 1) * term_fast(p, m + 1);
}

/// b - r*a + sum_{i=0}^{m} c^i*((r-1)*U_i + (c-1)*U_{i+1} + U_{i-1}),
/// summed term by term; this is the brute-force side.
inline rational rhs_master(const sequence_params& p, const rational& c, std::int64_t m) {
    detail::require_c(c);
    detail::require_m(m);
    const auto u = term_range(p, -1, m + 1);  // u[k] = U_{k-1}
    const rational rm1 = p.r - 1;
    const rational cm1 = c - 1;
    rational acc = p.b - p.r * p.a;
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * (rm1 * u[i + 1] + cm1 * u[i + 2] + u[i]);
        cp *= c;
    }
    return acc;
}

inline side_pair sides_master(const sequence_params& p, const rational& c, std::int64_t m) {
    return {lhs_master(p, c, m), rhs_master(p, c, m)};
}

/// c^(m+1)*G_{m+1} = b - a + sum c^i*((c-1)*G_{i+1} + G_{i-1}) over (a, b, 1).
inline side_pair sides_gen_fib(const rational& a, const rational& b, const rational& c,
                               std::int64_t m) {
    detail::require_c(c);
    detail::require_m(m);
    const sequence_params p{a, b, 1};
    const auto g = term_range(p, -1, m + 1);  // g[k] = G_{k-1}
    const rational cm1 = c - 1;
    rational acc = b - a;
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * (cm1 * g[i + 2] + g[i]);
        cp *= c;
    }
    return {pow(c, m + 1) * term_fast(p, m + 1), std::move(acc)};
}

/// c^(m+1)*F_{m+1} = sum c^i*((c-1)*F_{i+1} + F_{i-1}); the b - a constant vanishes.
inline side_pair sides_fib_c(const rational& c, std::int64_t m) {
    detail::require_c(c);
    detail::require_m(m);
    const sequence_params fib{1, 1, 1};
    const auto f = term_range(fib, -1, m + 1);  // f[k] = F_{k-1}
    const rational cm1 = c - 1;
    rational acc(0);
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * (cm1 * f[i + 2] + f[i]);
        cp *= c;
    }
    return {pow(c, m + 1) * term_fast(fib, m + 1), std::move(acc)};
}

/// 2^(m+1)*F_{m+1} = sum_{i=0}^{m} 2^i*L_i, summed over Lucas terms.
inline side_pair sides_sury(std::int64_t m) {
    detail::require_m(m);
    const sequence_params fib{1, 1, 1};
    const sequence_params lucas{1, 3, 1};
    const auto l = term_range(lucas, 0, m);
    rational acc(0);
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * l[i];
        cp *= 2;
    }
    return {pow(rational(2), m + 1) * term_fast(fib, m + 1), std::move(acc)};
}

/// 3^(m+1)*F_{m+1} = sum_{i=0}^{m} 3^i*L_i + sum_{i=0}^{m+1} 3^(i-1)*F_i.
/// The second sum starts, as displayed, at i = 0 with a 3^(-1) factor.
inline side_pair sides_marques(std::int64_t m) {
    detail::require_m(m);
    const sequence_params fib{1, 1, 1};
    const sequence_params lucas{1, 3, 1};
    const auto l = term_range(lucas, 0, m);
    const auto f = term_range(fib, 0, m + 1);
    rational acc(0);
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * l[i];
        cp *= 3;
    }
    rational cpf = pow(rational(3), -1);
    for (std::int64_t i = 0; i <= m + 1; ++i) {
        acc += cpf * f[i];
        cpf *= 3;
    }
    return {pow(rational(3), m + 1) * term_fast(fib, m + 1), std::move(acc)};
}

/// c^(m+1)*L_{m+1} = 2 + sum c^i*((c-1)*L_{i+1} + L_{i-1}).
inline side_pair sides_lucas_c(const rational& c, std::int64_t m) {
    detail::require_c(c);
    detail::require_m(m);
    const sequence_params lucas{1, 3, 1};
    const auto l = term_range(lucas, -1, m + 1);  // l[k] = L_{k-1}
    const rational cm1 = c - 1;
    rational acc(2);
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * (cm1 * l[i + 2] + l[i]);
        cp *= c;
    }
    return {pow(c, m + 1) * term_fast(lucas, m + 1), std::move(acc)};
}

/// G_{m+1} = b - a + sum_{i=0}^{m} G_{i-1}, the c = 1 collapse.
inline side_pair sides_gen_fib_c1(const rational& a, const rational& b, std::int64_t m) {
    detail::require_m(m);
    const sequence_params p{a, b, 1};
    const auto g = term_range(p, -1, m - 1);  // G_{-1} .. G_{m-1}
    rational acc = b - a;
    for (const auto& v : g) acc += v;
    return {term_fast(p, m + 1), std::move(acc)};
}

/// c^(m+1)*P_{m+1} = b - 2a + sum c^i*(P_i + (c-1)*P_{i+1} + P_{i-1}) over (a, b, 2).
inline side_pair sides_gen_pell(const rational& a, const rational& b, const rational& c,
                                std::int64_t m) {
    detail::require_c(c);
    detail::require_m(m);
    const sequence_params p{a, b, 2};
    const auto t = term_range(p, -1, m + 1);  // t[k] = P_{k-1}
    const rational cm1 = c - 1;
    rational acc = b - rational(2) * a;
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * (t[i + 1] + cm1 * t[i + 2] + t[i]);
        cp *= c;
    }
    return {pow(c, m + 1) * term_fast(p, m + 1), std::move(acc)};
}

/// c^(m+1)*P_{m+1} = sum c^i*(P_i + (c-2)*P_{i+1} + Q_i); exercises the
/// Q_i = P_{i-1} + P_{i+1} substitution by mixing both Pell families.
inline side_pair sides_pell_c(const rational& c, std::int64_t m) {
    detail::require_c(c);
    detail::require_m(m);
    const sequence_params pell{1, 2, 2};
    const sequence_params pl{2, 6, 2};
    const auto pt = term_range(pell, 0, m + 1);
    const auto qt = term_range(pl, 0, m);
    const rational cm2 = c - 2;
    rational acc(0);
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * (pt[i] + cm2 * pt[i + 1] + qt[i]);
        cp *= c;
    }
    return {pow(c, m + 1) * term_fast(pell, m + 1), std::move(acc)};
}

/// 2^(m+1)*P_{m+1} = sum_{i=0}^{m} 2^i*(P_i + Q_i).
inline side_pair sides_pell_c2(std::int64_t m) {
    detail::require_m(m);
    const sequence_params pell{1, 2, 2};
    const sequence_params pl{2, 6, 2};
    const auto pt = term_range(pell, 0, m);
    const auto qt = term_range(pl, 0, m);
    rational acc(0);
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * (pt[i] + qt[i]);
        cp *= 2;
    }
    return {pow(rational(2), m + 1) * term_fast(pell, m + 1), std::move(acc)};
}

/// c^(m+1)*Q_{m+1} = 2 + sum c^i*(Q_i + (c-1)*Q_{i+1} + Q_{i-1}).
inline side_pair sides_pell_lucas_c(const rational& c, std::int64_t m) {
    detail::require_c(c);
    detail::require_m(m);
    const sequence_params pl{2, 6, 2};
    const auto q = term_range(pl, -1, m + 1);  // q[k] = Q_{k-1}
    const rational cm1 = c - 1;
    rational acc(2);
    rational cp(1);
    for (std::int64_t i = 0; i <= m; ++i) {
        acc += cp * (q[i + 1] + cm1 * q[i + 2] + q[i]);
        cp *= c;
    }
    return {pow(c, m + 1) * term_fast(pl, m + 1), std::move(acc)};
}

/// P_{m+1} = b - 2a + sum_{i=0}^{m} (P_i + P_{i-1}), the c = 1 collapse.
inline side_pair sides_gen_pell_c1(const rational& a, const rational& b, std::int64_t m) {
    detail::require_m(m);
    const sequence_params p{a, b, 2};
    const auto t = term_range(p, -1, m);  // t[k] = P_{k-1}
    rational acc = b - rational(2) * a;
    for (std::int64_t i = 0; i <= m; ++i) acc += t[i + 1] + t[i];
    return {term_fast(p, m + 1), std::move(acc)};
}

/**
 * Binds an identity's parameters, applying registry pins.
 *
 * Free parameters must be provided; pinned parameters may be omitted or
 * must match the pin. Throws std::invalid_argument naming the violated
 * pin or the missing parameter.
 */
inline identity_instance make_instance(identity_id id, std::optional<rational> a,
                                       std::optional<rational> b, std::optional<rational> r,
                                       std::optional<rational> c, std::int64_t m) {
    const identity_info& inf = info(id);
    auto bind = [&](const std::optional<rational>& given, const std::optional<rational>& pin,
                    const char* name) -> rational {
        if (pin) {
            if (given && *given != *pin)
                throw std::invalid_argument(std::string(inf.name) + " pins " + name + " = " +
                                            pin->str() + " (got " + given->str() + ")");
            return *pin;
        }
        if (!given)
            throw std::invalid_argument(std::string(inf.name) + " requires parameter " + name);
        return *given;
    };
    identity_instance inst;
    inst.id = id;
    inst.params.a = bind(a, inf.pin_a, "a");
    inst.params.b = bind(b, inf.pin_b, "b");
    inst.params.r = bind(r, inf.pin_r, "r");
    inst.c = bind(c, inf.pin_c, "c");
    detail::require_c(inst.c);
    detail::require_m(m);
    inst.m = m;
    return inst;
}

/// Re-checks an instance against its registry entry (instances can be
/// built by hand, not only through make_instance).
inline void validate(const identity_instance& inst) {
    const identity_info& inf = info(inst.id);
    auto check = [&](const rational& got, const std::optional<rational>& pin, const char* name) {
        if (pin && got != *pin)
            throw std::invalid_argument(std::string(inf.name) + " pins " + name + " = " +
                                        pin->str() + " (got " + got.str() + ")");
    };
    check(inst.params.a, inf.pin_a, "a");
    check(inst.params.b, inf.pin_b, "b");
    check(inst.params.r, inf.pin_r, "r");
    check(inst.c, inf.pin_c, "c");
    detail::require_c(inst.c);
    detail::require_m(inst.m);
}

/// Evaluates both sides independently and reports the exact residual.
inline identity_report evaluate(const identity_instance& inst) {
    validate(inst);
    const auto t0 = std::chrono::steady_clock::now();
    side_pair sides;
    switch (inst.id) {
        case identity_id::master:
            sides = sides_master(inst.params, inst.c, inst.m);
            break;
        case identity_id::gen_fib:
            sides = sides_gen_fib(inst.params.a, inst.params.b, inst.c, inst.m);
            break;
        case identity_id::fib_c:
            sides = sides_fib_c(inst.c, inst.m);
            break;
        case identity_id::sury:
            sides = sides_sury(inst.m);
            break;
        case identity_id::marques:
            sides = sides_marques(inst.m);
            break;
        case identity_id::lucas_c:
            sides = sides_lucas_c(inst.c, inst.m);
            break;
        case identity_id::gen_fib_c1:
            sides = sides_gen_fib_c1(inst.params.a, inst.params.b, inst.m);
            break;
        case identity_id::gen_pell:
            sides = sides_gen_pell(inst.params.a, inst.params.b, inst.c, inst.m);
            break;
        case identity_id::pell_c:
            sides = sides_pell_c(inst.c, inst.m);
            break;
        case identity_id::pell_c2:
            sides = sides_pell_c2(inst.m);
            break;
        case identity_id::pell_lucas_c:
            sides = sides_pell_lucas_c(inst.c, inst.m);
            break;
        case identity_id::gen_pell_c1:
            sides = sides_gen_pell_c1(inst.params.a, inst.params.b, inst.m);
            break;
    }
    const auto t1 = std::chrono::steady_clock::now();
    identity_report rep;
    rep.instance = inst;
    rep.lhs = std::move(sides.first);
    rep.rhs = std::move(sides.second);
    rep.residual = rep.lhs - rep.rhs;
    rep.pass = rep.residual.is_zero();
    rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);
    return rep;
}

}  // namespace useq
