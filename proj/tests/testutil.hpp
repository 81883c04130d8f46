#pragma once

#include <useq/rational.hpp>

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>

namespace testutil {

using useq::rational;

// ---------------------------------------------------------------------
// Independent oracles. These re-derive everything from the recurrence
// definitions with their own loops so that library results are checked
// against a second route, not against themselves.
// ---------------------------------------------------------------------

/// Direct unroller of U_{n+2} = r*U_{n+1} + U_n, U_0 = b - r*a, U_1 = a,
/// extended backwards by U_n = U_{n+2} - r*U_{n+1}.
inline rational naive_term(const rational& a, const rational& b, const rational& r,
                           std::int64_t n) {
    rational u0 = b - r * a;
    rational u1 = a;
    if (n >= 0) {
        for (std::int64_t k = 0; k < n; ++k) {
            rational u2 = r * u1 + u0;
            u0 = u1;
            u1 = u2;
        }
        return u0;
    }
    for (std::int64_t k = 0; k > n; --k) {
        rational um = u1 - r * u0;
        u1 = u0;
        u0 = um;
    }
    return u0;
}

/// Generalized Fibonacci recursion unrolled as displayed: G_0 = b - a,
/// G_1 = a, G_{n+2} = G_{n+1} + G_n. Forward indices only.
inline rational naive_genfib(const rational& a, const rational& b, std::int64_t n) {
    rational g0 = b - a;
    rational g1 = a;
    for (std::int64_t k = 0; k < n; ++k) {
        rational g2 = g1 + g0;
        g0 = g1;
        g1 = g2;
    }
    return g0;
}

/// Generalized Pell recursion unrolled as displayed: P_0 = b - 2a,
/// P_1 = a, P_{n+2} = 2*P_{n+1} + P_n. Forward indices only.
inline rational naive_genpell(const rational& a, const rational& b, std::int64_t n) {
    rational p0 = b - rational(2) * a;
    rational p1 = a;
    for (std::int64_t k = 0; k < n; ++k) {
        rational p2 = rational(2) * p1 + p0;
        p0 = p1;
        p1 = p2;
    }
    return p0;
}

/// Power by literal repeated multiplication; negative exponents via 1/x.
inline rational opow(const rational& x, std::int64_t e) {
    rational acc(1);
    const rational base = e < 0 ? rational(1) / x : x;
    const std::int64_t k = e < 0 ? -e : e;
    for (std::int64_t i = 0; i < k; ++i) acc *= base;
    return acc;
}

/// The master right side summed with naive terms, used to cross-check the
/// library's summation route.
inline rational oracle_master_rhs(const rational& a, const rational& b, const rational& r,
                                  const rational& c, std::int64_t m) {
    rational acc = b - r * a;
    for (std::int64_t i = 0; i <= m; ++i)
        acc += opow(c, i) * ((r - 1) * naive_term(a, b, r, i) +
                             (c - 1) * naive_term(a, b, r, i + 1) + naive_term(a, b, r, i - 1));
    return acc;
}

// ---------------------------------------------------------------------
// Random generators (fixed seeds in the tests keep runs reproducible).
// ---------------------------------------------------------------------

inline rational rnd_rational(std::mt19937_64& rng, long num_range = 9, long den_range = 5) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline rational rnd_nonzero_rational(std::mt19937_64& rng, long num_range = 9,
                                     long den_range = 5) {
    for (;;) {
        rational v = rnd_rational(rng, num_range, den_range);
        if (!v.is_zero()) return v;
    }
}

// ---------------------------------------------------------------------
// Driving the CLI binary.
// ---------------------------------------------------------------------

struct cli_result {
    int code = -1;
    std::string out;
};

/// Runs `binary + " " + args` through the shell, capturing stdout.
/// stderr is folded into stdout when merge_stderr is set, else dropped.
inline cli_result run_cli(const std::string& binary, const std::string& args,
                          bool merge_stderr = false) {
    const std::string cmd =
        binary + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    cli_result res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
    return res;
}

}  // namespace testutil
