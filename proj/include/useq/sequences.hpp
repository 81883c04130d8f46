#pragma once

#include "rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace useq {

/**
 * Parameters of the unified second-order recurrence
 *
 *   U_{n+2} = r*U_{n+1} + U_n,   U_0 = b - r*a,   U_1 = a.
 *
 * r = 1 is the generalized Fibonacci family, r = 2 the generalized Pell
 * family. Negative indices follow the backward recurrence
 * U_n = U_{n+2} - r*U_{n+1}, the unique extension of the relation to all
 * of Z (the companion matrix has determinant -1, so no division is needed).
 */
struct sequence_params {
    rational a;
    rational b;
    rational r;

    rational seed0() const { return b - r * a; }     // U_0
    const rational& seed1() const { return a; }      // U_1

    friend bool operator==(const sequence_params& x, const sequence_params& y) {
        return x.a == y.a && x.b == y.b && x.r == y.r;
    }
};

enum class family_kind {
    fibonacci,
    lucas,
    pell,
    pell_lucas,
    generalized_fibonacci,
    generalized_pell,
    custom,
};

/// A named specialization of the unified family.
struct sequence_family {
    family_kind kind = family_kind::custom;
    rational a;
    rational b;
    rational r;  // only meaningful for custom

    static sequence_family fibonacci() { return {family_kind::fibonacci, 1, 1, 1}; }
    static sequence_family lucas() { return {family_kind::lucas, 1, 3, 1}; }
    static sequence_family pell() { return {family_kind::pell, 1, 2, 2}; }
    static sequence_family pell_lucas() { return {family_kind::pell_lucas, 2, 6, 2}; }
    static sequence_family generalized_fibonacci(rational a, rational b) {
        return {family_kind::generalized_fibonacci, std::move(a), std::move(b), 1};
    }
    static sequence_family generalized_pell(rational a, rational b) {
        return {family_kind::generalized_pell, std::move(a), std::move(b), 2};
    }
    static sequence_family custom(rational a, rational b, rational r) {
        return {family_kind::custom, std::move(a), std::move(b), std::move(r)};
    }
};

inline sequence_params resolve(const sequence_family& f) {
    switch (f.kind) {
        case family_kind::fibonacci: return {1, 1, 1};
        case family_kind::lucas: return {1, 3, 1};
        case family_kind::pell: return {1, 2, 2};
        case family_kind::pell_lucas: return {2, 6, 2};
        case family_kind::generalized_fibonacci: return {f.a, f.b, 1};
        case family_kind::generalized_pell: return {f.a, f.b, 2};
        case family_kind::custom: return {f.a, f.b, f.r};
    }
    throw std::logic_error("unreachable family kind");
}

/// CLI spelling of the four named families; nullopt for anything else.
inline std::optional<sequence_family> family_from_name(std::string_view name) {
    if (name == "fibonacci") return sequence_family::fibonacci();
    if (name == "lucas") return sequence_family::lucas();
    if (name == "pell") return sequence_family::pell();
    if (name == "pell-lucas") return sequence_family::pell_lucas();
    return std::nullopt;
}

/// (U_n, U_{n+1}) by stepping the recurrence |n| times from the seeds.
inline std::pair<rational, rational> term_pair(const sequence_params& p, std::int64_t n) {
    if (p.a.is_integer() && p.b.is_integer() && p.r.is_integer()) {
        // integer parameters: roll bare mpz values, fused multiply-adds in place
        const mpz_class& r = p.r.numerator();
        const bool unit_r = r == 1;  // plain adds beat addmul-by-1 on huge terms
        mpz_class u0 = p.b.numerator() - r * p.a.numerator();
        mpz_class u1 = p.a.numerator();
        if (n >= 0) {
            for (std::int64_t i = 0; i < n; ++i) {
                if (unit_r)
                    u0 += u1;      // U_k + U_{k+1} = U_{k+2}
                else
                    u0 += r * u1;  // U_k + r*U_{k+1} = U_{k+2}
                std::swap(u0, u1);
            }
        } else {
            for (std::int64_t i = 0; i > n; --i) {
                if (unit_r)
                    u1 -= u0;      // U_{k+1} - U_k = U_{k-1}
                else
                    u1 -= r * u0;  // U_{k+1} - r*U_k = U_{k-1}
                std::swap(u0, u1);
            }
        }
        return {rational(std::move(u0)), rational(std::move(u1))};
    }
    rational u0 = p.seed0();
    rational u1 = p.a;
    if (n >= 0) {
        for (std::int64_t i = 0; i < n; ++i) {
            rational next = p.r * u1 + u0;
            u0 = std::move(u1);
            u1 = std::move(next);
        }
    } else {
        for (std::int64_t i = 0; i > n; --i) {
            rational prev = u1 - p.r * u0;
            u1 = std::move(u0);
            u0 = std::move(prev);
        }
    }
    return {std::move(u0), std::move(u1)};
}

/// U_n for any integer n, by the recurrence itself. O(|n|) scalar operations.
inline rational term(const sequence_params& p, std::int64_t n) {
    return term_pair(p, n).first;
}

/**
 * (V_n, V_{n+1}) of the fundamental solution V_0 = 0, V_1 = 1 of
 * V_{k+2} = r*V_{k+1} + V_k, computed by doubling:
 *
 *   V_{2k}   = V_k * (2*V_{k+1} - r*V_k)
 *   V_{2k+1} = V_k^2 + V_{k+1}^2
 *
 * O(log n) scalar multiplications.
 */
inline std::pair<rational, rational> fundamental_pair(const rational& r, std::uint64_t n) {
    rational lo(0);  // V_k
    rational hi(1);  // V_{k+1}
    if (n == 0) return {std::move(lo), std::move(hi)};
    int bit = 63;
    while (((n >> bit) & 1u) == 0) --bit;
    for (; bit >= 0; --bit) {
        rational even = lo * (rational(2) * hi - r * lo);
        rational odd = lo * lo + hi * hi;
        if ((n >> bit) & 1u) {
            lo = std::move(odd);                 // V_{2k+1}
            hi = r * lo + even;                  // V_{2k+2}
        } else {
            lo = std::move(even);                // V_{2k}
            hi = std::move(odd);                 // V_{2k+1}
        }
    }
    return {std::move(lo), std::move(hi)};
}

/**
 * U_n by fundamental-pair doubling; agrees with term() for every integer n
 * in O(log |n|) scalar operations. Uses U_n = a*V_n + U_0*V_{n-1} together
 * with V_{-k} = (-1)^{k+1} V_k for negative indices.
 */
inline rational term_fast(const sequence_params& p, std::int64_t n) {
    const std::uint64_t k =
        n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    auto [vk, vk1] = fundamental_pair(p.r, k);
    if (n >= 0) {
        rational vkm1 = vk1 - p.r * vk;  // V_{n-1}
        return p.a * vk + p.seed0() * vkm1;
    }
    // U_{-k} = (-1)^k * (U_0*V_{k+1} - a*V_k)
    rational val = p.seed0() * vk1 - p.a * vk;
    return (k & 1u) ? -val : std::move(val);
}

/// [U_lo, ..., U_hi] in one forward pass. Throws when lo > hi.
inline std::vector<rational> term_range(const sequence_params& p, std::int64_t lo,
                                        std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("term_range: lo > hi");
    const std::size_t count = static_cast<std::size_t>(hi - lo) + 1;
    std::vector<rational> out;
    out.reserve(count);
    auto [u0, u1] = term_pair(p, lo);
    out.push_back(std::move(u0));
    if (count > 1) out.push_back(std::move(u1));
    while (out.size() < count) {
        out.push_back(p.r * out[out.size() - 1] + out[out.size() - 2]);
    }
    return out;
}

}  // namespace useq
