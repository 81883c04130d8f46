#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace useq {

/**
 * Arbitrary-precision rational kept in canonical reduced form:
 *
 *   - denominator > 0
 *   - gcd(|numerator|, denominator) == 1
 *
 * Every constructor and operator re-establishes the canonical form, so
 * structural equality coincides with mathematical equality. Integers are
 * rationals with denominator 1; arithmetic takes a shortcut in that case.
 *
 * Big-integer storage is GMP's mpz_class.
 */
class rational {
  public:
    rational() : num_(0), den_(1) {}
    rational(int v) : num_(v), den_(1) {}
    rational(long v) : num_(v), den_(1) {}
    rational(long long v) : num_(static_cast<long>(v)), den_(1) {
        static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
    }
    rational(mpz_class v) : num_(std::move(v)), den_(1) {}

    /// Throws std::invalid_argument when d == 0.
    rational(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
        canonicalize();
    }

    /// Accepts "p" or "p/q" in base 10, optionally signed.
    static rational parse(std::string_view text);

    const mpz_class& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }

    /// "p" when the denominator is 1, else "p/q". Never scientific notation.
    std::string str() const {
        return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
    }

    rational operator-() const { return rational(raw{}, -num_, den_); }

    friend rational operator+(const rational& x, const rational& y) {
        if (x.den_ == 1 && y.den_ == 1) return rational(raw{}, x.num_ + y.num_, 1);
        return rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend rational operator-(const rational& x, const rational& y) {
        if (x.den_ == 1 && y.den_ == 1) return rational(raw{}, x.num_ - y.num_, 1);
        return rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend rational operator*(const rational& x, const rational& y) {
        if (x.den_ == 1 && y.den_ == 1) return rational(raw{}, x.num_ * y.num_, 1);
        return rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    /// Throws std::domain_error when y == 0.
    friend rational operator/(const rational& x, const rational& y) {
        if (y.num_ == 0) throw std::domain_error("rational: division by zero");
        return rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& x, const rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const rational& x, const rational& y) { return !(x == y); }
    friend bool operator<(const rational& x, const rational& y) { return compare(x, y) < 0; }
    friend bool operator<=(const rational& x, const rational& y) { return compare(x, y) <= 0; }
    friend bool operator>(const rational& x, const rational& y) { return compare(x, y) > 0; }
    friend bool operator>=(const rational& x, const rational& y) { return compare(x, y) >= 0; }

    /// Sign of x - y.
    static int compare(const rational& x, const rational& y) {
        if (x.den_ == y.den_) return cmp(x.num_, y.num_);
        return cmp(mpz_class(x.num_ * y.den_), mpz_class(y.num_ * x.den_));
    }

    friend rational pow(const rational& base, long long exp);

  private:
    struct raw {};  // no canonicalization; caller guarantees the invariants
    rational(raw, mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {}

    void canonicalize() {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ == 1) return;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }

    mpz_class num_;
    mpz_class den_;
};

/// Integer power, negative exponents allowed for nonzero bases.
/// pow(x, 0) == 1 for every x, including 0.
inline rational pow(const rational& base, long long exp) {
    if (exp == 0) return rational(1);
    if (exp < 0 && base.is_zero())
        throw std::domain_error("rational: zero cannot be raised to a negative power");
    unsigned long long mag =
        exp < 0 ? -static_cast<unsigned long long>(exp) : static_cast<unsigned long long>(exp);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.numerator().get_mpz_t(), mag);
    mpz_pow_ui(pd.get_mpz_t(), base.denominator().get_mpz_t(), mag);
    // coprime bases stay coprime under powers, so only inversion needs fixing up
    if (exp > 0) return rational(rational::raw{}, std::move(pn), std::move(pd));
    return rational(std::move(pd), std::move(pn));
}

inline rational rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    mpz_class n, d(1);
    try {
        if (slash == std::string_view::npos) {
            n = mpz_class(std::string(s), 10);
        } else {
            n = mpz_class(std::string(trim(s.substr(0, slash))), 10);
            d = mpz_class(std::string(trim(s.substr(slash + 1))), 10);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    }
    return rational(std::move(n), std::move(d));
}

/// n as int64 when it is an integer that fits, otherwise nullopt.
inline std::optional<std::int64_t> to_int64(const rational& v) {
    if (!v.is_integer() || !v.numerator().fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v.numerator().get_si());
}

inline std::ostream& operator<<(std::ostream& os, const rational& v) { return os << v.str(); }

}  // namespace useq
