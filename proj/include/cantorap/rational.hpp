#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cantorap {

/// Exact arbitrary-precision rational scalar.
///
/// Every coordinate in the system is one of these: interval endpoints,
/// deltas, translates, measures, distances. Invariants: denominator > 0,
/// fraction stored in lowest terms, zero is 0/1. Arithmetic is exact; there
/// is no floating-point mode anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);

    /// Accepts "p/q" (q > 0 after sign normalization is not applied: a
    /// negative or zero denominator is rejected) and plain integers "p".
    /// Decimals and anything else are rejected with InvalidInput.
    static Rational parse(std::string_view s);

    /// Lowest-terms "p/q" string; always carries the denominator ("0/1").
    std::string str() const;

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }

    /// Representative in [0, 1): this - floor(this).
    Rational mod1() const;

    mpz_class floor() const;

    /// Exact nonnegative integer power.
    static Rational pow(const Rational& base, unsigned long e);

    /// Lossy; used only for plotting dumps, never in computations.
    double to_double() const { return v_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    const mpq_class& raw() const { return v_; }

private:
    struct canonical_tag {};
    Rational(mpq_class v, canonical_tag) : v_(std::move(v)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace cantorap
