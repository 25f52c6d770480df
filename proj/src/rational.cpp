#include "cantorap/rational.hpp"

#include <cctype>
#include <ostream>

#include "cantorap/errors.hpp"

namespace cantorap {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw InvalidInput("not a rational: \"" + std::string(whole) +
                           "\" (expected \"p/q\" or an integer; decimals are rejected)");
    }
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, s), mpz_class(1));
    }
    mpz_class num = parse_integer(s.substr(0, slash), s);
    std::string_view den_sv = s.substr(slash + 1);
    if (!all_digits(den_sv)) {
        throw InvalidInput("not a rational: \"" + std::string(s) +
                           "\" (denominator must be a positive integer)");
    }
    mpz_class den(std::string(den_sv), 10);
    if (den == 0) throw InvalidInput("rational with zero denominator: \"" + std::string(s) + "\"");
    return Rational(num, den);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::mod1() const {
    mpq_class r = v_ - mpq_class(floor());
    return Rational(std::move(r), canonical_tag{});
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::pow(const Rational& base, unsigned long e) {
    // num and den are coprime, so their powers are too: no re-canonicalization.
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.v_.get_den_mpz_t(), e);
    mpq_class r(n, d);
    return Rational(std::move(r), canonical_tag{});
}

Rational Rational::operator-() const {
    mpq_class r(-v_);
    return Rational(std::move(r), canonical_tag{});
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace cantorap
