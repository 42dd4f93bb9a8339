#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "pmv/errors.hpp"

namespace pmv {

/// Exact rational scalar.  Always stored in lowest terms with a positive
/// denominator; equality is structural equality of the normalized form.
/// Arbitrary precision throughout, no floating point anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);

    /// Accepts "p" and "p/q" with optional leading '-'; q must be nonzero.
    static std::optional<Rational> parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }

    /// Exact division; the divisor must be nonzero.
    Rational div(const Rational& o) const;
    Rational div_int(long n) const;
    Rational half() const { return div_int(2); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    /// Three-way compare: -1, 0, +1.
    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

} // namespace pmv
