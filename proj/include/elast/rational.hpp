#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over arbitrary-precision integers.
 *
 * Values are always stored reduced with a positive denominator, so equality
 * is structural and hashing/ordering never see two spellings of one number.
 * Elasticities are nonnegative, but intermediate quantities (differences in
 * the recovery formulas) may not be, so the sign lives on the numerator.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "elast/error.hpp"

namespace elast {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design of numeric types
    Rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static Rational of(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

    std::string to_string() const { return num_.str() + "/" + den_.str(); }

    Rational operator-() const { return Rational(BigInt(-num_), den_, Reduced{}); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw Error(ErrorCode::InvalidInput, "rational division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const BigInt lhs = x.num_ * y.den_;
        const BigInt rhs = y.num_ * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    struct Reduced {};
    Rational(BigInt n, BigInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;  // > 0
};

/// Floor and ceiling of a / b for b > 0 over arbitrary-precision integers.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

}  // namespace elast
