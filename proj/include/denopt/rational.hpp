#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace denopt {

/// Exact rational number with int64 numerator and positive int64 denominator,
/// always stored in lowest terms. Intermediate products are evaluated in
/// 128-bit arithmetic; results that do not fit back into int64 throw
/// std::overflow_error.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) { assign(num, den); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Exact comparisons by cross multiplication; denominators are positive.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Renders as "p/q", denominator included even when it is 1.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    using i128 = __int128;

    static i128 gcd_i128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_i128(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd_i128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 kMax = INT64_MAX;
        constexpr i128 kMin = INT64_MIN;
        if (num > kMax || num < kMin || den > kMax)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    void assign(long long num, long long den) {
        Rational r = from_i128(num, den);
        num_ = r.num_;
        den_ = r.den_;
    }

    long long num_;
    long long den_;
};

}  // namespace denopt
