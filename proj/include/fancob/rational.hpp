#pragma once

#include <compare>
#include <ostream>

#include "fancob/checked_int.hpp"

namespace fancob {

/// Exact rational number num/den with den > 0 and gcd(num, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(Integer n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n) {}      // NOLINT(google-explicit-constructor)
    Rational(Integer n, Integer d) : num_(n), den_(d) {
        if (den_ == 0) fail(ErrorKind::Overflow, "rational with zero denominator");
        normalize();
    }

    Integer num() const noexcept { return num_; }
    Integer den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Integer g = gcd(a.den_, b.den_);
        return {a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), (a.den_ / g) * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Integer g1 = gcd(a.num_, b.den_);
        Integer g2 = gcd(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return {(a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1)};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) fail(ErrorKind::Overflow, "rational division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend int sign(const Rational& a) noexcept { return sign(a.num_); }
    friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a) {
        os << a.num_;
        if (a.den_ != 1) os << '/' << a.den_;
        return os;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = gcd(num_, den_);
        if (g > 1) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    Integer num_ = 0;
    Integer den_ = 1;
};

}  // namespace fancob

namespace Eigen {

template <>
struct NumTraits<fancob::Rational> : GenericNumTraits<fancob::Rational> {
    using Real = fancob::Rational;
    using NonInteger = fancob::Rational;
    using Nested = fancob::Rational;
    using Literal = fancob::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8,
    };
    static inline fancob::Rational epsilon() { return 0; }
    static inline fancob::Rational dummy_precision() { return 0; }
    static inline int digits10() { return 18; }
};

}  // namespace Eigen
