#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "fancob/error.hpp"

namespace fancob {

/// 64-bit integer whose arithmetic throws ErrorKind::Overflow instead of wrapping.
class CheckedInt {
public:
    using value_type = std::int64_t;

    constexpr CheckedInt() noexcept = default;
    constexpr CheckedInt(value_type v) noexcept : v_(v) {}  // NOLINT(google-explicit-constructor)
    constexpr CheckedInt(int v) noexcept : v_(v) {}         // NOLINT(google-explicit-constructor)

    constexpr value_type value() const noexcept { return v_; }
    explicit constexpr operator value_type() const noexcept { return v_; }
    explicit operator double() const noexcept { return static_cast<double>(v_); }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        value_type r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("+", a, b);
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        value_type r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("-", a, b);
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        value_type r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("*", a, b);
        return r;
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
        if (b.v_ == 0) fail(ErrorKind::Overflow, "integer division by zero");
        if (a.v_ == std::numeric_limits<value_type>::min() && b.v_ == -1) overflow("/", a, b);
        return a.v_ / b.v_;
    }
    friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
        if (b.v_ == 0) fail(ErrorKind::Overflow, "integer modulo by zero");
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    CheckedInt operator-() const {
        if (v_ == std::numeric_limits<value_type>::min()) overflow("neg", *this, 0);
        return -v_;
    }
    CheckedInt operator+() const noexcept { return *this; }

    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
    CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }
    CheckedInt& operator/=(CheckedInt o) { return *this = *this / o; }

    friend constexpr bool operator==(CheckedInt a, CheckedInt b) noexcept = default;
    friend constexpr auto operator<=>(CheckedInt a, CheckedInt b) noexcept { return a.v_ <=> b.v_; }

    friend CheckedInt abs(CheckedInt a) { return a.v_ < 0 ? -a : a; }
    friend CheckedInt gcd(CheckedInt a, CheckedInt b) {
        a = abs(a);
        b = abs(b);
        while (b.v_ != 0) {
            value_type t = a.v_ % b.v_;
            a = b;
            b = t;
        }
        return a;
    }
    friend int sign(CheckedInt a) noexcept { return (a.v_ > 0) - (a.v_ < 0); }

    friend std::ostream& operator<<(std::ostream& os, CheckedInt a) { return os << a.v_; }

private:
    [[noreturn]] static void overflow(const char* op, CheckedInt a, CheckedInt b) {
        fail(ErrorKind::Overflow,
             "64-bit overflow in " + std::to_string(a.v_) + " " + op + " " + std::to_string(b.v_));
    }

    value_type v_ = 0;
};

using Integer = CheckedInt;

}  // namespace fancob

namespace Eigen {

template <>
struct NumTraits<fancob::CheckedInt> : GenericNumTraits<fancob::CheckedInt> {
    using Real = fancob::CheckedInt;
    using NonInteger = double;
    using Nested = fancob::CheckedInt;
    using Literal = fancob::CheckedInt;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3,
    };
    static inline fancob::CheckedInt epsilon() { return 0; }
    static inline fancob::CheckedInt dummy_precision() { return 0; }
    static inline int digits10() { return 18; }
    static inline fancob::CheckedInt highest() { return std::numeric_limits<std::int64_t>::max(); }
    static inline fancob::CheckedInt lowest() { return std::numeric_limits<std::int64_t>::min(); }
};

}  // namespace Eigen
