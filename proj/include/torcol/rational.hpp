#pragma once

#include <cstdint>
#include <string>

#include "torcol/errors.hpp"

namespace torcol {

/// Exact rational in canonical form: reduced, denominator > 0.
/// Charge bookkeeping must stay exact, so intermediates run through
/// 128-bit arithmetic and overflow of the stored 64-bit form throws
/// instead of wrapping.
class Rat {
public:
    constexpr Rat() = default;
    Rat(long long value) : num_(value) {}  // implicit: charges mix with ints
    Rat(long long num, long long den) { *this = reduce(num, den); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool zero() const { return num_ == 0; }
    bool negative() const { return num_ < 0; }
    bool positive() const { return num_ > 0; }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return reduce(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                      i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return reduce(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw Error("division of rational by zero");
        return reduce(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// "p/q" for proper fractions, plain "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rat reduce(i128 num, i128 den) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = INT64_MIN;
        constexpr i128 hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) throw Error("rational overflow");
        Rat r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace torcol
