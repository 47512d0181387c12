#pragma once

#include <cstdint>
#include <string>

#include "outcat/errors.hpp"

namespace outcat {

// Exact rational arithmetic on int64 numerator/denominator, always kept
// normalized (gcd 1, denominator > 0). Intermediates use 128-bit integers;
// a result outside the 64-bit range throws. The metric values in this
// toolkit are dyadic with denominator at most 2^62, which fits.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);

    // 2^exp for possibly negative exp; |exp| <= 62.
    static Rational pow2(int exp);
    static Rational parse(const std::string& text);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this == o || *this < o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // "p/q", or just "p" when q == 1.
    std::string str() const;

private:
    long long num_;
    long long den_;
};

} // namespace outcat
