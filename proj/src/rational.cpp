#include "outcat/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace outcat {

namespace {

using int128 = __int128;

long long narrow(int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw Error(std::string("rational overflow in ") + what);
    }
    return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::pow2(int exp) {
    if (exp < -62 || exp > 62) throw Error("pow2 exponent out of range");
    if (exp >= 0) return Rational(1LL << exp, 1);
    return Rational(1, 1LL << (-exp));
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(std::strtoll(text.c_str(), nullptr, 10), 1);
    }
    long long n = std::strtoll(text.substr(0, slash).c_str(), nullptr, 10);
    long long d = std::strtoll(text.substr(slash + 1).c_str(), nullptr, 10);
    return Rational(n, d);
}

Rational Rational::operator+(const Rational& o) const {
    int128 n = int128(num_) * o.den_ + int128(o.num_) * den_;
    int128 d = int128(den_) * o.den_;
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n, "add");
    r.den_ = narrow(d, "add");
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational neg;
    neg.num_ = -o.num_;
    neg.den_ = o.den_;
    return *this + neg;
}

Rational Rational::operator*(const Rational& o) const {
    int128 n = int128(num_) * o.num_;
    int128 d = int128(den_) * o.den_;
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n, "mul");
    r.den_ = narrow(d, "mul");
    return r;
}

bool Rational::operator<(const Rational& o) const {
    return int128(num_) * o.den_ < int128(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace outcat
