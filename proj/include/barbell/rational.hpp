#pragma once

#include <string>
#include <string_view>

#include "barbell/bigint.hpp"

namespace barbell {

// Exact rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "p/q", plain integers, and finite decimals like "-0.25".
    static Rational parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    int compare(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator>(const Rational& o) const { return compare(o) > 0; }
    bool operator>=(const Rational& o) const { return compare(o) >= 0; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;
    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    void reduce();

    BigInt num_;
    BigInt den_;
};

}  // namespace barbell
