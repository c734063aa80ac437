#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace barbell {

// Signed arbitrary-precision integer, base 2^32 limbs.  Schoolbook
// multiplication and Knuth long division; plenty for the fraction-free
// eliminations this project runs, where entries stay in the hundreds of bits.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Truncated quotient and remainder, sign of remainder follows the
    // dividend (like C integer division).
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    // Exact division; throws if the remainder is nonzero.
    BigInt divexact(const BigInt& d) const;

    static BigInt gcd(BigInt a, BigInt b);

    int compare(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    double to_double() const;
    bool fits_longlong() const;
    long long to_longlong() const;  // throws when out of range

private:
    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);  // a >= b
    void normalize();

    int sign_ = 0;                 // 0 iff mag_ empty
    std::vector<uint32_t> mag_;    // little-endian limbs, no leading zeros
};

}  // namespace barbell
