#include "barbell/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace barbell {

namespace {
constexpr uint64_t kBase = uint64_t(1) << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid overflow negating LLONG_MIN.
    uint64_t mag = v < 0 ? ~uint64_t(v) + 1 : uint64_t(v);
    mag_.push_back(uint32_t(mag & 0xffffffffu));
    if (mag >> 32) mag_.push_back(uint32_t(mag >> 32));
}

void BigInt::normalize() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t sum = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = uint32_t(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry) a.push_back(uint32_t(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t diff = int64_t(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = diff < 0;
        if (diff < 0) diff += int64_t(kBase);
        a[i] = uint32_t(diff);
    }
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = compare_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        add_mag(mag_, o.mag_);
        return *this;
    }
    int c = compare_mag(mag_, o.mag_);
    if (c == 0) {
        mag_.clear();
        sign_ = 0;
    } else if (c > 0) {
        sub_mag(mag_, o.mag_);
    } else {
        std::vector<uint32_t> tmp = o.mag_;
        sub_mag(tmp, mag_);
        mag_ = std::move(tmp);
        sign_ = o.sign_;
    }
    normalize();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        mag_.clear();
        sign_ = 0;
        return *this;
    }
    std::vector<uint32_t> prod(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = prod[i + j] + uint64_t(mag_[i]) * o.mag_[j] + carry;
            prod[i + j] = uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = prod[k] + carry;
            prod[k] = uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    mag_ = std::move(prod);
    sign_ *= o.sign_;
    normalize();
    return *this;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int cmp = compare_mag(a.mag_, b.mag_);
    if (cmp < 0) return {BigInt(), a};
    BigInt q, r;
    if (b.mag_.size() == 1) {
        // Single-limb fast path.
        uint64_t d = b.mag_[0];
        q.mag_.assign(a.mag_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.mag_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a.mag_[i];
            q.mag_[i] = uint32_t(cur / d);
            rem = cur % d;
        }
        if (rem) {
            r.mag_.push_back(uint32_t(rem));
            r.sign_ = 1;
        }
    } else {
        // Knuth algorithm D.
        int shift = 0;
        uint32_t top = b.mag_.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
        auto shl = [](const std::vector<uint32_t>& v, int s) {
            std::vector<uint32_t> out(v.size() + 1, 0);
            for (size_t i = 0; i < v.size(); ++i) {
                out[i] |= uint32_t(uint64_t(v[i]) << s);
                if (s) out[i + 1] = uint32_t(uint64_t(v[i]) >> (32 - s));
            }
            while (!out.empty() && out.back() == 0) out.pop_back();
            return out;
        };
        std::vector<uint32_t> u = shl(a.mag_, shift);
        std::vector<uint32_t> v = shl(b.mag_, shift);
        const size_t m = u.size(), t = v.size();
        u.resize(m + 1, 0);
        q.mag_.assign(m - t + 1, 0);
        for (size_t j = m - t + 1; j-- > 0;) {
            uint64_t num = (uint64_t(u[j + t]) << 32) | u[j + t - 1];
            uint64_t qhat = num / v[t - 1];
            uint64_t rhat = num % v[t - 1];
            while (qhat >= kBase || (t >= 2 && qhat * v[t - 2] > ((rhat << 32) | u[j + t - 2]))) {
                --qhat;
                rhat += v[t - 1];
                if (rhat >= kBase) break;
            }
            // u[j..j+t] -= qhat * v
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < t; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t diff = int64_t(u[i + j]) - int64_t(p & 0xffffffffu) - borrow;
                borrow = diff < 0;
                if (diff < 0) diff += int64_t(kBase);
                u[i + j] = uint32_t(diff);
            }
            int64_t diff = int64_t(u[j + t]) - int64_t(carry) - borrow;
            if (diff < 0) {
                // qhat was one too large: add back.
                diff += int64_t(kBase);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < t; ++i) {
                    uint64_t sum = c2 + u[i + j] + v[i];
                    u[i + j] = uint32_t(sum & 0xffffffffu);
                    c2 = sum >> 32;
                }
                diff += int64_t(c2);
                if (diff >= int64_t(kBase)) diff -= int64_t(kBase);
            }
            u[j + t] = uint32_t(diff);
            q.mag_[j] = uint32_t(qhat);
        }
        u.resize(t);
        // Undo the normalization shift on the remainder.
        if (shift) {
            for (size_t i = 0; i < u.size(); ++i) {
                uint32_t high = (i + 1 < u.size()) ? u[i + 1] : 0;
                u[i] = uint32_t((u[i] >> shift) | (uint64_t(high) << (32 - shift)));
            }
        }
        r.mag_ = std::move(u);
        r.sign_ = 1;
        r.normalize();
    }
    q.sign_ = a.sign_ * b.sign_;
    q.normalize();
    if (!r.is_zero()) r.sign_ = a.sign_;
    return {q, r};
}

BigInt BigInt::divexact(const BigInt& d) const {
    auto [q, r] = divmod(*this, d);
    if (!r.is_zero()) throw std::logic_error("BigInt::divexact: nonzero remainder");
    return q;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
        if (!b.mag_.empty()) b.sign_ = 1;
    }
    return a;
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt out;
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit '" + std::string(1, s[i]) + "'");
        out *= BigInt(10);
        out += BigInt(s[i] - '0');
    }
    if (!out.is_zero()) out.sign_ = sign;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> digits;  // base 10^9 chunks
    BigInt cur = abs();
    const BigInt chunk(1000000000);
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, chunk);
        digits.push_back(r.is_zero() ? 0 : r.mag_[0]);
        cur = std::move(q);
    }
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(digits.back());
    for (size_t i = digits.size() - 1; i-- > 0;) {
        std::string part = std::to_string(digits[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

double BigInt::to_double() const {
    double v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
}

bool BigInt::fits_longlong() const {
    if (mag_.size() > 2) return false;
    uint64_t mag = 0;
    for (size_t i = mag_.size(); i-- > 0;) mag = (mag << 32) | mag_[i];
    if (sign_ >= 0) return mag <= uint64_t(0x7fffffffffffffffULL);
    return mag <= uint64_t(1) << 63;
}

long long BigInt::to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: does not fit in long long");
    uint64_t mag = 0;
    for (size_t i = mag_.size(); i-- > 0;) mag = (mag << 32) | mag_[i];
    if (sign_ < 0) {
        if (mag == uint64_t(1) << 63) return -9223372036854775807LL - 1;
        return -(long long)(mag);
    }
    return (long long)(mag);
}

}  // namespace barbell
