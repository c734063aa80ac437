#include "barbell/rational.hpp"

#include <stdexcept>

namespace barbell {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

int Rational::compare(const Rational& o) const {
    return (num_ * o.den_).compare(o.num_ * den_);
}

Rational Rational::parse(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("Rational: empty token");
    size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt p = BigInt::from_string(s.substr(0, slash));
        BigInt q = BigInt::from_string(s.substr(slash + 1));
        return Rational(std::move(p), std::move(q));
    }
    size_t dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string digits(s.substr(0, dot));
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("Rational: trailing decimal point in '" + std::string(s) + "'");
        digits += std::string(frac);
        BigInt den(1);
        for (size_t i = 0; i < frac.size(); ++i) den *= BigInt(10);
        // "-0.25": the sign sits on the integer part.
        return Rational(BigInt::from_string(digits), std::move(den));
    }
    return Rational(BigInt::from_string(s), BigInt(1));
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace barbell
