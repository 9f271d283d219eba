#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace bellsim {

// Exact rational p/q on int64 components, always normalized (q > 0, gcd = 1).
// Intermediate arithmetic runs in __int128 and reduces before narrowing;
// results that do not fit back into int64 throw std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return make(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                    i128(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return make(i128(x.num_) * y.den_ - i128(y.num_) * x.den_,
                    i128(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return make(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) = default;
    friend bool operator<(const Rational& x, const Rational& y) {
        // denominators are positive, so cross-multiplication keeps the order
        return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p" and "p/q".
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(std::stoll(text));
            return Rational(std::stoll(text.substr(0, slash)),
                            std::stoll(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational: '" + text + "'");
        } catch (const std::out_of_range&) {
            throw std::overflow_error("rational out of range: '" + text + "'");
        }
    }

    // Best rational approximation with denominator <= max_den (continued
    // fractions). Finite decimals round-trip exactly: 0.25 -> 1/4, 0.1 -> 1/10.
    static Rational from_double(double x, std::int64_t max_den = 1000000000) {
        if (!std::isfinite(x))
            throw std::invalid_argument("cannot convert non-finite value to rational");
        const bool negative = x < 0;
        double v = std::fabs(x);
        std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        for (int iter = 0; iter < 64; ++iter) {
            const double ip = std::floor(v);
            if (ip > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4))
                throw std::overflow_error("value too large for rational conversion");
            const auto a = static_cast<std::int64_t>(ip);
            const std::int64_t p2 = a * p1 + p0;
            const std::int64_t q2 = a * q1 + q0;
            if (q2 > max_den) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            const double rem = v - ip;
            if (rem < 1e-15) break;
            v = 1.0 / rem;
        }
        if (q1 == 0) throw std::overflow_error("rational conversion failed");
        return Rational(negative ? -p1 : p1, q1);
    }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;

    static u128 gcd128(u128 a, u128 b) {
        while (b != 0) {
            const u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const u128 g = gcd128(n < 0 ? u128(-n) : u128(n), u128(d));
        if (g > 1) { n /= i128(g); d /= i128(g); }
        constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// A number a + b*sqrt(2) with rational a, b. Closed under +, -, *, / and
// exactly comparable: since sqrt(2) is irrational the representation is
// unique, so equality is component-wise and the sign is decidable by
// comparing a^2 against 2 b^2.
class ExactNumber {
public:
    constexpr ExactNumber() = default;
    constexpr ExactNumber(std::int64_t n) : a_(n) {}
    ExactNumber(Rational a) : a_(a) {}
    ExactNumber(Rational a, Rational b) : a_(a), b_(b) {}

    static ExactNumber sqrt2(Rational coefficient = Rational(1)) {
        return ExactNumber(Rational(0), coefficient);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_rational() const { return b_.num() == 0; }

    friend ExactNumber operator+(const ExactNumber& x, const ExactNumber& y) {
        return ExactNumber(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend ExactNumber operator-(const ExactNumber& x, const ExactNumber& y) {
        return ExactNumber(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend ExactNumber operator*(const ExactNumber& x, const ExactNumber& y) {
        // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s,  s = sqrt(2)
        return ExactNumber(x.a_ * y.a_ + Rational(2) * (x.b_ * y.b_),
                           x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend ExactNumber operator/(const ExactNumber& x, const ExactNumber& y) {
        // 1/(c + d s) = (c - d s)/(c^2 - 2 d^2); the norm vanishes only at 0
        const Rational norm = y.a_ * y.a_ - Rational(2) * (y.b_ * y.b_);
        if (norm.num() == 0) throw std::domain_error("division by zero ExactNumber");
        return ExactNumber((x.a_ * y.a_ - Rational(2) * (x.b_ * y.b_)) / norm,
                           (x.b_ * y.a_ - x.a_ * y.b_) / norm);
    }
    ExactNumber operator-() const { return ExactNumber(-a_, -b_); }
    ExactNumber& operator+=(const ExactNumber& y) { return *this = *this + y; }
    ExactNumber& operator-=(const ExactNumber& y) { return *this = *this - y; }
    ExactNumber& operator*=(const ExactNumber& y) { return *this = *this * y; }
    ExactNumber& operator/=(const ExactNumber& y) { return *this = *this / y; }

    friend bool operator==(const ExactNumber& x, const ExactNumber& y) = default;

    int sign() const {
        const int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // a and b*sqrt(2) pull in opposite directions: compare |a|^2 vs 2|b|^2,
        // i.e. (p s)^2 vs 2 (r q)^2 for a = p/q, b = r/s
        const u128 x = u128(abs64(a_.num())) * u128(b_.den());
        const u128 y = u128(abs64(b_.num())) * u128(a_.den());
        constexpr u128 limit = u128(1) << 62;
        if (x >= limit || y >= limit)
            throw std::overflow_error("ExactNumber sign comparison overflow");
        const u128 x2 = x * x, y2 = 2 * y * y;
        if (x2 == y2) return 0;  // unreachable for nonzero b: sqrt(2) is irrational
        return (x2 > y2) == (sa > 0) ? 1 : -1;
    }

    ExactNumber abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator<(const ExactNumber& x, const ExactNumber& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const ExactNumber& x, const ExactNumber& y) { return y < x; }
    friend bool operator<=(const ExactNumber& x, const ExactNumber& y) { return !(y < x); }
    friend bool operator>=(const ExactNumber& x, const ExactNumber& y) { return !(x < y); }

    double to_double() const {
        return a_.to_double() + b_.to_double() * 1.4142135623730950488;
    }

    std::string str() const {
        if (is_rational()) return a_.str();
        return a_.str() + " + " + b_.str() + "*sqrt(2)";
    }

private:
    using u128 = unsigned __int128;
    static std::uint64_t abs64(std::int64_t v) {
        return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    }

    Rational a_;
    Rational b_;
};

}  // namespace bellsim
