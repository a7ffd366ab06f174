#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace edrg {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}

    Rational(long num, long den);
    explicit Rational(mpz_class v) : value_(std::move(v)) {}
    explicit Rational(mpq_class v);

    /// Parses "p" or "p/q" (optional leading sign on p).
    static Rational parse(std::string_view text);

    const mpq_class & value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    /// Canonical text: "p/q", or just "p" when q == 1.
    std::string to_string() const;

    Rational & operator+=(const Rational & o) { value_ += o.value_; return *this; }
    Rational & operator-=(const Rational & o) { value_ -= o.value_; return *this; }
    Rational & operator*=(const Rational & o) { value_ *= o.value_; return *this; }
    Rational & operator/=(const Rational & o);

    friend Rational operator+(Rational a, const Rational & b) { return a += b; }
    friend Rational operator-(Rational a, const Rational & b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational & b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational & b) { return a /= b; }
    friend Rational operator-(const Rational & a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational & a, const Rational & b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational & a, const Rational & b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

std::ostream & operator<<(std::ostream & os, const Rational & r);

} // namespace edrg
