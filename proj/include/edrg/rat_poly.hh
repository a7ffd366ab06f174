#pragma once

#include <edrg/rational.hh>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edrg {

/// Univariate polynomial with exact rational coefficients, stored in ascending degree.
///
/// The representation is normalised: the last stored coefficient is never zero, so the
/// zero polynomial has no coefficients and its degree is the empty optional.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(Rational constant);
    explicit RatPoly(std::vector<Rational> ascending);
    RatPoly(std::initializer_list<Rational> ascending);

    /// The polynomial x.
    static RatPoly x();
    static RatPoly monomial(std::size_t degree, Rational coefficient = 1);

    std::optional<std::size_t> degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of x^k; zero past the degree.
    Rational coeff(std::size_t k) const;
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    /// Horner evaluation.
    Rational operator()(const Rational & at) const;

    RatPoly & operator+=(const RatPoly & o);
    RatPoly & operator-=(const RatPoly & o);
    RatPoly & operator*=(const RatPoly & o);
    RatPoly & operator*=(const Rational & s);
    RatPoly & operator/=(const Rational & s);

    friend RatPoly operator+(RatPoly a, const RatPoly & b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly & b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly & b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rational & s) { return a *= s; }
    friend RatPoly operator*(const Rational & s, RatPoly a) { return a *= s; }
    friend RatPoly operator/(RatPoly a, const Rational & s) { return a /= s; }
    friend RatPoly operator-(RatPoly a) { return a *= Rational(-1); }

    friend bool operator==(const RatPoly &, const RatPoly &) = default;

    /// Nonzero terms in ascending degree joined by " + ", each "(c)", "(c)*x" or
    /// "(c)*x^k" with c canonical; the zero polynomial prints as "0".
    std::string to_string() const;

private:
    void normalise();

    std::vector<Rational> coeffs_;
};

std::ostream & operator<<(std::ostream & os, const RatPoly & p);

} // namespace edrg
