#include <edrg/rat_poly.hh>

#include <algorithm>
#include <ostream>

namespace edrg {

RatPoly::RatPoly(Rational constant)
{
    coeffs_.push_back(std::move(constant));
    normalise();
}

RatPoly::RatPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending))
{
    normalise();
}

RatPoly::RatPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending)
{
    normalise();
}

RatPoly RatPoly::x()
{
    return monomial(1);
}

RatPoly RatPoly::monomial(std::size_t degree, Rational coefficient)
{
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coefficient);
    return RatPoly(std::move(c));
}

void RatPoly::normalise()
{
    while (! coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

std::optional<std::size_t> RatPoly::degree() const noexcept
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Rational RatPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational{};
}

Rational RatPoly::operator()(const Rational & at) const
{
    Rational acc;
    for (auto c = coeffs_.rbegin(); c != coeffs_.rend(); ++c) {
        acc *= at;
        acc += *c;
    }
    return acc;
}

RatPoly & RatPoly::operator+=(const RatPoly & o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    normalise();
    return *this;
}

RatPoly & RatPoly::operator-=(const RatPoly & o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    normalise();
    return *this;
}

RatPoly & RatPoly::operator*=(const RatPoly & o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalise();
    return *this;
}

RatPoly & RatPoly::operator*=(const Rational & s)
{
    for (auto & c : coeffs_)
        c *= s;
    normalise();
    return *this;
}

RatPoly & RatPoly::operator/=(const Rational & s)
{
    for (auto & c : coeffs_)
        c /= s;
    return *this;
}

std::string RatPoly::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        if (! out.empty())
            out += " + ";
        out += "(" + coeffs_[k].to_string() + ")";
        if (k == 1)
            out += "*x";
        else if (k > 1)
            out += "*x^" + std::to_string(k);
    }
    return out;
}

std::ostream & operator<<(std::ostream & os, const RatPoly & p)
{
    return os << p.to_string();
}

} // namespace edrg
