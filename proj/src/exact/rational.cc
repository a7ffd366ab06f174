#include <edrg/rational.hh>

#include <ostream>
#include <stdexcept>

namespace edrg {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::domain_error("rational with zero denominator: '" + s + "'");
    return Rational(q);
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational & Rational::operator/=(const Rational & o)
{
    if (o.is_zero())
        throw std::domain_error("division of a rational by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream & operator<<(std::ostream & os, const Rational & r)
{
    return os << r.to_string();
}

} // namespace edrg
