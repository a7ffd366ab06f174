#include <edrg/errors.hh>
#include <edrg/rat_matrix.hh>

#include <sstream>

namespace edrg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major) :
    rows_(rows), cols_(cols), data_(std::move(row_major))
{
    if (data_.size() != rows * cols)
        throw DimensionMismatch("matrix data has " + std::to_string(data_.size()) + " entries, expected "
                + std::to_string(rows * cols));
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::all_ones(std::size_t rows, std::size_t cols)
{
    return RatMatrix(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

bool RatMatrix::is_integral() const
{
    for (const auto & e : data_)
        if (! e.is_integer())
            return false;
    return true;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix & RatMatrix::operator+=(const RatMatrix & o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum of mismatched shapes");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

RatMatrix & RatMatrix::operator-=(const RatMatrix & o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix difference of mismatched shapes");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

RatMatrix & RatMatrix::operator*=(const Rational & s)
{
    for (auto & e : data_)
        e *= s;
    return *this;
}

std::string RatMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
        os << '\n';
    }
    return os.str();
}

} // namespace edrg
