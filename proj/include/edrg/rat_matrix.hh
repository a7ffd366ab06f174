#pragma once

#include <edrg/rational.hh>

#include <cstddef>
#include <string>
#include <vector>

namespace edrg {

/// Dense row-major matrix of exact rationals. Dimensions are fixed at construction.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

    static RatMatrix identity(std::size_t n);
    static RatMatrix all_ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Rational & operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<Rational> & entries() const noexcept { return data_; }

    /// True when every entry has denominator 1.
    bool is_integral() const;

    RatMatrix transpose() const;

    RatMatrix & operator+=(const RatMatrix & o);
    RatMatrix & operator-=(const RatMatrix & o);
    RatMatrix & operator*=(const Rational & s);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix & b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix & b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational & s) { return a *= s; }
    friend RatMatrix operator*(const Rational & s, RatMatrix a) { return a *= s; }

    friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace edrg
