#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclebal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial in z truncated above a fixed degree.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t max_degree = 0) : coefficients_(max_degree + 1) {}
    TruncatedSeries(std::size_t max_degree, std::vector<BigInt> coefficients);

    std::size_t max_degree() const noexcept { return coefficients_.size() - 1; }
    const BigInt& operator[](std::size_t degree) const { return coefficients_.at(degree); }
    BigInt& operator[](std::size_t degree) { return coefficients_.at(degree); }
    const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    /// Product truncated at min of the two max degrees.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Sum of all coefficients of degree >= 1.
    BigInt sum_positive_degrees() const;

    std::string to_string() const;

private:
    std::vector<BigInt> coefficients_;
};

}  // namespace cyclebal
