#include "cyclebal/truncated_series.hpp"

#include <algorithm>

#include "cyclebal/errors.hpp"

namespace cyclebal {

TruncatedSeries::TruncatedSeries(std::size_t max_degree, std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
    coefficients_.resize(max_degree + 1);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    if (other.max_degree() != max_degree()) throw UsageError("series truncation orders differ");
    for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    if (other.max_degree() != max_degree()) throw UsageError("series truncation orders differ");
    for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t top = std::min(a.max_degree(), b.max_degree());
    TruncatedSeries out(top);
    for (std::size_t i = 0; i <= top; ++i) {
        if (a.coefficients_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= top; ++j) out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    return out;
}

BigInt TruncatedSeries::sum_positive_degrees() const {
    BigInt total = 0;
    for (std::size_t k = 1; k < coefficients_.size(); ++k) total += coefficients_[k];
    return total;
}

std::string TruncatedSeries::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        if (coefficients_[k] == 0) continue;
        if (!s.empty()) s += " + ";
        s += coefficients_[k].str();
        if (k > 0) s += k == 1 ? " z" : " z^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace cyclebal
