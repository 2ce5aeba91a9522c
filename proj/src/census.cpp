#include "cyclebal/census.hpp"

#include <limits>

#include "cyclebal/errors.hpp"

namespace cyclebal {

BigInt CycleCensus::total_cycles() const {
    BigInt total = 0;
    for (const auto& c : counts_) total += c.positive + c.negative;
    return total;
}

CycleCensus& CycleCensus::operator+=(const CycleCensus& other) {
    if (other.max_length() != max_length()) throw UsageError("census lengths differ");
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        counts_[i].positive += other.counts_[i].positive;
        counts_[i].negative += other.counts_[i].negative;
    }
    return *this;
}

const BalanceRow* BalanceTable::find(std::size_t length) const {
    for (const auto& row : rows)
        if (row.length == length) return &row;
    return nullptr;
}

double ratio(const BigInt& numerator, const BigInt& denominator) {
    return static_cast<double>(numerator.convert_to<long double>() / denominator.convert_to<long double>());
}

BalanceRow balance_row(std::size_t length, const BigInt& n_pos, const BigInt& n_neg) {
    BalanceRow row;
    row.length = length;
    row.n_pos = n_pos;
    row.n_neg = n_neg;
    const BigInt total = n_pos + n_neg;
    if (total == 0) return row;
    row.r = ratio(n_neg, total);
    row.k = ratio(n_pos - n_neg, total);
    row.u = n_pos == 0 ? std::numeric_limits<double>::infinity() : ratio(n_neg, n_pos);
    return row;
}

void fill_from_ratio(BalanceRow& row, double r) {
    row.r = r;
    row.k = 1.0 - 2.0 * r;
    row.u = r >= 1.0 ? std::numeric_limits<double>::infinity() : r / (1.0 - r);
}

BalanceTable balance_table(const CycleCensus& census) {
    BalanceTable table;
    table.rows.reserve(census.max_length());
    for (std::size_t len = 1; len <= census.max_length(); ++len) {
        const auto& c = census.at(len);
        table.rows.push_back(balance_row(len, c.positive, c.negative));
    }
    return table;
}

}  // namespace cyclebal
